#pragma once

// Natural densities measured at finite bounds, with exact rational ratios,
// and the class-number scans built on the batch tables.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dihedra/class_group.hpp"

namespace dihedra {

struct DensityLimits {
    u64 max_simple = 100'000'000;       ///< predicates on integers
    u64 max_class_group = 4'000'000;    ///< anything needing class numbers
};

/// Subset of the positive integers given by a membership predicate, with an
/// optional enumerator listing the members <= X in ascending order.
struct IntegerSet {
    std::function<bool(u64)> contains;
    std::function<std::vector<u64>(u64)> enumerate;
};

IntegerSet all_integers();
IntegerSet residue_class(u64 modulus, u64 residue);
/// Squarefree integers; membership up to `table_limit` uses a sieve built once.
IntegerSet squarefree_integers(u64 table_limit = 0);
IntegerSet multiples_of(u64 n);
IntegerSet set_union(IntegerSet a, IntegerSet b);
IntegerSet set_intersection(IntegerSet a, IntegerSet b);
IntegerSet set_difference(IntegerSet a, IntegerSet b);
/// nA = {n a : a in A}.
IntegerSet dilate(IntegerSet a, u64 n);

struct DensityEstimate {
    u64 bound = 0;
    u64 count_member = 0;
    u64 count_ambient = 0;
    mpq_class ratio; ///< count_member / count_ambient (0 when the ambient count is 0)

    double decimal() const { return ratio.get_d(); }
};

DensityEstimate make_estimate(u64 bound, u64 member, u64 ambient);

/// #{m <= X : m in M and m in N} / #{m <= X : m in N}. Throws ResourceLimit
/// when X exceeds limits.max_simple.
DensityEstimate estimate(const IntegerSet &m, const IntegerSet &n, u64 x, const DensityLimits &limits = {});

/// #{a <= X : a in A}, by the enumerator when present.
u64 count_upto(const IntegerSet &a, u64 x);

struct LandauSample {
    u64 x = 0;
    u64 count = 0;  ///< M(x)
    double ratio = 0; ///< M(x) (log x)^(1 - r/phi(A)) / x
};

/// Geometric sample points 10^(k/4) (rounded) from 10 up to X, with X
/// appended when it is not itself a sample.
std::vector<u64> geometric_grid(u64 x, u64 start = 10, unsigned per_decade = 4);

/// M(x) = #{n <= x : every prime factor of n is congruent to a residue in
/// `residues` mod A}, at the grid points, with the normalized ratio.
std::vector<LandauSample> landau_count(u64 x, u64 modulus, const std::vector<u64> &residues,
                                       const std::vector<u64> &grid = {}, const DensityLimits &limits = {});

struct ScanRow {
    i64 disc = 0;
    u64 class_number = 0;
    AbelianGroup structure;
};

/// Fundamental D with |D| <= X whose class group has exponent 3, ascending |D|.
std::vector<ScanRow> exponent3_scan(u64 x, const BatchOptions &opts = {}, const DensityLimits &limits = {});
std::vector<ScanRow> exponent3_scan(const ClassNumberTable &table, u64 x);

/// For each target order, the number of fundamental D with |D| < X and
/// h(D) equal to it.
std::map<u64, u64> class_order_census(u64 x, const std::vector<u64> &orders, const BatchOptions &opts = {},
                                      const DensityLimits &limits = {});
std::map<u64, u64> class_order_census(const ClassNumberTable &table, u64 x, const std::vector<u64> &orders);

/// p-suitability of CL(-d) for squarefree d = 3 mod 4, decided from h(-d)
/// when possible and from the full structure otherwise.
bool suitable_from_class_number(i64 disc, u64 h, u64 p);

/// flags[d] for d <= X: d squarefree, d = 3 mod 4, CL(Q(sqrt(-d))) p-suitable.
std::vector<bool> suitable_divisor_flags(u64 p, const ClassNumberTable &table, u64 x);

/// Sieve: N <= X qualifies when some flagged d divides it (multiples of each
/// flagged d are marked).
std::vector<bool> hp_sieve(const std::vector<bool> &flags, u64 x);

/// Direct predicate: some divisor of n is flagged (divisors from the
/// factorization of n).
bool hp_direct(u64 n, const std::vector<bool> &flags);

DensityEstimate suitable_divisor_density(u64 p, u64 x, const BatchOptions &opts = {}, const DensityLimits &limits = {});
DensityEstimate suitable_divisor_density(u64 p, const ClassNumberTable &table, u64 x);

/// Share of fundamental D with |D| <= X whose class number is a power of p
/// (1 included).
DensityEstimate pgroup_density(u64 p, u64 x, const BatchOptions &opts = {}, const DensityLimits &limits = {});
DensityEstimate pgroup_density(u64 p, const ClassNumberTable &table, u64 x);

/// Construction of A_6 from the squarefree d = 3 mod 4 with a flag: odd
/// square dilations, then primes = 3 mod 4, then factors 2 and powers of 4.
/// Reading step five as A_4 together with 2 A_4.
std::vector<bool> a_chain_sieve(const std::vector<bool> &flags, u64 x);

} // namespace dihedra
