#pragma once

// Cohen-Lenstra weights w(G) = 1/#Aut(G), weighted sums over groups of
// bounded order, and the empirical comparison with class numbers.

#include <functional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "dihedra/abelian.hpp"
#include "dihedra/forms.hpp"

namespace dihedra {

/// All partitions of v, each descending, in reverse lexicographic order.
std::vector<std::vector<int>> partitions(int v);

/// One group per isomorphism class of order n (products of partitions of
/// the prime exponents).
std::vector<AbelianGroup> enumerate_groups(u64 n);

mpq_class weight(const AbelianGroup &g);

struct WeightedGroup {
    AbelianGroup group;
    u64 order = 1;
    mpq_class w;
};

/// Every group of order <= x with order coprime to all primes in s.
/// Throws ResourceLimit if x exceeds max_order.
std::vector<WeightedGroup> weighted_group_table(const std::set<u64> &s, u64 x, u64 max_order = 1'000'000);

/// Sum of w(G) over groups of order <= x coprime to s.
mpq_class weighted_sum_coprime(const std::set<u64> &s, u64 x);

/// Sum of 1/(p - 1) over primes p <= x not in s.
mpq_class prime_lower_bound(const std::set<u64> &s, u64 x);

/// (sum of f(G) w(G)) / (sum of w(G)) over groups of order <= x coprime to s.
mpq_class partial_average(const std::function<bool(const AbelianGroup &)> &f, const std::set<u64> &s, u64 x);

/// 1 - prod_{k >= 1} (1 - p^-k), summed until the terms vanish in double.
double predicted_divisibility(u64 p);

struct ClComparison {
    u64 p = 0;
    u64 bound = 0;
    u64 divisible = 0;
    u64 total = 0;
    double empirical = 0;
    double predicted = 0;
    double abs_diff() const { return empirical > predicted ? empirical - predicted : predicted - empirical; }
};

/// Share of fundamental D with |D| <= X and p | h(D) against the prediction.
/// Requires an odd prime p.
ClComparison empirical_cl_comparison(u64 p, const ClassNumberTable &table, u64 x);
ClComparison empirical_cl_comparison(u64 p, u64 x, const BatchOptions &opts = {});

} // namespace dihedra
