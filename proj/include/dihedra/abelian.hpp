#pragma once

// Finite abelian groups in invariant-factor form, the p-suitability test and
// automorphism counts.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dihedra/arith.hpp"

namespace dihedra {

/// A finite abelian group Z/d1 x ... x Z/dk with d1 | d2 | ... | dk and every
/// di >= 2. The empty chain is the trivial group.
class AbelianGroup {
public:
    AbelianGroup() = default;

    /// Validates the divisor chain; throws std::invalid_argument otherwise.
    explicit AbelianGroup(std::vector<i64> invariant_factors);

    /// Normalizes an arbitrary list of cyclic orders (entries of 1 are
    /// dropped) into invariant-factor form.
    static AbelianGroup from_cyclic_orders(const std::vector<i64> &orders);

    /// Builds the group from its primary decomposition: prime -> partition
    /// (exponents of the cyclic p-power factors, any order).
    static AbelianGroup from_primary(const std::map<i64, std::vector<int>> &parts);

    /// Parses the semicolon-joined chain ("3;3", "" for the trivial group).
    static AbelianGroup parse(std::string_view chain);

    const std::vector<i64> &invariant_factors() const { return factors_; }
    std::size_t rank() const { return factors_.size(); }
    bool is_trivial() const { return factors_.empty(); }

    u64 order() const;
    i64 exponent() const { return factors_.empty() ? 1 : factors_.back(); }

    /// Exponents of the cyclic q-power factors, descending.
    std::vector<int> partition_at(i64 q) const;

    /// prime -> partition (descending) for every prime dividing the order.
    std::map<i64, std::vector<int>> primary_parts() const;

    /// Semicolon-joined ascending chain.
    std::string to_string() const;

    friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;

private:
    std::vector<i64> factors_;
};

/// True iff G has a quotient isomorphic to Z/h, i.e. h divides exp(G).
bool has_cyclic_quotient(const AbelianGroup &g, i64 h);

/// True iff g surjects onto target: every primary partition of target fits
/// inside the corresponding partition of g.
bool surjects_onto(const AbelianGroup &g, const AbelianGroup &target);

struct SuitabilityReport {
    i64 p = 0;
    bool suitable = false;
    std::optional<i64> witness_h; ///< smallest valid cyclic-quotient order
};

/// G is p-suitable when it has a cyclic quotient of order h with p not
/// dividing h and h not dividing p^2 - 1.
SuitabilityReport is_p_suitable(const AbelianGroup &g, i64 p);

/// #Aut(G), as the product over primes of the automorphism counts of the
/// primary components.
mpz_class aut_order(const AbelianGroup &g);

/// Smith normal form of a square integer matrix: diag = U * m * V with U, V
/// unimodular. Returns the diagonal (non-negative, each dividing the next),
/// V and V^{-1}.
struct SmithForm {
    std::vector<i64> diagonal;
    std::vector<std::vector<i64>> v;
    std::vector<std::vector<i64>> v_inverse;
};
SmithForm smith_normal_form(std::vector<std::vector<i64>> m);

} // namespace dihedra
