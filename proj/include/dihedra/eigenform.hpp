#pragma once

// Weight-one dihedral eigenforms attached to class-group characters: prime
// coefficients, theta-series coefficients, reduction mod p and witness search.

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "dihedra/class_group.hpp"
#include "dihedra/cyclotomic.hpp"

namespace dihedra {

/// A character of the form class group with values in the h-th roots of
/// unity, recorded by its exponent log(f) in Z/h.
class ClassCharacter {
public:
    /// Character of exact order h obtained from the coordinate on the last
    /// invariant factor. Throws std::invalid_argument unless h divides the
    /// exponent of the group.
    ClassCharacter(std::shared_ptr<const ClassGroupData> data, u64 h);

    const Discriminant &disc() const { return data_->record.disc; }
    u64 order() const { return h_; }
    const ClassGroupData &data() const { return *data_; }

    /// Exponent of chi(f) for any form of this discriminant (reduced first).
    i64 log(const QuadForm &f) const;
    Cyclotomic value(const QuadForm &f) const { return Cyclotomic::root(h_, log(f)); }

private:
    std::shared_ptr<const ClassGroupData> data_;
    u64 h_;
};

ClassCharacter make_character(const Discriminant &d, u64 h);
ClassCharacter make_character(std::shared_ptr<const ClassGroupData> data, u64 h);

struct SplitCoeff {
    i64 e = 0; ///< a = zeta^e + zeta^-e
};
struct InertCoeff {};
struct RamifiedCoeff {
    /// Exponent of chi at the ramified prime class (0 or h/2); absent when
    /// the prime divides the conductor, in which case a = 0.
    std::optional<i64> e;
};

struct EigenCoefficient {
    u64 h = 1;
    u64 ell = 0;
    std::variant<SplitCoeff, InertCoeff, RamifiedCoeff> kind;

    Cyclotomic value() const;
};

EigenCoefficient eigen_coeff(const ClassCharacter &chi, u64 ell);

/// a_1, ..., a_n (index 0 unused) from the prime coefficients by
/// multiplicativity and a_{l^(k+1)} = a_l a_{l^k} - (D|l) a_{l^(k-1)}.
std::vector<Cyclotomic> euler_expansion(const ClassCharacter &chi, u64 n);

/// a_n = 1/2 * sum over reduced forms A of chi(A) * #{(x, y) : A(x, y) = n}.
/// Throws std::invalid_argument for D = -3, -4 or n = 0.
Cyclotomic theta_coeff_oracle(const ClassCharacter &chi, u64 n);

/// Whether the reduction of the coefficient to a field of characteristic p
/// lies in F_p. Inert and ramified coefficients always do. Throws
/// std::invalid_argument if p divides h for a split coefficient.
bool coeff_in_prime_field(const EigenCoefficient &c, u64 p);

/// Degree over F_p of the reduced coefficient.
unsigned coeff_field_degree(const EigenCoefficient &c, u64 p);

struct Witness {
    u64 ell = 0;
    EigenCoefficient coeff;
    unsigned field_degree = 0;
};
struct NotFoundUpToBound {
    u64 bound = 0;
};

struct WitnessSearch {
    i64 disc = 0;
    u64 class_number = 1;
    u64 p = 0;
    std::optional<u64> character_order; ///< witness h when the group is p-suitable
    std::variant<Witness, NotFoundUpToBound> result;

    bool found() const { return std::holds_alternative<Witness>(result); }
};

/// Smallest prime ell <= bound whose coefficient leaves F_p, for the
/// character of order is_p_suitable(...).witness_h. Groups that are not
/// p-suitable are not searched.
WitnessSearch find_witness(const Discriminant &d, u64 p, u64 bound);
WitnessSearch find_witness(std::shared_ptr<const ClassGroupData> data, u64 p, u64 bound);

} // namespace dihedra
