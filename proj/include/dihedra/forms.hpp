#pragma once

// Positive definite binary quadratic forms: reduction, Gauss composition,
// enumeration of reduced forms, prime forms and the amortized class-number
// sweep.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dihedra/arith.hpp"

namespace dihedra {

/// True iff D < 0 is the discriminant of an imaginary quadratic field.
/// Non-discriminants and D >= 0 give false.
bool is_fundamental(i64 d);

/// A negative discriminant D = 0, 1 (mod 4), stored signed.
class Discriminant {
public:
    /// Throws std::invalid_argument unless d < 0 and d = 0, 1 (mod 4).
    explicit Discriminant(i64 d);

    i64 value() const { return value_; }
    u64 abs() const { return static_cast<u64>(-value_); }
    bool fundamental() const { return fundamental_; }

    friend auto operator<=>(const Discriminant &a, const Discriminant &b) { return a.value_ <=> b.value_; }
    friend bool operator==(const Discriminant &a, const Discriminant &b) { return a.value_ == b.value_; }

private:
    i64 value_;
    bool fundamental_;
};

struct QuadForm {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;

    i64 discriminant() const { return b * b - 4 * a * c; }
    bool is_positive_definite() const { return a > 0 && discriminant() < 0; }
    bool is_reduced() const;
    bool is_primitive() const { return gcd(gcd(a, b), c) == 1; }
    QuadForm inverse() const { return {a, -b, c}; }

    /// Value of the form at (x, y).
    i64 operator()(i64 x, i64 y) const { return a * x * x + b * x * y + c * y * y; }

    friend auto operator<=>(const QuadForm &, const QuadForm &) = default;
    friend std::ostream &operator<<(std::ostream &os, const QuadForm &f)
    {
        return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
    }
};

/// Packs a reduced form into a hashable key; (a, b) determine c.
inline u64 form_key(const QuadForm &f)
{
    return (static_cast<u64>(f.a) << 32) ^ static_cast<u64>(static_cast<std::uint32_t>(f.b));
}

/// The principal form of discriminant D: (1, D mod 2, (1 - D)/4 or -D/4).
QuadForm principal_form(const Discriminant &d);

/// Unique reduced form equivalent to f. Throws std::domain_error if f is not
/// positive definite.
QuadForm reduce(QuadForm f);

/// Gauss composition followed by reduction. Throws std::invalid_argument if
/// the discriminants differ.
QuadForm compose(const QuadForm &f, const QuadForm &g);

/// f^n under composition (n >= 0; negative n uses the inverse).
QuadForm power(const QuadForm &f, i64 n);

/// The primitive reduced forms of discriminant D, ordered by a, then |b|,
/// then positive b first. Length is h(D).
std::vector<QuadForm> enumerate_reduced(const Discriminant &d);

/// Same, with a smallest-prime-factor table covering 4*sqrt(|D|/3) to speed
/// up the per-a square roots.
std::vector<QuadForm> enumerate_reduced(const Discriminant &d, std::span<const std::uint32_t> spf);

struct Inert {
    friend bool operator==(const Inert &, const Inert &) = default;
};

struct Ramified {
    /// The reduced form of the ramified prime ideal; absent when the prime
    /// divides the conductor of a non-fundamental discriminant.
    std::optional<QuadForm> form;
    friend bool operator==(const Ramified &, const Ramified &) = default;
};

using PrimeFormResult = std::variant<QuadForm, Inert, Ramified>;

/// Classifies the prime ell in the order of discriminant D by the Kronecker
/// symbol (D | ell). In the split case returns reduce((ell, b, (b^2 - D)/(4 ell)))
/// where b = D (mod 2) is the smaller of the two square roots of D mod 4 ell
/// in (0, 2 ell].
PrimeFormResult prime_form(const Discriminant &d, u64 ell);

/// Class numbers of the fundamental discriminants with |D| <= max_abs_disc,
/// indexed by |D| (entries for non-fundamental |D| are 0).
struct ClassNumberTable {
    u64 max_abs_disc = 0;
    std::vector<std::uint32_t> h;

    /// h(D) for fundamental D, 0 otherwise. |D| must be within range.
    std::uint32_t at(i64 d) const;

    /// Visits (D, h) for every fundamental D, ascending |D|.
    void for_each(const std::function<void(i64, std::uint32_t)> &fn) const;

    std::size_t fundamental_count() const;
};

struct BatchOptions {
    unsigned workers = 1;
    /// Largest bound accepted before ResourceLimit is raised.
    u64 max_bound = 400'000'000;
};

/// One amortized sweep over all reduced (a, b, c) with |b^2 - 4ac| <= X.
/// Requires X >= 3.
ClassNumberTable batch_class_numbers(u64 max_abs_disc, const BatchOptions &opts = {});

/// Fundamental-discriminant flags for |D| <= limit, by squarefree sieve.
std::vector<bool> fundamental_flags(u64 limit);

} // namespace dihedra
