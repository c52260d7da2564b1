#pragma once

// Arithmetic in F_{p^m} = F_p[x] / (modulus) with a monic irreducible modulus.

#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include <gmpxx.h>

#include "dihedra/arith.hpp"

namespace dihedra {

using Coeffs = std::vector<std::uint32_t>;

class FieldContext;
using FieldPtr = std::shared_ptr<const FieldContext>;

/// Immutable description of F_{p^m}. Elements keep a shared pointer to it.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    /// `modulus` holds m+1 coefficients, lowest degree first, monic. Throws
    /// std::invalid_argument if it is not irreducible over F_p or p is not a
    /// prime below 2^31.
    static FieldPtr create(u64 p, Coeffs modulus);

    u64 p() const { return p_; }
    unsigned degree() const { return m_; }
    const Coeffs &modulus() const { return modulus_; }
    /// p^m - 1, the order of the multiplicative group.
    const mpz_class &unit_group_order() const { return unit_order_; }

    /// Reduces a product polynomial (any length) in place to m coefficients.
    void reduce(std::vector<u64> &poly) const;

private:
    FieldContext(u64 p, Coeffs modulus);

    u64 p_;
    unsigned m_;
    Coeffs modulus_;
    std::vector<std::pair<unsigned, std::uint32_t>> tail_; ///< x^m = sum of c_j x^j
    mpz_class unit_order_;
};

/// Irreducibility over F_p by gcd with x^(p^k) - x for k <= deg/2.
bool is_irreducible(u64 p, const Coeffs &poly);

/// The field with p^m elements whose modulus is the first irreducible monic
/// polynomial of degree m when the coefficients (c0, ..., c_{m-1}) are read
/// as a base-p counter with c0 least significant.
FieldPtr make_field(u64 p, unsigned m);

/// Memoized make_field for repeated sweeps.
FieldPtr field_cached(u64 p, unsigned m);

class FieldElement {
public:
    FieldElement(FieldPtr ctx, Coeffs coeffs);
    static FieldElement zero(const FieldPtr &ctx);
    static FieldElement one(const FieldPtr &ctx);
    static FieldElement constant(const FieldPtr &ctx, i64 value);
    /// The class of x itself (the generator of the polynomial basis).
    static FieldElement variable(const FieldPtr &ctx);
    /// The n-th element in counter order (coefficients as base-p digits of n).
    static FieldElement from_index(const FieldPtr &ctx, u64 n);

    const FieldPtr &context() const { return ctx_; }
    const Coeffs &coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement &o) const;
    FieldElement operator-(const FieldElement &o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement &o) const;

    FieldElement square() const;
    FieldElement pow(u64 e) const;
    FieldElement pow(const mpz_class &e) const;
    /// Multiplicative inverse. Throws std::domain_error on 0.
    FieldElement inverse() const;
    /// x^(p^k), k applications of the Frobenius map.
    FieldElement frobenius(unsigned k = 1) const;

    /// True iff the element lies in the subfield F_{p^s}: x^(p^s) = x.
    bool in_subfield(unsigned s) const { return frobenius(s) == *this; }
    /// Degree over F_p of the field generated by this element.
    unsigned degree() const;

    /// True iff the multiplicative order is exactly h.
    bool has_exact_order(u64 h) const;

    friend bool operator==(const FieldElement &a, const FieldElement &b) { return a.c_ == b.c_; }
    friend bool operator<(const FieldElement &a, const FieldElement &b) { return a.c_ < b.c_; }
    friend std::ostream &operator<<(std::ostream &os, const FieldElement &e);

private:
    FieldPtr ctx_;
    Coeffs c_;
};

/// An element of exact multiplicative order h: g^((p^m-1)/h) for the first
/// candidate g in counter order that yields order exactly h. Throws
/// std::invalid_argument unless h divides p^m - 1.
FieldElement element_of_order(const FieldPtr &ctx, u64 h);

} // namespace dihedra
