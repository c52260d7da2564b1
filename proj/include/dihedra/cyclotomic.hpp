#pragma once

// Exact elements of Z[zeta_h], stored as integer combinations of the powers
// zeta^0, ..., zeta^(h-1). Equality is decided in Z[x]/(Phi_h).

#include <ostream>
#include <vector>

#include "dihedra/arith.hpp"

namespace dihedra {

/// Coefficients of the h-th cyclotomic polynomial, lowest degree first.
std::vector<i64> cyclotomic_polynomial(u64 h);

class Cyclotomic {
public:
    explicit Cyclotomic(u64 h);
    static Cyclotomic integer(u64 h, i64 value);
    /// zeta^e for any integer e.
    static Cyclotomic root(u64 h, i64 e);

    u64 order() const { return h_; }
    const std::vector<i64> &coeffs() const { return c_; }

    Cyclotomic operator+(const Cyclotomic &o) const;
    Cyclotomic operator-(const Cyclotomic &o) const;
    Cyclotomic operator*(const Cyclotomic &o) const;
    Cyclotomic operator*(i64 k) const;
    Cyclotomic &operator+=(const Cyclotomic &o);

    /// Canonical representative of degree < phi(h).
    std::vector<i64> normal_form() const;

    friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);
    friend std::ostream &operator<<(std::ostream &os, const Cyclotomic &z);

private:
    void check_same(const Cyclotomic &o) const;
    u64 h_;
    std::vector<i64> c_;
};

} // namespace dihedra
