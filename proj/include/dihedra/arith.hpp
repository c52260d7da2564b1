#pragma once

// Word-size number theory shared by every module: gcd, modular powers,
// Kronecker symbols, Tonelli-Shanks, square roots modulo composites and a
// smallest-prime-factor sieve.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dihedra {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Raised when a requested bound exceeds a configured memory/time budget.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets u, v with u*a + v*b = g.
i64 xgcd(i64 a, i64 b, i64 &u, i64 &v);

/// Floor division and the matching non-negative remainder.
inline i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Trial-division factorization, ascending primes with multiplicities.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// Distinct prime divisors of n, ascending.
std::vector<u64> prime_divisors(u64 n);

bool is_squarefree(u64 n);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1 and n >= 1.
u64 multiplicative_order(u64 a, u64 n);

/// Kronecker symbol (a | n) for any integer a and n >= 0.
int kronecker(i64 a, i64 n);

/// Square root of a modulo an odd prime p by Tonelli-Shanks. The quadratic
/// non-residue is the least one, so the result is deterministic. Returns the
/// root r with 0 <= r <= p/2 (the other root is p - r). Throws
/// std::domain_error if a is not a square modulo p.
u64 sqrt_mod_prime(u64 a, u64 p);

/// All x in [0, m) with x^2 = a (mod m), ascending. m >= 1.
/// `spf`, when non-empty, is a smallest-prime-factor table covering m.
std::vector<u64> sqrt_mod_all(i64 a, u64 m, std::span<const std::uint32_t> spf = {});

/// Linear sieve: spf[n] is the smallest prime factor of n for 2 <= n <= limit
/// (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

/// Primes up to limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

} // namespace dihedra
