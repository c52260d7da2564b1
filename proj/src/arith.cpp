#include "dihedra/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

namespace dihedra {

i64 gcd(i64 a, i64 b)
{
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 lcm(i64 a, i64 b)
{
    if (a == 0 || b == 0) return 0;
    return std::abs(a / gcd(a, b) * b);
}

i64 xgcd(i64 a, i64 b, i64 &u, i64 &v)
{
    i64 u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        i64 q = a / b;
        i64 t = a - q * b;
        a = b;
        b = t;
        t = u0 - q * u1;
        u0 = u1;
        u1 = t;
        t = v0 - q * v1;
        v0 = v1;
        v1 = t;
    }
    if (a < 0) {
        a = -a;
        u0 = -u0;
        v0 = -v0;
    }
    u = u0;
    v = v0;
    return a;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n)
{
    if (n < 2) return false;
    static constexpr std::array<u64, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : small) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
    std::vector<std::pair<u64, unsigned>> out;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    take(2);
    take(3);
    for (u64 p = 5; p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (auto [p, e] : factorize(n)) out.push_back(p);
    return out;
}

bool is_squarefree(u64 n)
{
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return false;
    }
    return true;
}

u64 multiplicative_order(u64 a, u64 n)
{
    if (n == 1) return 1;
    if (std::gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, n) != 1");
    // The order divides phi(n).
    u64 phi = n;
    for (u64 p : prime_divisors(n)) phi = phi / p * (p - 1);
    u64 order = phi;
    for (u64 q : prime_divisors(phi)) {
        while (order % q == 0 && powmod(a, order / q, n) == 1) order /= q;
    }
    return order;
}

int kronecker(i64 a, i64 n)
{
    if (n < 0) throw std::invalid_argument("kronecker: n must be non-negative");
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int v = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++v;
        }
        i64 a8 = mod(a, 8);
        if ((v & 1) && (a8 == 3 || a8 == 5)) result = -result;
    }
    // Jacobi symbol for odd n.
    i64 x = mod(a, n);
    i64 y = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            i64 r = y % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) result = -result;
        x %= y;
    }
    return y == 1 ? result : 0;
}

u64 sqrt_mod_prime(u64 a, u64 p)
{
    a %= p;
    if (p == 2 || a == 0) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) throw std::domain_error("sqrt_mod_prime: not a quadratic residue");

    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        u64 t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

namespace {

// Roots of x^2 = a modulo q^k.
std::vector<u64> sqrt_mod_prime_power(i64 a, u64 q, unsigned k)
{
    u64 qk = 1;
    for (unsigned i = 0; i < k; ++i) qk *= q;
    u64 amod = static_cast<u64>(mod(a, static_cast<i64>(qk)));

    std::vector<u64> roots;
    if (q != 2 && amod % q != 0) {
        if (powmod(amod % q, (q - 1) / 2, q) != 1) return roots;
        u64 r = sqrt_mod_prime(amod % q, q);
        u64 modulus = q;
        for (unsigned j = 1; j < k; ++j) {
            modulus *= q;
            // Newton step: r <- r - (r^2 - a) / (2r) mod q^(j+1).
            u64 a_j = amod % modulus;
            u64 f = (mulmod(r, r, modulus) + modulus - a_j) % modulus;
            i64 inv, unused;
            xgcd(static_cast<i64>((2 * r) % modulus), static_cast<i64>(modulus), inv, unused);
            u64 inv_u = static_cast<u64>(mod(inv, static_cast<i64>(modulus)));
            r = (r + modulus - mulmod(f, inv_u, modulus)) % modulus;
        }
        roots = {r, (qk - r) % qk};
    } else {
        // q = 2 or q | a: the modulus here stays small in practice (q^k | 4a
        // for form enumeration), so direct search is adequate.
        for (u64 x = 0; x < qk; ++x) {
            if (mulmod(x, x, qk) == amod) roots.push_back(x);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace

std::vector<u64> sqrt_mod_all(i64 a, u64 m, std::span<const std::uint32_t> spf)
{
    if (m == 0) throw std::invalid_argument("sqrt_mod_all: modulus must be positive");
    if (m == 1) return {0};

    std::vector<std::pair<u64, unsigned>> factors;
    if (!spf.empty() && m < spf.size()) {
        u64 n = m;
        while (n > 1) {
            u64 p = spf[n];
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            factors.emplace_back(p, e);
        }
    } else {
        factors = factorize(m);
    }

    std::vector<u64> roots{0};
    u64 modulus = 1;
    for (auto [q, k] : factors) {
        std::vector<u64> local = sqrt_mod_prime_power(a, q, k);
        if (local.empty()) return {};
        u64 qk = 1;
        for (unsigned i = 0; i < k; ++i) qk *= q;
        // CRT: x = r (mod modulus), x = s (mod qk).
        i64 inv, unused;
        xgcd(static_cast<i64>(modulus % qk), static_cast<i64>(qk), inv, unused);
        u64 inv_u = static_cast<u64>(mod(inv, static_cast<i64>(qk)));
        std::vector<u64> next;
        next.reserve(roots.size() * local.size());
        for (u64 r : roots) {
            for (u64 s : local) {
                u64 diff = (s + qk - r % qk) % qk;
                u64 t = mulmod(diff, inv_u, qk);
                next.push_back(r + modulus * t);
            }
        }
        roots = std::move(next);
        modulus *= qk;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit)
{
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = i;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            u64 ip = static_cast<u64>(i) * p;
            if (p > spf[i] || ip > limit) break;
            spf[ip] = p;
        }
    }
    return spf;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit)
{
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

} // namespace dihedra
