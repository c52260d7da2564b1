#include "doctest.h"

#include "dihedra/arith.hpp"
#include "oracles.hpp"

using namespace dihedra;

TEST_CASE("kronecker agrees with the definition")
{
    for (i64 a = -60; a <= 60; ++a) {
        for (i64 n = 0; n <= 120; ++n) {
            INFO("a=" << a << " n=" << n);
            CHECK(kronecker(a, n) == oracle::kronecker_by_definition(a, n));
        }
    }
}

TEST_CASE("tonelli-shanks square roots")
{
    for (u64 p : {3ull, 5ull, 7ull, 13ull, 17ull, 97ull, 257ull, 65537ull, 1000000007ull}) {
        for (u64 a = 1; a < std::min<u64>(p, 300); ++a) {
            if (kronecker(static_cast<i64>(a), static_cast<i64>(p)) != 1) {
                CHECK_THROWS_AS(sqrt_mod_prime(a, p), std::domain_error);
                continue;
            }
            const u64 r = sqrt_mod_prime(a, p);
            CHECK(mulmod(r, r, p) == a);
            CHECK(r <= p / 2);
        }
    }
}

TEST_CASE("square roots modulo composites match exhaustive search")
{
    for (u64 m = 1; m <= 400; ++m) {
        for (i64 a : {-23, -47, -4027, -20, -3, -4, 0, 1, 9}) {
            std::vector<u64> expect;
            for (u64 x = 0; x < m; ++x) {
                if (static_cast<i64>((x * x) % m) == mod(a, static_cast<i64>(m))) expect.push_back(x);
            }
            CHECK(sqrt_mod_all(a, m) == expect);
        }
    }
    const auto spf = smallest_prime_factors(1000);
    for (u64 m = 1; m <= 1000; m += 7) CHECK(sqrt_mod_all(-4027, m, spf) == sqrt_mod_all(-4027, m));
}

TEST_CASE("primality, factorization and orders")
{
    const auto spf = smallest_prime_factors(10000);
    const auto primes = primes_up_to(10000);
    std::size_t count = 0;
    for (u64 n = 0; n <= 10000; ++n) {
        const bool prime = n >= 2 && spf[n] == n;
        CHECK(is_prime(n) == prime);
        count += prime;
    }
    CHECK(count == primes.size());
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(3215031751ull)); // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(factorize(5000948753ull * 4).front().first == 2);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(multiplicative_order(3, 1) == 1);
    CHECK(is_squarefree(4027));
    CHECK_FALSE(is_squarefree(12));
}
