#include "doctest.h"

#include <set>

#include "dihedra/cohen_lenstra.hpp"
#include "oracles.hpp"

using namespace dihedra;

namespace {

// Sum of 1/#Aut over groups of order p^v: p^(v(v+1)/2 - v) / prod_{i<=v} (p^i - 1).
mpq_class primary_mass(u64 p, int v)
{
    mpz_class num, den = 1, pi = 1;
    mpz_ui_pow_ui(num.get_mpz_t(), p, static_cast<unsigned long>(v * (v + 1) / 2 - v));
    for (int i = 1; i <= v; ++i) {
        pi *= p;
        den *= pi - 1;
    }
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpq_class mass_of_order(u64 n)
{
    mpq_class m = 1;
    for (auto [p, e] : factorize(n)) m *= primary_mass(p, e);
    return m;
}

} // namespace

TEST_CASE("partitions and group enumeration")
{
    const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101};
    for (int v = 0; v <= 13; ++v) CHECK(partitions(v).size() == counts[static_cast<std::size_t>(v)]);
    CHECK(enumerate_groups(1) == std::vector<AbelianGroup>{AbelianGroup()});
    CHECK(enumerate_groups(4).size() == 2);
    CHECK(enumerate_groups(36).size() == 4);

    // Against every invariant-factor chain of order <= 2000.
    std::map<i64, std::set<std::vector<i64>>> chains;
    for (const auto &c : oracle::chains_up_to(2000)) {
        i64 n = 1;
        for (i64 d : c) n *= d;
        chains[n].insert(c);
    }
    for (u64 n = 1; n <= 10000; ++n) {
        const auto groups = enumerate_groups(n);
        std::size_t expect = 1;
        for (auto [p, e] : factorize(n)) expect *= counts[static_cast<std::size_t>(e)];
        CHECK(groups.size() == expect);
        std::set<std::vector<i64>> seen;
        for (const auto &g : groups) {
            CHECK(g.order() == n);
            seen.insert(g.invariant_factors());
        }
        CHECK(seen.size() == groups.size());
        if (n <= 2000) CHECK(seen == chains[static_cast<i64>(n)]);
    }
}

TEST_CASE("weights")
{
    CHECK(weight(AbelianGroup()) == 1);
    for (i64 p : {2, 3, 5, 7, 101}) CHECK(weight(AbelianGroup({p})) == mpq_class(1, p - 1));
    CHECK(weight(AbelianGroup({3, 3})) == mpq_class(1, 48));
    for (u64 n = 1; n <= 3000; ++n) {
        mpq_class s = 0;
        for (const auto &g : enumerate_groups(n)) s += weight(g);
        CHECK(s == mass_of_order(n));
    }
}

TEST_CASE("weighted sums")
{
    CHECK(weighted_sum_coprime({2}, 3) == mpq_class(3, 2));
    std::set<u64> all_small;
    for (u64 p : primes_up_to(50)) all_small.insert(p);
    CHECK(weighted_sum_coprime(all_small, 50) == 1);

    mpq_class prev = 0;
    for (u64 x : {10ull, 100ull, 1000ull}) {
        const mpq_class s = weighted_sum_coprime({2, 3}, x);
        mpq_class oracle_sum = 0;
        for (u64 n = 1; n <= x; ++n) {
            if (n % 2 != 0 && n % 3 != 0) oracle_sum += mass_of_order(n);
        }
        CHECK(s == oracle_sum);
        CHECK(s > prime_lower_bound({2, 3}, x));
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("partial averages")
{
    CHECK(partial_average([](const AbelianGroup &) { return true; }, {2}, 200) == 1);
    std::set<u64> s;
    for (u64 p : primes_up_to(100)) s.insert(p);
    mpq_class prev = 2;
    for (u64 x : {101ull, 200ull, 500ull, 1000ull, 2000ull}) {
        const mpq_class v = partial_average([](const AbelianGroup &g) { return g.is_trivial(); }, s, x);
        CHECK(v >= 0);
        CHECK(v <= 1);
        CHECK(v <= prev);
        prev = v;
    }

    // Share of weight on groups of order divisible by 3 climbs slowly toward
    // the Cohen-Lenstra value from below.
    mpq_class last = 0;
    for (u64 x : {100ull, 1000ull, 10000ull}) {
        const mpq_class v = partial_average([](const AbelianGroup &g) { return g.order() % 3 == 0; }, {2}, x);
        CHECK(v > last);
        CHECK(v.get_d() < predicted_divisibility(3));
        last = v;
    }
    CHECK(last.get_d() > 0.39);
}

TEST_CASE("cohen-lenstra predictions")
{
    for (u64 p : {3ull, 5ull, 7ull}) {
        mpq_class prod = 1;
        for (unsigned k = 1; k <= 60; ++k) {
            mpz_class pk;
            mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
            prod *= mpq_class(pk - 1, pk);
        }
        CHECK(std::abs(predicted_divisibility(p) - (1 - prod.get_d())) < 1e-12);
    }
    CHECK(std::abs(predicted_divisibility(3) - 0.4399) < 1e-4);
    const auto c = empirical_cl_comparison(3, 100);
    CHECK(c.total > 0);
    CHECK(c.divisible <= c.total);
    CHECK_THROWS_AS(empirical_cl_comparison(2, 100), std::invalid_argument);
}
