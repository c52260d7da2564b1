#include "doctest.h"

#include <numbers>

#include "dihedra/density.hpp"
#include "oracles.hpp"

using namespace dihedra;

namespace {

bool squarefree_by_definition(u64 n)
{
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
    }
    return true;
}

u64 landau_brute(u64 x, u64 modulus, const std::vector<u64> &residues)
{
    u64 count = 0;
    for (u64 n = 1; n <= x; ++n) {
        u64 m = n;
        bool ok = true;
        for (u64 q = 2; q <= m && ok; ++q) {
            if (m % q != 0) continue;
            ok = std::find(residues.begin(), residues.end(), q % modulus) != residues.end();
            while (m % q == 0) m /= q;
        }
        count += ok;
    }
    return count;
}

} // namespace

TEST_CASE("estimates on simple sets")
{
    const auto e1 = estimate(all_integers(), all_integers(), 100);
    CHECK(e1.ratio == 1);
    const auto e4 = estimate(multiples_of(4), all_integers(), 100000);
    CHECK(e4.count_member == 25000);
    CHECK(e4.ratio == mpq_class(1, 4));

    const auto sf = squarefree_integers(10000);
    for (u64 n = 1; n <= 10000; ++n) CHECK(sf.contains(n) == squarefree_by_definition(n));
    CHECK(squarefree_integers(10).contains(1000003));

    const auto b = residue_class(4, 3);
    const auto a = set_intersection(squarefree_integers(1000000), b);
    const auto e = estimate(a, b, 1000000);
    CHECK(std::abs(e.decimal() - 8 / (std::numbers::pi * std::numbers::pi)) < 0.01);
    CHECK_THROWS_AS(estimate(a, b, 1000, DensityLimits{100, 100}), ResourceLimit);
}

TEST_CASE("dilation")
{
    const auto odd = residue_class(2, 1);
    const auto d1 = dilate(odd, 1);
    const auto d2 = dilate(odd, 2);
    for (u64 n = 1; n <= 200; ++n) {
        CHECK(d1.contains(n) == odd.contains(n));
        CHECK(d2.contains(n) == (n % 4 == 2));
    }
    CHECK(d2.enumerate(20) == std::vector<u64>{2, 6, 10, 14, 18});

    const auto b = residue_class(4, 3);
    const auto a = set_intersection(squarefree_integers(100000), b);
    for (u64 n : {1ull, 3ull, 9ull, 25ull}) {
        const auto big = estimate(dilate(a, n), dilate(b, n), 100000);
        const auto small = estimate(a, b, 100000 / n);
        CHECK(big.count_member == small.count_member);
        CHECK(big.count_ambient == small.count_ambient);
    }
}

TEST_CASE("landau counts match factorization")
{
    CHECK(landau_count(100, 4, {1}, {100}).front().count == 15);
    CHECK(landau_brute(100, 4, {1}) == 15);
    for (u64 x : {1ull, 2ull, 50ull, 1000ull}) {
        CHECK(landau_count(x, 4, {1, 3}, {x}).front().count == (x + 1) / 2);
        CHECK(landau_count(x, 3, {}, {x}).front().count == 1);
    }
    const std::vector<std::pair<u64, std::vector<u64>>> cases{{4, {1}}, {4, {3}}, {3, {1}}, {5, {1, 4}}, {8, {1, 7}}, {7, {2, 3}}};
    for (const auto &[modulus, residues] : cases) {
        const auto grid = geometric_grid(3000);
        const auto samples = landau_count(3000, modulus, residues, grid);
        REQUIRE(samples.size() == grid.size());
        for (const auto &s : samples) CHECK(s.count == landau_brute(s.x, modulus, residues));
    }
    CHECK_THROWS_AS(landau_count(100, 4, {2}), std::invalid_argument);
}

TEST_CASE("exponent-3 scan and census")
{
    CHECK(exponent3_scan(20).empty());
    const auto rows = exponent3_scan(1000);
    std::vector<i64> expect;
    for (i64 a = 3; a <= 1000; ++a) {
        if (!is_fundamental(-a)) continue;
        const auto forms = oracle::reduced_forms_brute(-a);
        // Exponent 3 iff h > 1 and every form cubed is principal.
        bool all3 = forms.size() > 1;
        for (const auto &f : forms) all3 = all3 && power(f, 3) == principal_form(Discriminant(-a));
        if (all3) expect.push_back(-a);
    }
    std::vector<i64> got;
    for (const auto &r : rows) got.push_back(r.disc);
    CHECK(got == expect);
    CHECK(std::find(got.begin(), got.end(), -23) != got.end());
    CHECK(std::find(got.begin(), got.end(), -31) != got.end());

    u64 h1 = 0;
    for (i64 a = 3; a < 50; ++a) h1 += is_fundamental(-a) && oracle::reduced_forms_brute(-a).size() == 1;
    CHECK(class_order_census(50, {1}).at(1) == h1);
    CHECK(h1 == 7);
    CHECK_THROWS_AS(class_order_census(5000000, {1}), ResourceLimit);
}

TEST_CASE("suitability from class numbers")
{
    const auto table = batch_class_numbers(20000);
    table.for_each([&](i64 d, std::uint32_t h) {
        for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
            INFO("D=" << d << " p=" << p);
            CHECK(suitable_from_class_number(d, h, p) == is_p_suitable(class_group(Discriminant(d)).structure, static_cast<i64>(p)).suitable);
        }
    });
}

TEST_CASE("H_p sieve agrees with the divisor predicate")
{
    const u64 x = 100000;
    const auto table = batch_class_numbers(x);
    for (u64 p : {2ull, 3ull}) {
        const auto flags = suitable_divisor_flags(p, table, x);
        const auto sieve = hp_sieve(flags, x);
        const auto chain = a_chain_sieve(flags, x);
        u64 mismatches = 0, chain_outside = 0;
        for (u64 n = 1; n <= x; ++n) {
            mismatches += sieve[n] != hp_direct(n, flags);
            chain_outside += chain[n] && !sieve[n];
        }
        CHECK(mismatches == 0);
        CHECK(chain_outside == 0);
    }
    CHECK(suitable_divisor_density(2, 10).count_member == 0);
    const auto e = suitable_divisor_density(2, table, x);
    CHECK(e.ratio > 0);
    CHECK(e.ratio < 1);
}

TEST_CASE("p-group densities")
{
    const auto table = batch_class_numbers(100000);
    const auto d4 = pgroup_density(2, table, 10000);
    const auto d5 = pgroup_density(2, table, 100000);
    CHECK(d5.ratio < d4.ratio);
    const auto small = pgroup_density(3, table, 50);
    u64 expect = 0, total = 0;
    for (i64 a = 3; a <= 50; ++a) {
        if (!is_fundamental(-a)) continue;
        ++total;
        u64 h = oracle::reduced_forms_brute(-a).size();
        while (h % 3 == 0) h /= 3;
        expect += h == 1;
    }
    CHECK(small.count_member == expect);
    CHECK(small.count_ambient == total);
}
