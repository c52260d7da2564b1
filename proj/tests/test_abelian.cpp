#include "doctest.h"

#include "dihedra/abelian.hpp"
#include "oracles.hpp"

using namespace dihedra;

namespace {

std::optional<i64> brute_suitability_witness(const std::vector<i64> &orders, i64 p)
{
    for (i64 h : orders) {
        if (h % p != 0 && (p * p - 1) % h != 0) return h;
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("group basics")
{
    const AbelianGroup c3c3({3, 3});
    CHECK(c3c3.order() == 9);
    CHECK(c3c3.exponent() == 3);
    CHECK(c3c3.to_string() == "3;3");
    CHECK(AbelianGroup::parse("3;3") == c3c3);
    CHECK(AbelianGroup::parse("").is_trivial());
    CHECK(AbelianGroup().exponent() == 1);
    CHECK(AbelianGroup().order() == 1);
    CHECK(AbelianGroup::from_cyclic_orders({4, 6, 1}) == AbelianGroup({2, 12}));
    CHECK(AbelianGroup::from_primary({{2, {1, 2}}, {3, {1}}}) == AbelianGroup({2, 12}));
    CHECK_THROWS_AS(AbelianGroup({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup({1}), std::invalid_argument);
    CHECK_THROWS_AS(AbelianGroup::parse("3;x"), std::invalid_argument);
}

TEST_CASE("cyclic quotients and suitability examples")
{
    CHECK(has_cyclic_quotient(AbelianGroup({3, 3}), 3));
    CHECK_FALSE(has_cyclic_quotient(AbelianGroup({3, 3}), 9));
    CHECK(has_cyclic_quotient(AbelianGroup({2, 4}), 4));
    CHECK(has_cyclic_quotient(AbelianGroup(), 1));

    for (i64 p : {2, 3, 5, 7}) CHECK_FALSE(is_p_suitable(AbelianGroup(), p).suitable);
    CHECK_FALSE(is_p_suitable(AbelianGroup({3, 3}), 2).suitable);
    const auto five = is_p_suitable(AbelianGroup({5}), 2);
    CHECK(five.suitable);
    CHECK(five.witness_h == 5);
    // Prime-to-p part: C_8 is 3-unsuitable (8 | 8) but C_16 is not.
    CHECK_FALSE(is_p_suitable(AbelianGroup({8}), 3).suitable);
    CHECK(is_p_suitable(AbelianGroup({16}), 3).witness_h == 16);
    CHECK(is_p_suitable(AbelianGroup({45}), 3).witness_h == 5);
}

TEST_CASE("smith normal form")
{
    const auto snf = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(snf.diagonal == std::vector<i64>{2, 6, 12});
    const auto snf2 = smith_normal_form({{3, 0}, {0, 2}});
    CHECK(snf2.diagonal == std::vector<i64>{1, 6});
    // V * V^{-1} = I
    for (const auto &s : {snf, snf2}) {
        const std::size_t n = s.v.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                i64 acc = 0;
                for (std::size_t k = 0; k < n; ++k) acc += s.v[i][k] * s.v_inverse[k][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("automorphism counts")
{
    CHECK(aut_order(AbelianGroup()) == 1);
    CHECK(aut_order(AbelianGroup({3, 3})) == 48);
    CHECK(aut_order(AbelianGroup({2, 4})) == 8);
    for (i64 p : {2, 3, 5, 7, 11, 101}) CHECK(aut_order(AbelianGroup({p})) == p - 1);
    CHECK(aut_order(AbelianGroup({2, 2, 2})) == 168);
}

TEST_CASE("oracle equivalence over all groups of order <= 64")
{
    const auto chains = oracle::chains_up_to(64);
    CHECK(chains.size() == 1 + 1 + 1 + 2 + 1 + 1 + 1 + 3 + 2 + 1 + 1 + 2 + 1 + 1 + 1 + 5 + 1 + 2 + 1 + 2 + 1 + 1 + 1 + 3 + 2 + 1 + 3 + 2 + 1 + 1 + 1 + 7 +
                              1 + 1 + 1 + 4 + 1 + 1 + 1 + 3 + 1 + 1 + 1 + 2 + 2 + 1 + 1 + 5 + 2 + 2 + 1 + 2 + 1 + 3 + 1 + 3 + 1 + 1 + 1 + 2 + 1 + 1 + 2 + 11);
    for (const auto &chain : chains) {
        const AbelianGroup g(chain);
        const oracle::ExplicitGroup explicit_group(chain);
        const std::vector<i64> quotients = oracle::cyclic_quotient_orders(explicit_group);
        INFO("G=[" << g.to_string() << "]");

        for (i64 h = 1; h <= 64; ++h) {
            const bool brute = std::find(quotients.begin(), quotients.end(), h) != quotients.end();
            CHECK(has_cyclic_quotient(g, h) == brute);
        }
        for (i64 p : {2, 3, 5, 7}) {
            const auto report = is_p_suitable(g, p);
            const auto witness = brute_suitability_witness(quotients, p);
            CHECK(report.suitable == witness.has_value());
            CHECK(report.witness_h == witness);
            if (report.suitable) {
                CHECK(g.exponent() % *report.witness_h == 0);
                CHECK(*report.witness_h % p != 0);
                CHECK((p * p - 1) % *report.witness_h != 0);
            }
        }
        CHECK(aut_order(g) == oracle::aut_count_brute(explicit_group));
    }
}

TEST_CASE("suitability is inherited from quotients")
{
    const auto chains = oracle::chains_up_to(64);
    for (const auto &big : chains) {
        for (const auto &small : chains) {
            const AbelianGroup g(big), q(small);
            if (!surjects_onto(g, q)) continue;
            for (i64 p : {2, 3, 5, 7}) {
                if (is_p_suitable(q, p).suitable) CHECK(is_p_suitable(g, p).suitable);
            }
        }
    }
    CHECK(surjects_onto(AbelianGroup({2, 4}), AbelianGroup({4})));
    CHECK_FALSE(surjects_onto(AbelianGroup({8}), AbelianGroup({2, 2})));
}
