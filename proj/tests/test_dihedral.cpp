#include "doctest.h"

#include <set>

#include "dihedra/dihedral.hpp"
#include "oracles.hpp"

using namespace dihedra;

TEST_CASE("irreducibility agrees with trial division")
{
    for (u64 p : {2ull, 3ull, 5ull}) {
        for (unsigned m = 1; m <= (p == 2 ? 8u : 4u); ++m) {
            Coeffs f(m + 1, 0);
            f[m] = 1;
            while (true) {
                INFO("p=" << p << " m=" << m);
                CHECK(is_irreducible(p, f) == oracle::irreducible_brute(p, f));
                unsigned i = 0;
                while (i < m && ++f[i] == p) f[i++] = 0;
                if (i == m) break;
            }
        }
    }
}

TEST_CASE("field construction")
{
    CHECK(make_field(2, 1)->modulus() == Coeffs{0, 1});
    CHECK(make_field(3, 2)->modulus() == Coeffs{1, 0, 1});
    const auto f16 = make_field(2, 4);
    CHECK(f16->unit_group_order() == 15);
    CHECK(f16->modulus() == Coeffs{1, 1, 0, 0, 1});
    CHECK_THROWS_AS(FieldContext::create(2, {1, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(FieldContext::create(4, {1, 1}), std::invalid_argument);

    // Every nonzero element of a small field is invertible and x^(p^m) = x.
    for (auto [p, m] : {std::pair<u64, unsigned>{2, 4}, {3, 3}, {5, 2}, {7, 2}}) {
        const auto ctx = make_field(p, m);
        u64 size = 1;
        for (unsigned i = 0; i < m; ++i) size *= p;
        std::set<Coeffs> seen;
        for (u64 n = 0; n < size; ++n) {
            const auto x = FieldElement::from_index(ctx, n);
            seen.insert(x.coeffs());
            CHECK(x.frobenius(m) == x);
            if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        }
        CHECK(seen.size() == size);
    }
}

TEST_CASE("elements of exact order")
{
    const auto f16 = make_field(2, 4);
    CHECK(element_of_order(f16, 1).is_one());
    const auto x5 = element_of_order(f16, 5);
    CHECK(x5.has_exact_order(5));
    const auto one = FieldElement::one(f16);
    CHECK((x5.pow(4) + x5.pow(3) + x5.pow(2) + x5 + one).is_zero());
    CHECK(element_of_order(make_field(2, 2), 3).has_exact_order(3));
    CHECK_THROWS_AS(element_of_order(f16, 7), std::invalid_argument);

    const auto big = make_field(7, 12);
    const auto g = element_of_order(big, 13);
    CHECK(g.has_exact_order(13));
    CHECK(g.degree() == 12);
}

TEST_CASE("trace set examples")
{
    const auto t3 = dihedral_trace_set(3, 2);
    CHECK(t3.traces.size() == 2);
    CHECK(traces_all_in_subfield(t3, 1));

    const auto t5 = dihedral_trace_set(5, 2);
    CHECK(t5.m == 4);
    CHECK_FALSE(traces_all_in_subfield(t5, 1));
    CHECK(traces_all_in_subfield(t5, 2));
    CHECK(trace_field_degree(t5) == 2);
    const auto one = FieldElement::one(t5.ctx);
    bool found = false;
    for (const auto &t : t5.traces) found = found || (t * t == t + one);
    CHECK(found);

    for (u64 p : {2ull, 3ull, 7ull}) {
        const auto t1 = dihedral_trace_set(1, p);
        std::set<Coeffs> vals;
        for (const auto &t : t1.traces) vals.insert(t.coeffs());
        CHECK(vals == std::set<Coeffs>{{0}, {static_cast<std::uint32_t>(2 % p)}});
    }
    CHECK_THROWS_AS(dihedral_trace_set(6, 3), std::invalid_argument);
}

TEST_CASE("trace field over all small orders")
{
    for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
        for (u64 h = 1; h <= 200; ++h) {
            if (h % p == 0) continue;
            INFO("h=" << h << " p=" << p);
            const auto ts = dihedral_trace_set(h, p);
            CHECK(ts.rotation_traces.size() == h / 2 + 1);
            std::set<Coeffs> distinct;
            for (const auto &t : ts.rotation_traces) distinct.insert(t.coeffs());
            CHECK(distinct.size() == h / 2 + 1);

            // All traces lie in F_p exactly when D_h embeds via a cyclic
            // subgroup of F_p^x or of the norm-one torus of F_{p^2}.
            const bool in_fp = (p - 1) % h == 0 || (p + 1) % h == 0;
            CHECK(traces_all_in_subfield(ts, 1) == in_fp);
            // Traces always lie in F_{p^2} when h | p^2 - 1.
            if ((p * p - 1) % h == 0) CHECK(trace_field_degree(ts) <= 2);

            // t in F_p forces x in F_{p^2}; x in F_{p^2} iff ord(x) | p^2 - 1.
            const auto x = element_of_order(ts.ctx, h);
            FieldElement xi = FieldElement::one(ts.ctx);
            for (u64 i = 0; i < h; ++i) {
                const u64 ord = h / static_cast<u64>(gcd(static_cast<i64>(i), static_cast<i64>(h)));
                CHECK(xi.in_subfield(2) == ((p * p - 1) % ord == 0));
                const auto t = xi + xi.inverse();
                if (t.in_subfield(1)) CHECK((p * p - 1) % ord == 0);
                xi = xi * x;
            }
        }
    }
}

TEST_CASE("dihedral matrix group has order 2h")
{
    for (u64 p : {2ull, 3ull, 5ull, 7ull}) {
        for (u64 h = 1; h <= 50; ++h) {
            if (h % p == 0) continue;
            INFO("h=" << h << " p=" << p);
            CHECK(dihedral_matrix_group(h, p).size() == (h == 1 ? 2 : 2 * h));
        }
    }
}
