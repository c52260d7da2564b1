#include "dihedra/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace dihedra {

namespace {

i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in group arithmetic");
    return r;
}

i64 checked_sub(i64 a, i64 b)
{
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in group arithmetic");
    return r;
}

i64 checked_add(i64 a, i64 b)
{
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in group arithmetic");
    return r;
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<i64> invariant_factors) : factors_(std::move(invariant_factors))
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2) throw std::invalid_argument("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
            throw std::invalid_argument("invariant factors must form a divisor chain");
        }
    }
}

AbelianGroup AbelianGroup::from_cyclic_orders(const std::vector<i64> &orders)
{
    std::map<i64, std::vector<int>> parts;
    for (i64 n : orders) {
        if (n < 1) throw std::invalid_argument("cyclic orders must be positive");
        for (auto [q, e] : factorize(static_cast<u64>(n))) parts[static_cast<i64>(q)].push_back(static_cast<int>(e));
    }
    return from_primary(parts);
}

AbelianGroup AbelianGroup::from_primary(const std::map<i64, std::vector<int>> &parts)
{
    std::size_t rank = 0;
    for (const auto &[q, exps] : parts) {
        std::size_t nonzero = std::count_if(exps.begin(), exps.end(), [](int e) { return e > 0; });
        rank = std::max(rank, nonzero);
    }
    // The i-th largest invariant factor collects the i-th largest prime power
    // at every prime.
    std::vector<i64> desc(rank, 1);
    for (const auto &[q, exps] : parts) {
        std::vector<int> sorted(exps);
        std::sort(sorted.rbegin(), sorted.rend());
        for (std::size_t i = 0; i < sorted.size() && sorted[i] > 0; ++i) {
            for (int k = 0; k < sorted[i]; ++k) desc[i] = checked_mul(desc[i], q);
        }
    }
    std::reverse(desc.begin(), desc.end());
    return AbelianGroup(std::move(desc));
}

AbelianGroup AbelianGroup::parse(std::string_view chain)
{
    std::vector<i64> factors;
    while (!chain.empty()) {
        auto semi = chain.find(';');
        std::string_view token = chain.substr(0, semi);
        i64 value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed invariant factor chain");
        }
        factors.push_back(value);
        if (semi == std::string_view::npos) break;
        chain.remove_prefix(semi + 1);
    }
    return AbelianGroup(std::move(factors));
}

u64 AbelianGroup::order() const
{
    u64 n = 1;
    for (i64 d : factors_) n *= static_cast<u64>(d);
    return n;
}

std::vector<int> AbelianGroup::partition_at(i64 q) const
{
    std::vector<int> out;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
        i64 d = *it;
        int e = 0;
        while (d % q == 0) {
            d /= q;
            ++e;
        }
        if (e == 0) break;
        out.push_back(e);
    }
    return out;
}

std::map<i64, std::vector<int>> AbelianGroup::primary_parts() const
{
    std::map<i64, std::vector<int>> parts;
    if (factors_.empty()) return parts;
    for (u64 q : prime_divisors(static_cast<u64>(factors_.back()))) {
        parts[static_cast<i64>(q)] = partition_at(static_cast<i64>(q));
    }
    return parts;
}

std::string AbelianGroup::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(factors_[i]);
    }
    return out;
}

bool has_cyclic_quotient(const AbelianGroup &g, i64 h)
{
    if (h < 1) throw std::invalid_argument("has_cyclic_quotient: h must be positive");
    return g.exponent() % h == 0;
}

bool surjects_onto(const AbelianGroup &g, const AbelianGroup &target)
{
    for (const auto &[q, small] : target.primary_parts()) {
        std::vector<int> big = g.partition_at(q);
        if (big.size() < small.size()) return false;
        for (std::size_t i = 0; i < small.size(); ++i) {
            if (big[i] < small[i]) return false;
        }
    }
    return true;
}

SuitabilityReport is_p_suitable(const AbelianGroup &g, i64 p)
{
    SuitabilityReport report;
    report.p = p;
    i64 e = g.exponent();
    while (e % p == 0) e /= p;
    const i64 bound = p * p - 1;
    // Cyclic quotient orders are exactly the divisors of the exponent; the
    // valid ones are the divisors of its prime-to-p part not dividing p^2-1.
    if (bound % e == 0) return report;
    for (i64 h = 2; h <= e; ++h) {
        if (e % h == 0 && bound % h != 0) {
            report.suitable = true;
            report.witness_h = h;
            break;
        }
    }
    return report;
}

mpz_class aut_order(const AbelianGroup &g)
{
    mpz_class total = 1;
    for (const auto &[q, desc] : g.primary_parts()) {
        // Automorphisms of Z/q^e1 x ... x Z/q^ek with e1 <= ... <= ek.
        std::vector<int> e(desc.rbegin(), desc.rend());
        const std::size_t k = e.size();
        auto qpow = [q = q](unsigned long n) {
            mpz_class r;
            mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), n);
            return r;
        };
        mpz_class count = 1;
        for (std::size_t j = 0; j < k; ++j) {
            // 1-based d_j = max{l : e_l = e_j}, c_j = min{l : e_l = e_j}.
            std::size_t d = j, c = j;
            while (d + 1 < k && e[d + 1] == e[j]) ++d;
            while (c > 0 && e[c - 1] == e[j]) --c;
            const std::size_t d1 = d + 1, c1 = c + 1;
            count *= qpow(d1) - qpow(j);
            count *= qpow(static_cast<unsigned long>(e[j]) * (k - d1));
            count *= qpow(static_cast<unsigned long>(e[j] - 1) * (k - c1 + 1));
        }
        total *= count;
    }
    return total;
}

SmithForm smith_normal_form(std::vector<std::vector<i64>> m)
{
    const std::size_t n = m.size();
    for (const auto &row : m) {
        if (row.size() != n) throw std::invalid_argument("smith_normal_form: matrix must be square");
    }
    SmithForm out;
    out.v.assign(n, std::vector<i64>(n, 0));
    out.v_inverse.assign(n, std::vector<i64>(n, 0));
    for (std::size_t i = 0; i < n; ++i) out.v[i][i] = out.v_inverse[i][i] = 1;

    auto swap_rows = [&](std::size_t a, std::size_t b) { std::swap(m[a], m[b]); };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (auto &row : m) std::swap(row[a], row[b]);
        for (auto &row : out.v) std::swap(row[a], row[b]);
        std::swap(out.v_inverse[a], out.v_inverse[b]);
    };
    // row_i -= q * row_t
    auto row_axpy = [&](std::size_t i, std::size_t t, i64 q) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
    };
    // col_j -= q * col_t, tracked in V and V^{-1}.
    auto col_axpy = [&](std::size_t j, std::size_t t, i64 q) {
        for (std::size_t i = 0; i < n; ++i) {
            m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
            out.v[i][j] = checked_sub(out.v[i][j], checked_mul(q, out.v[i][t]));
        }
        for (std::size_t c = 0; c < n; ++c) {
            out.v_inverse[t][c] = checked_add(out.v_inverse[t][c], checked_mul(q, out.v_inverse[j][c]));
        }
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t bi = n, bj = n;
            for (std::size_t i = t; i < n; ++i) {
                for (std::size_t j = t; j < n; ++j) {
                    if (m[i][j] != 0 && (bi == n || std::abs(m[i][j]) < std::abs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
                }
            }
            if (bi == n) break;
            if (bi != t) swap_rows(bi, t);
            if (bj != t) swap_cols(bj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (m[i][t] != 0) {
                    row_axpy(i, t, m[i][t] / m[t][t]);
                    if (m[i][t] != 0) clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (m[t][j] != 0) {
                    col_axpy(j, t, m[t][j] / m[t][t]);
                    if (m[t][j] != 0) clean = false;
                }
            }
            if (!clean) continue;

            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i) {
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == n) break;
            for (std::size_t j = 0; j < n; ++j) m[t][j] = checked_add(m[t][j], m[bad][j]);
        }
        if (m[t][t] < 0) {
            for (std::size_t j = 0; j < n; ++j) m[t][j] = -m[t][j];
        }
    }
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = m[i][i];
    return out;
}

} // namespace dihedra
