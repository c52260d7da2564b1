#include "dihedra/dihedral.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dihedra {

namespace {

unsigned ambient_degree(u64 h, u64 p)
{
    if (!is_prime(p)) throw std::invalid_argument("dihedral: p must be prime");
    if (h == 0 || gcd(static_cast<i64>(h), static_cast<i64>(p)) != 1) throw std::invalid_argument("dihedral: need gcd(h, p) = 1");
    return h == 1 ? 1u : static_cast<unsigned>(multiplicative_order(p % h, h));
}

} // namespace

TraceSet dihedral_trace_set(u64 h, u64 p)
{
    TraceSet ts;
    ts.h = h;
    ts.p = p;
    ts.m = ambient_degree(h, p);
    ts.ctx = field_cached(p, ts.m);
    const FieldElement x = element_of_order(ts.ctx, h);
    const FieldElement xinv = x.inverse();
    FieldElement xi = FieldElement::one(ts.ctx);
    FieldElement xmi = xi;
    for (u64 i = 0; i <= h / 2; ++i) {
        ts.rotation_traces.push_back(xi + xmi);
        xi = xi * x;
        xmi = xmi * xinv;
    }
    ts.traces = ts.rotation_traces;
    ts.traces.push_back(FieldElement::zero(ts.ctx));
    std::sort(ts.traces.begin(), ts.traces.end());
    ts.traces.erase(std::unique(ts.traces.begin(), ts.traces.end()), ts.traces.end());
    return ts;
}

bool traces_all_in_subfield(const TraceSet &ts, unsigned s)
{
    if (s < 1 || s > ts.m) throw std::invalid_argument("traces_all_in_subfield: need 1 <= s <= m");
    for (const auto &t : ts.traces) {
        if (!t.in_subfield(s)) return false;
    }
    return true;
}

unsigned trace_field_degree(const TraceSet &ts)
{
    // The trace set is Frobenius-stable, so walking orbits visits each trace
    // once; the generated field has degree lcm of the orbit lengths.
    std::set<Coeffs> visited;
    u64 degree = 1;
    for (const auto &t : ts.traces) {
        if (visited.count(t.coeffs())) continue;
        u64 len = 0;
        FieldElement y = t;
        do {
            visited.insert(y.coeffs());
            y = y.frobenius();
            ++len;
        } while (!(y == t));
        degree = static_cast<u64>(lcm(static_cast<i64>(degree), static_cast<i64>(len)));
    }
    return static_cast<unsigned>(degree);
}

Matrix2 matmul(const Matrix2 &a, const Matrix2 &b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::vector<Matrix2> dihedral_matrix_group(u64 h, u64 p)
{
    const unsigned m = ambient_degree(h, p);
    const FieldPtr ctx = field_cached(p, m);
    const FieldElement x = element_of_order(ctx, h);
    const FieldElement zero = FieldElement::zero(ctx);
    const FieldElement one = FieldElement::one(ctx);
    const std::vector<Matrix2> gens{Matrix2{zero, one, one, zero}, Matrix2{x, zero, zero, x.inverse()}};

    auto key = [](const Matrix2 &g) {
        std::vector<std::uint32_t> k;
        for (const auto &e : g) k.insert(k.end(), e.coeffs().begin(), e.coeffs().end());
        return k;
    };
    std::set<std::vector<std::uint32_t>> seen;
    std::vector<Matrix2> out{Matrix2{one, zero, zero, one}};
    seen.insert(key(out[0]));
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto &g : gens) {
            Matrix2 y = matmul(out[i], g);
            if (seen.insert(key(y)).second) out.push_back(std::move(y));
        }
    }
    return out;
}

} // namespace dihedra
