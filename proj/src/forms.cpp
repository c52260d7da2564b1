#include "dihedra/forms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace dihedra {

namespace {

struct WideForm {
    i128 a, b, c;
};

// Cohen, Algorithm 5.4.2, on doubled-width coefficients.
QuadForm reduce_wide(WideForm f)
{
    auto normalize = [](WideForm &g) {
        if (-g.a < g.b && g.b <= g.a) return;
        // x -> x + k y with b + 2ak in (-a, a].
        i128 two_a = 2 * g.a;
        i128 r = g.b % two_a;
        if (r < 0) r += two_a;
        if (r > g.a) r -= two_a;
        i128 k = (r - g.b) / two_a;
        g.c = g.a * k * k + g.b * k + g.c;
        g.b = r;
    };
    normalize(f);
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        normalize(f);
    }
    if ((f.a == f.c || f.b == -f.a) && f.b < 0) f.b = -f.b;
    return {static_cast<i64>(f.a), static_cast<i64>(f.b), static_cast<i64>(f.c)};
}

i64 isqrt(u64 n)
{
    auto r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return static_cast<i64>(r);
}

} // namespace

bool is_fundamental(i64 d)
{
    if (d >= 0) return false;
    const i64 r = mod(d, 4);
    if (r == 1) return is_squarefree(static_cast<u64>(-d));
    if (r != 0) return false;
    const i64 m = d / 4;
    const i64 mr = mod(m, 4);
    return (mr == 2 || mr == 3) && is_squarefree(static_cast<u64>(-m));
}

Discriminant::Discriminant(i64 d) : value_(d), fundamental_(false)
{
    if (d >= 0) throw std::invalid_argument("discriminant must be negative");
    const i64 r = mod(d, 4);
    if (r != 0 && r != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    fundamental_ = is_fundamental(d);
}

bool QuadForm::is_reduced() const
{
    if (a <= 0 || discriminant() >= 0) return false;
    const i64 abs_b = b < 0 ? -b : b;
    if (!(abs_b <= a && a <= c)) return false;
    if ((abs_b == a || a == c) && b < 0) return false;
    return true;
}

QuadForm principal_form(const Discriminant &d)
{
    const i64 b = mod(d.value(), 2);
    return {1, b, (b - d.value()) / 4};
}

QuadForm reduce(QuadForm f)
{
    const i128 disc = static_cast<i128>(f.b) * f.b - static_cast<i128>(4) * f.a * f.c;
    if (f.a <= 0 || disc >= 0) throw std::domain_error("reduce: form is not positive definite");
    return reduce_wide({f.a, f.b, f.c});
}

QuadForm compose(const QuadForm &f, const QuadForm &g)
{
    const i64 disc = f.discriminant();
    if (disc != g.discriminant()) throw std::invalid_argument("compose: discriminant mismatch");

    // Cohen, Algorithm 5.4.7.
    const QuadForm &f1 = f.a <= g.a ? f : g;
    const QuadForm &f2 = f.a <= g.a ? g : f;
    const i64 s = (f1.b + f2.b) / 2;
    const i64 n = f2.b - s;

    i64 y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        i64 u, v;
        d = xgcd(f2.a, f1.a, u, v);
        y1 = u;
    }

    i64 x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        d1 = xgcd(s, d, x2, y2);
        y2 = -y2;
    }

    const i64 v1 = f1.a / d1;
    const i64 v2 = f2.a / d1;
    i128 r = (static_cast<i128>(y1) * y2 * n - static_cast<i128>(x2) * f2.c) % v1;
    if (r < 0) r += v1;
    const i128 b3 = f2.b + 2 * static_cast<i128>(v2) * r;
    const i128 a3 = static_cast<i128>(v1) * v2;
    const i128 c3 = (b3 * b3 - disc) / (4 * a3);
    return reduce_wide({a3, b3, c3});
}

QuadForm power(const QuadForm &f, i64 n)
{
    const Discriminant d(f.discriminant());
    QuadForm base = n < 0 ? reduce(f.inverse()) : reduce(f);
    u64 e = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
    QuadForm result = principal_form(d);
    while (e > 0) {
        if (e & 1) result = compose(result, base);
        e >>= 1;
        if (e > 0) base = compose(base, base);
    }
    return result;
}

std::vector<QuadForm> enumerate_reduced(const Discriminant &d)
{
    return enumerate_reduced(d, {});
}

std::vector<QuadForm> enumerate_reduced(const Discriminant &d, std::span<const std::uint32_t> spf)
{
    const i64 disc = d.value();
    const u64 abs_d = d.abs();
    std::vector<QuadForm> forms;
    std::vector<i64> bs;
    for (i64 a = 1; static_cast<u64>(3 * a) * static_cast<u64>(a) <= abs_d; ++a) {
        bs.clear();
        for (u64 x : sqrt_mod_all(disc, static_cast<u64>(4 * a), spf)) {
            // b is only determined modulo 2a.
            i64 b = static_cast<i64>(x % static_cast<u64>(2 * a));
            if (b > a) b -= 2 * a;
            bs.push_back(b);
        }
        std::sort(bs.begin(), bs.end());
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        for (i64 b : bs) {
            const i64 c = static_cast<i64>((static_cast<i128>(b) * b - disc) / (4 * a));
            if (c < a) continue;
            if ((b == -a || a == c) && b < 0) continue;
            QuadForm f{a, b, c};
            if (!f.is_primitive()) continue;
            forms.push_back(f);
        }
    }
    std::sort(forms.begin(), forms.end(), [](const QuadForm &x, const QuadForm &y) {
        if (x.a != y.a) return x.a < y.a;
        const i64 ax = x.b < 0 ? -x.b : x.b;
        const i64 ay = y.b < 0 ? -y.b : y.b;
        if (ax != ay) return ax < ay;
        return x.b > y.b;
    });
    return forms;
}

PrimeFormResult prime_form(const Discriminant &d, u64 ell)
{
    if (!is_prime(ell)) throw std::invalid_argument("prime_form: ell must be prime");
    const i64 disc = d.value();
    const i64 l = static_cast<i64>(ell);
    const int symbol = kronecker(disc, l);
    if (symbol == -1) return Inert{};

    i64 b;
    if (symbol == 0) {
        if (ell == 2) {
            b = mod(disc, 8) == 0 ? 0 : 2;
        } else {
            b = mod(disc, 2) == 0 ? 0 : l;
        }
        QuadForm f{l, b, static_cast<i64>((static_cast<i128>(b) * b - disc) / (4 * l))};
        if (!f.is_primitive()) return Ramified{};
        return Ramified{reduce(f)};
    }

    if (ell == 2) {
        b = 1;
    } else {
        const i64 r = static_cast<i64>(sqrt_mod_prime(static_cast<u64>(mod(disc, l)), ell));
        const i64 parity = mod(disc, 2);
        i64 b1 = mod(r, 2) == parity ? r : r + l;
        i64 b2 = mod(l - r, 2) == parity ? l - r : 2 * l - r;
        if (b1 == 0) b1 = 2 * l;
        if (b2 == 0) b2 = 2 * l;
        b = std::min(b1, b2);
    }
    const i128 num = static_cast<i128>(b) * b - disc;
    if (num % (4 * l) != 0) throw std::logic_error("prime_form: square root failed");
    return reduce(QuadForm{l, b, static_cast<i64>(num / (4 * l))});
}

std::uint32_t ClassNumberTable::at(i64 d) const
{
    const u64 n = static_cast<u64>(-d);
    if (d >= 0 || n > max_abs_disc) throw std::out_of_range("ClassNumberTable: discriminant out of range");
    return h[n];
}

void ClassNumberTable::for_each(const std::function<void(i64, std::uint32_t)> &fn) const
{
    for (u64 n = 3; n <= max_abs_disc; ++n) {
        if (h[n] != 0) fn(-static_cast<i64>(n), h[n]);
    }
}

std::size_t ClassNumberTable::fundamental_count() const
{
    return static_cast<std::size_t>(std::count_if(h.begin(), h.end(), [](std::uint32_t v) { return v != 0; }));
}

std::vector<bool> fundamental_flags(u64 limit)
{
    std::vector<bool> squarefree(limit + 1, true);
    for (u64 p = 2; p * p <= limit; ++p) {
        for (u64 m = p * p; m <= limit; m += p * p) squarefree[m] = false;
    }
    std::vector<bool> flags(limit + 1, false);
    for (u64 n = 3; n <= limit; ++n) {
        if (n % 4 == 3) {
            flags[n] = squarefree[n];
        } else if (n % 4 == 0) {
            const u64 m = n / 4;
            flags[n] = (m % 4 == 1 || m % 4 == 2) && squarefree[m];
        }
    }
    return flags;
}

ClassNumberTable batch_class_numbers(u64 max_abs_disc, const BatchOptions &opts)
{
    if (max_abs_disc < 3) throw std::invalid_argument("batch_class_numbers: bound must be >= 3");
    if (max_abs_disc > opts.max_bound) {
        throw ResourceLimit("batch_class_numbers: bound " + std::to_string(max_abs_disc) + " exceeds budget " +
                            std::to_string(opts.max_bound));
    }
    const u64 x = max_abs_disc;
    const i64 a_max = isqrt(x / 3);
    const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(a_max)));

    // Every reduced (a, b, c) with 4ac - b^2 <= X, counted at index 4ac - b^2.
    auto sweep = [x](i64 a_lo, i64 a_hi, std::vector<std::uint32_t> &counts) {
        std::uint32_t *out = counts.data();
        for (i64 a = a_lo; a < a_hi; ++a) {
            const u64 step = static_cast<u64>(4 * a);
            for (i64 b = -a + 1; b <= a; ++b) {
                const i64 c0 = b < 0 ? a + 1 : a;
                for (u64 idx = static_cast<u64>(4 * a * c0 - b * b); idx <= x; idx += step) ++out[idx];
            }
        }
    };

    std::vector<std::uint32_t> counts(x + 1, 0);
    if (workers == 1) {
        sweep(1, a_max + 1, counts);
    } else {
        // Work per value of a is roughly X/2, so equal-width ranges balance.
        std::vector<std::vector<std::uint32_t>> partial(workers);
        std::vector<std::thread> threads;
        const i64 span = a_max;
        for (unsigned w = 0; w < workers; ++w) {
            const i64 lo = 1 + span * w / workers;
            const i64 hi = 1 + span * (w + 1) / workers;
            threads.emplace_back([&, w, lo, hi] {
                partial[w].assign(x + 1, 0);
                sweep(lo, hi, partial[w]);
            });
        }
        for (auto &t : threads) t.join();
        for (const auto &p : partial) {
            for (u64 i = 0; i <= x; ++i) counts[i] += p[i];
        }
    }

    const std::vector<bool> fundamental = fundamental_flags(x);
    ClassNumberTable table;
    table.max_abs_disc = x;
    table.h.assign(x + 1, 0);
    for (u64 n = 3; n <= x; ++n) {
        if (fundamental[n]) table.h[n] = counts[n];
    }
    return table;
}

} // namespace dihedra
