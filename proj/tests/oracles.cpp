#include "oracles.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

std::vector<QuadForm> reduced_forms_brute(i64 d)
{
    std::vector<QuadForm> out;
    for (i64 a = 1; 3 * a * a <= -d; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            const i64 num = b * b - d;
            if (num % (4 * a) != 0) continue;
            const i64 c = num / (4 * a);
            if (c < a) continue;
            if ((b == -a || a == c) && b < 0) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

bool sl2_equivalent(const QuadForm &f, const QuadForm &g, int bound)
{
    for (i64 p = -bound; p <= bound; ++p) {
        for (i64 q = -bound; q <= bound; ++q) {
            for (i64 r = -bound; r <= bound; ++r) {
                for (i64 s = -bound; s <= bound; ++s) {
                    if (p * s - q * r != 1) continue;
                    const i64 a = f(p, r);
                    const i64 c = f(q, s);
                    const i64 b = 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s;
                    if (a == g.a && b == g.b && c == g.c) return true;
                }
            }
        }
    }
    return false;
}

namespace {

i64 powmod_small(i64 b, i64 e, i64 m)
{
    i64 r = 1;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

} // namespace

int kronecker_by_definition(i64 a, i64 n)
{
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    i64 m = n;
    for (i64 p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        int sym;
        if (p == 2) {
            i64 r = ((a % 8) + 8) % 8;
            sym = (r % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
        } else {
            i64 r = ((a % p) + p) % p;
            if (r == 0) {
                sym = 0;
            } else {
                sym = powmod_small(r, (p - 1) / 2, p) == 1 ? 1 : -1;
            }
        }
        for (int i = 0; i < e; ++i) result *= sym;
    }
    return result;
}

ExplicitGroup::ExplicitGroup(std::vector<i64> moduli) : moduli_(std::move(moduli)), order_(1)
{
    for (i64 m : moduli_) order_ *= static_cast<int>(m);
}

std::vector<i64> ExplicitGroup::digits(int x) const
{
    std::vector<i64> d(moduli_.size());
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        d[i] = x % moduli_[i];
        x /= static_cast<int>(moduli_[i]);
    }
    return d;
}

int ExplicitGroup::encode(const std::vector<i64> &d) const
{
    int x = 0;
    for (std::size_t i = moduli_.size(); i-- > 0;) x = x * static_cast<int>(moduli_[i]) + static_cast<int>(((d[i] % moduli_[i]) + moduli_[i]) % moduli_[i]);
    return x;
}

int ExplicitGroup::add(int x, int y) const
{
    auto dx = digits(x);
    auto dy = digits(y);
    for (std::size_t i = 0; i < dx.size(); ++i) dx[i] += dy[i];
    return encode(dx);
}

int ExplicitGroup::scale(int x, i64 k) const
{
    auto dx = digits(x);
    for (auto &v : dx) v *= k;
    return encode(dx);
}

int ExplicitGroup::element_order(int x) const
{
    int k = 1;
    int y = x;
    while (y != 0) {
        y = add(y, x);
        ++k;
    }
    return k;
}

namespace {

std::uint64_t join(const ExplicitGroup &g, std::uint64_t s, int x)
{
    std::uint64_t out = s;
    int kx = x;
    while (true) {
        std::uint64_t shifted = 0;
        for (int e = 0; e < g.order(); ++e) {
            if (s >> e & 1) shifted |= std::uint64_t{1} << g.add(e, kx);
        }
        if ((out | shifted) == out) break;
        out |= shifted;
        kx = g.add(kx, x);
    }
    return out;
}

} // namespace

std::vector<std::uint64_t> all_subgroups(const ExplicitGroup &g)
{
    if (g.order() > 64) throw std::invalid_argument("all_subgroups: order must be <= 64");
    std::unordered_set<std::uint64_t> seen{1};
    std::vector<std::uint64_t> queue{1};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const std::uint64_t s = queue[i];
        for (int x = 0; x < g.order(); ++x) {
            if (s >> x & 1) continue;
            const std::uint64_t t = join(g, s, x);
            if (seen.insert(t).second) queue.push_back(t);
        }
    }
    return queue;
}

std::vector<i64> cyclic_quotient_orders(const ExplicitGroup &g)
{
    std::set<i64> orders;
    for (std::uint64_t h : all_subgroups(g)) {
        const int sub = __builtin_popcountll(h);
        const int q = g.order() / sub;
        for (int x = 0; x < g.order(); ++x) {
            int k = 1;
            int y = x;
            while (!(h >> y & 1)) {
                y = g.add(y, x);
                ++k;
            }
            if (k == q) {
                orders.insert(q);
                break;
            }
        }
    }
    return {orders.begin(), orders.end()};
}

mpz_class aut_count_brute(const ExplicitGroup &g)
{
    const std::size_t k = g.moduli().size();
    const std::uint64_t full = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    std::vector<std::vector<int>> images(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (int x = 0; x < g.order(); ++x) {
            if (g.scale(x, g.moduli()[i]) == 0) images[i].push_back(x);
        }
    }
    std::map<std::pair<std::size_t, std::uint64_t>, mpz_class> memo;
    std::function<mpz_class(std::size_t, std::uint64_t)> count = [&](std::size_t i, std::uint64_t s) -> mpz_class {
        if (i == k) return s == full ? 1 : 0;
        auto key = std::make_pair(i, s);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        mpz_class total = 0;
        for (int x : images[i]) total += count(i + 1, (s >> x & 1) ? s : join(g, s, x));
        memo[key] = total;
        return total;
    };
    return count(0, 1);
}

std::vector<std::vector<i64>> chains_up_to(i64 max_order)
{
    std::vector<std::vector<i64>> out{{}};
    std::function<void(std::vector<i64> &, i64)> extend = [&](std::vector<i64> &chain, i64 order) {
        const i64 last = chain.empty() ? 1 : chain.back();
        for (i64 d = std::max<i64>(2, last); order * d <= max_order; d += last) {
            if (d % last != 0) continue;
            chain.push_back(d);
            out.push_back(chain);
            extend(chain, order * d);
            chain.pop_back();
        }
    };
    std::vector<i64> chain;
    extend(chain, 1);
    return out;
}

} // namespace oracle

namespace oracle {

namespace {

bool divides_poly(std::uint64_t p, const std::vector<std::uint32_t> &g, std::vector<std::uint64_t> r)
{
    const std::size_t dg = g.size() - 1; // g monic
    for (std::size_t i = r.size(); i-- > dg;) {
        const std::uint64_t t = r[i] % p;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = (r[i - dg + j] + (p - t) * g[j]) % p;
    }
    for (std::size_t i = 0; i < dg && i < r.size(); ++i) {
        if (r[i] % p != 0) return false;
    }
    return true;
}

} // namespace

bool irreducible_brute(std::uint64_t p, const std::vector<std::uint32_t> &f)
{
    const std::size_t n = f.size() - 1;
    if (n < 1) return false;
    const std::vector<std::uint64_t> ff(f.begin(), f.end());
    for (std::size_t d = 1; 2 * d <= n; ++d) {
        std::vector<std::uint32_t> g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (divides_poly(p, g, ff)) return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

} // namespace oracle
