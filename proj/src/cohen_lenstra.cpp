#include "dihedra/cohen_lenstra.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace dihedra {

std::vector<std::vector<int>> partitions(int v)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, max_part); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(v, v);
    return out;
}

std::vector<AbelianGroup> enumerate_groups(u64 n)
{
    if (n == 0) throw std::invalid_argument("enumerate_groups: order must be positive");
    std::vector<std::map<i64, std::vector<int>>> choices{{}};
    for (auto [p, e] : factorize(n)) {
        std::vector<std::map<i64, std::vector<int>>> next;
        for (const auto &part : partitions(e)) {
            for (auto c : choices) {
                c[static_cast<i64>(p)] = part;
                next.push_back(std::move(c));
            }
        }
        choices = std::move(next);
    }
    std::vector<AbelianGroup> out;
    out.reserve(choices.size());
    for (const auto &c : choices) out.push_back(AbelianGroup::from_primary(c));
    return out;
}

mpq_class weight(const AbelianGroup &g)
{
    mpq_class w(mpz_class(1), aut_order(g));
    w.canonicalize();
    return w;
}

std::vector<WeightedGroup> weighted_group_table(const std::set<u64> &s, u64 x, u64 max_order)
{
    if (x > max_order) throw ResourceLimit("weighted_group_table: bound " + std::to_string(x) + " exceeds " + std::to_string(max_order));
    std::vector<WeightedGroup> out;
    for (u64 n = 1; n <= x; ++n) {
        bool coprime = true;
        for (u64 p : s) coprime = coprime && n % p != 0;
        if (!coprime) continue;
        for (auto &g : enumerate_groups(n)) {
            mpq_class w = weight(g);
            out.push_back({std::move(g), n, std::move(w)});
        }
    }
    return out;
}

mpq_class weighted_sum_coprime(const std::set<u64> &s, u64 x)
{
    mpq_class total = 0;
    for (const auto &e : weighted_group_table(s, x)) total += e.w;
    return total;
}

mpq_class prime_lower_bound(const std::set<u64> &s, u64 x)
{
    mpq_class total = 0;
    for (u64 p : primes_up_to(x)) {
        if (!s.count(p)) total += mpq_class(1, p - 1);
    }
    total.canonicalize();
    return total;
}

mpq_class partial_average(const std::function<bool(const AbelianGroup &)> &f, const std::set<u64> &s, u64 x)
{
    mpq_class num = 0, den = 0;
    for (const auto &e : weighted_group_table(s, x)) {
        den += e.w;
        if (f(e.group)) num += e.w;
    }
    return num / den;
}

double predicted_divisibility(u64 p)
{
    if (p < 2) throw std::invalid_argument("predicted_divisibility: p must be >= 2");
    double prod = 1;
    double term = 1;
    for (int k = 1; k < 200; ++k) {
        term /= static_cast<double>(p);
        if (term < 1e-18) break;
        prod *= 1 - term;
    }
    return 1 - prod;
}

ClComparison empirical_cl_comparison(u64 p, const ClassNumberTable &table, u64 x)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("empirical_cl_comparison: p must be an odd prime");
    if (x > table.max_abs_disc) throw std::invalid_argument("empirical_cl_comparison: table too small");
    ClComparison c;
    c.p = p;
    c.bound = x;
    table.for_each([&](i64 d, std::uint32_t h) {
        if (static_cast<u64>(-d) > x) return;
        ++c.total;
        c.divisible += h % p == 0;
    });
    c.empirical = c.total ? static_cast<double>(c.divisible) / static_cast<double>(c.total) : 0.0;
    c.predicted = predicted_divisibility(p);
    return c;
}

ClComparison empirical_cl_comparison(u64 p, u64 x, const BatchOptions &opts)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("empirical_cl_comparison: p must be an odd prime");
    return empirical_cl_comparison(p, batch_class_numbers(std::max<u64>(x, 3), opts), x);
}

} // namespace dihedra
