#include "dihedra/density.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dihedra {

IntegerSet all_integers()
{
    IntegerSet s;
    s.contains = [](u64 n) { return n >= 1; };
    s.enumerate = [](u64 x) {
        std::vector<u64> out(x);
        for (u64 i = 0; i < x; ++i) out[i] = i + 1;
        return out;
    };
    return s;
}

IntegerSet residue_class(u64 modulus, u64 residue)
{
    if (modulus == 0) throw std::invalid_argument("residue_class: modulus must be positive");
    residue %= modulus;
    IntegerSet s;
    s.contains = [=](u64 n) { return n >= 1 && n % modulus == residue; };
    s.enumerate = [=](u64 x) {
        std::vector<u64> out;
        for (u64 n = residue == 0 ? modulus : residue; n <= x; n += modulus) out.push_back(n);
        return out;
    };
    return s;
}

IntegerSet squarefree_integers(u64 table_limit)
{
    // Sieve out multiples of every square once.
    auto table = std::make_shared<std::vector<bool>>(table_limit + 1, true);
    for (u64 q = 2; q * q <= table_limit; ++q) {
        for (u64 m = q * q; m <= table_limit; m += q * q) (*table)[m] = false;
    }
    IntegerSet s;
    s.contains = [table, table_limit](u64 n) {
        if (n == 0) return false;
        return n <= table_limit ? static_cast<bool>((*table)[n]) : is_squarefree(n);
    };
    return s;
}

IntegerSet multiples_of(u64 n)
{
    return residue_class(n, 0);
}

IntegerSet set_union(IntegerSet a, IntegerSet b)
{
    IntegerSet s;
    s.contains = [a, b](u64 n) { return a.contains(n) || b.contains(n); };
    return s;
}

IntegerSet set_intersection(IntegerSet a, IntegerSet b)
{
    IntegerSet s;
    s.contains = [a, b](u64 n) { return a.contains(n) && b.contains(n); };
    return s;
}

IntegerSet set_difference(IntegerSet a, IntegerSet b)
{
    IntegerSet s;
    s.contains = [a, b](u64 n) { return a.contains(n) && !b.contains(n); };
    return s;
}

IntegerSet dilate(IntegerSet a, u64 n)
{
    if (n == 0) throw std::invalid_argument("dilate: factor must be positive");
    IntegerSet s;
    s.contains = [a, n](u64 m) { return m >= 1 && m % n == 0 && a.contains(m / n); };
    if (a.enumerate) {
        s.enumerate = [a, n](u64 x) {
            std::vector<u64> out = a.enumerate(x / n);
            for (auto &v : out) v *= n;
            return out;
        };
    }
    return s;
}

DensityEstimate make_estimate(u64 bound, u64 member, u64 ambient)
{
    DensityEstimate e;
    e.bound = bound;
    e.count_member = member;
    e.count_ambient = ambient;
    e.ratio = ambient == 0 ? mpq_class(0) : mpq_class(mpz_class(member), mpz_class(ambient));
    e.ratio.canonicalize();
    return e;
}

u64 count_upto(const IntegerSet &a, u64 x)
{
    if (a.enumerate) return a.enumerate(x).size();
    u64 c = 0;
    for (u64 n = 1; n <= x; ++n) c += a.contains(n);
    return c;
}

DensityEstimate estimate(const IntegerSet &m, const IntegerSet &n, u64 x, const DensityLimits &limits)
{
    if (x > limits.max_simple) {
        throw ResourceLimit("estimate: bound " + std::to_string(x) + " exceeds " + std::to_string(limits.max_simple));
    }
    u64 member = 0, ambient = 0;
    auto visit = [&](u64 k) {
        ++ambient;
        member += m.contains(k);
    };
    if (n.enumerate) {
        for (u64 k : n.enumerate(x)) visit(k);
    } else {
        for (u64 k = 1; k <= x; ++k) {
            if (n.contains(k)) visit(k);
        }
    }
    return make_estimate(x, member, ambient);
}

std::vector<u64> geometric_grid(u64 x, u64 start, unsigned per_decade)
{
    std::vector<u64> grid;
    for (unsigned k = 0;; ++k) {
        const double v = std::round(static_cast<double>(start) * std::pow(10.0, static_cast<double>(k) / per_decade));
        const u64 g = static_cast<u64>(v);
        if (g > x) break;
        if (grid.empty() || grid.back() != g) grid.push_back(g);
    }
    if (grid.empty() || grid.back() != x) grid.push_back(x);
    return grid;
}

std::vector<LandauSample> landau_count(u64 x, u64 modulus, const std::vector<u64> &residues, const std::vector<u64> &grid_in,
                                       const DensityLimits &limits)
{
    if (x > limits.max_simple) throw ResourceLimit("landau_count: bound exceeds " + std::to_string(limits.max_simple));
    if (modulus == 0) throw std::invalid_argument("landau_count: modulus must be positive");
    std::vector<bool> allowed(modulus, false);
    for (u64 r : residues) {
        if (gcd(static_cast<i64>(r % modulus), static_cast<i64>(modulus)) != 1) {
            throw std::invalid_argument("landau_count: residues must be units");
        }
        allowed[r % modulus] = true;
    }
    u64 units = 0;
    for (u64 r = 0; r < modulus; ++r) units += gcd(static_cast<i64>(r), static_cast<i64>(modulus)) == 1;
    const double exponent = 1.0 - static_cast<double>(std::count(allowed.begin(), allowed.end(), true)) / static_cast<double>(units);

    const std::vector<u64> grid = grid_in.empty() ? geometric_grid(x) : grid_in;
    const auto spf = smallest_prime_factors(std::max<u64>(x, 2));
    // good[n] iff every prime factor of n is allowed; good[n] = good[n / spf] && ok(spf).
    std::vector<bool> good(x + 1, false);
    if (x >= 1) good[1] = true;
    std::vector<LandauSample> out;
    std::size_t gi = 0;
    u64 count = 0;
    for (u64 n = 1; n <= x && gi < grid.size(); ++n) {
        if (n >= 2) {
            const u64 q = spf[n];
            good[n] = good[n / q] && allowed[q % modulus];
        }
        count += good[n];
        while (gi < grid.size() && grid[gi] == n) {
            const double ratio = static_cast<double>(count) * std::pow(std::log(static_cast<double>(n)), exponent) / static_cast<double>(n);
            out.push_back({n, count, ratio});
            ++gi;
        }
    }
    return out;
}

namespace {

void check_class_limit(u64 x, const DensityLimits &limits, const char *what)
{
    if (x > limits.max_class_group) {
        throw ResourceLimit(std::string(what) + ": bound " + std::to_string(x) + " exceeds " + std::to_string(limits.max_class_group));
    }
}

bool is_power_of(u64 n, u64 p)
{
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace

std::vector<ScanRow> exponent3_scan(const ClassNumberTable &table, u64 x)
{
    std::vector<ScanRow> rows;
    table.for_each([&](i64 d, std::uint32_t h) {
        if (static_cast<u64>(-d) > x || h < 3 || !is_power_of(h, 3)) return;
        const ClassGroupRecord rec = class_group(Discriminant(d));
        if (rec.structure.exponent() == 3) rows.push_back({d, rec.class_number, rec.structure});
    });
    return rows;
}

std::vector<ScanRow> exponent3_scan(u64 x, const BatchOptions &opts, const DensityLimits &limits)
{
    check_class_limit(x, limits, "exponent3_scan");
    return exponent3_scan(batch_class_numbers(std::max<u64>(x, 3), opts), x);
}

std::map<u64, u64> class_order_census(const ClassNumberTable &table, u64 x, const std::vector<u64> &orders)
{
    std::map<u64, u64> out;
    for (u64 o : orders) out[o] = 0;
    table.for_each([&](i64 d, std::uint32_t h) {
        if (static_cast<u64>(-d) >= x) return;
        if (auto it = out.find(h); it != out.end()) ++it->second;
    });
    return out;
}

std::map<u64, u64> class_order_census(u64 x, const std::vector<u64> &orders, const BatchOptions &opts, const DensityLimits &limits)
{
    check_class_limit(x, limits, "class_order_census");
    return class_order_census(batch_class_numbers(std::max<u64>(x, 3), opts), x, orders);
}

bool suitable_from_class_number(i64 disc, u64 h, u64 p)
{
    u64 hp = h;
    while (hp % p == 0) hp /= p;
    const u64 target = p * p - 1;
    // The exponent's prime-to-p part divides hp and has the same primes.
    if (target % hp == 0) return false;
    for (u64 q : prime_divisors(hp)) {
        if (target % q != 0) return true;
    }
    return is_p_suitable(class_group(Discriminant(disc)).structure, static_cast<i64>(p)).suitable;
}

std::vector<bool> suitable_divisor_flags(u64 p, const ClassNumberTable &table, u64 x)
{
    if (x > table.max_abs_disc) throw std::invalid_argument("suitable_divisor_flags: table too small");
    std::vector<bool> flags(x + 1, false);
    for (u64 d = 3; d <= x; d += 4) {
        const std::uint32_t h = table.h[d];
        if (h == 0) continue; // not squarefree
        flags[d] = suitable_from_class_number(-static_cast<i64>(d), h, p);
    }
    return flags;
}

std::vector<bool> hp_sieve(const std::vector<bool> &flags, u64 x)
{
    std::vector<bool> out(x + 1, false);
    for (u64 d = 1; d <= x && d < flags.size(); ++d) {
        if (!flags[d]) continue;
        for (u64 m = d; m <= x; m += d) out[m] = true;
    }
    return out;
}

bool hp_direct(u64 n, const std::vector<bool> &flags)
{
    std::vector<u64> divisors{1};
    for (auto [q, e] : factorize(n)) {
        const std::size_t base = divisors.size();
        u64 qk = 1;
        for (int k = 1; k <= e; ++k) {
            qk *= q;
            for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * qk);
        }
    }
    for (u64 d : divisors) {
        if (d < flags.size() && flags[d]) return true;
    }
    return false;
}

DensityEstimate suitable_divisor_density(u64 p, const ClassNumberTable &table, u64 x)
{
    const auto marked = hp_sieve(suitable_divisor_flags(p, table, x), x);
    return make_estimate(x, static_cast<u64>(std::count(marked.begin() + 1, marked.end(), true)), x);
}

DensityEstimate suitable_divisor_density(u64 p, u64 x, const BatchOptions &opts, const DensityLimits &limits)
{
    check_class_limit(x, limits, "suitable_divisor_density");
    return suitable_divisor_density(p, batch_class_numbers(std::max<u64>(x, 3), opts), x);
}

DensityEstimate pgroup_density(u64 p, const ClassNumberTable &table, u64 x)
{
    u64 member = 0, ambient = 0;
    table.for_each([&](i64 d, std::uint32_t h) {
        if (static_cast<u64>(-d) > x) return;
        ++ambient;
        member += is_power_of(h, p);
    });
    return make_estimate(x, member, ambient);
}

DensityEstimate pgroup_density(u64 p, u64 x, const BatchOptions &opts, const DensityLimits &limits)
{
    check_class_limit(x, limits, "pgroup_density");
    return pgroup_density(p, batch_class_numbers(std::max<u64>(x, 3), opts), x);
}

std::vector<bool> a_chain_sieve(const std::vector<bool> &flags, u64 x)
{
    // A_2: (2n-1)^2 a for flagged a.
    std::vector<bool> a2(x + 1, false);
    for (u64 a = 3; a <= x && a < flags.size(); a += 4) {
        if (!flags[a]) continue;
        for (u64 s = 1; s * s * a <= x; s += 2) a2[s * s * a] = true;
    }
    // A_3: q * A_2 for primes q = 3 mod 4.
    std::vector<bool> a4 = a2;
    for (u64 q : primes_up_to(x)) {
        if (q % 4 != 3) continue;
        for (u64 m = 1; m * q <= x; ++m) {
            if (a2[m]) a4[m * q] = true;
        }
    }
    // A_5 = A_4 with 2 A_4; A_6 = union of 4^n A_5.
    std::vector<bool> a6(x + 1, false);
    for (u64 m = 1; m <= x; ++m) {
        if (!a4[m]) continue;
        for (u64 f = 1; f * m <= x; f *= 4) {
            a6[f * m] = true;
            if (2 * f * m <= x) a6[2 * f * m] = true;
        }
    }
    return a6;
}

} // namespace dihedra
