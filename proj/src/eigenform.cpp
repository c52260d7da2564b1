#include "dihedra/eigenform.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "dihedra/finite_field.hpp"

namespace dihedra {

ClassCharacter::ClassCharacter(std::shared_ptr<const ClassGroupData> data, u64 h) : data_(std::move(data)), h_(h)
{
    if (h == 0) throw std::invalid_argument("ClassCharacter: order must be positive");
    const i64 exponent = data_->record.structure.exponent();
    if (exponent % static_cast<i64>(h) != 0) throw std::invalid_argument("ClassCharacter: order must divide the group exponent");
}

i64 ClassCharacter::log(const QuadForm &f) const
{
    const auto &coords = data_->group.coordinates(reduce(f));
    if (coords.empty()) return 0;
    return mod(coords.back(), static_cast<i64>(h_));
}

ClassCharacter make_character(std::shared_ptr<const ClassGroupData> data, u64 h)
{
    return ClassCharacter(std::move(data), h);
}

ClassCharacter make_character(const Discriminant &d, u64 h)
{
    return ClassCharacter(std::make_shared<const ClassGroupData>(class_group_data(d)), h);
}

Cyclotomic EigenCoefficient::value() const
{
    return std::visit(
        [&](const auto &k) -> Cyclotomic {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, SplitCoeff>) {
                return Cyclotomic::root(h, k.e) + Cyclotomic::root(h, -k.e);
            } else if constexpr (std::is_same_v<T, InertCoeff>) {
                return Cyclotomic(h);
            } else {
                return k.e ? Cyclotomic::root(h, *k.e) : Cyclotomic(h);
            }
        },
        kind);
}

EigenCoefficient eigen_coeff(const ClassCharacter &chi, u64 ell)
{
    if (!is_prime(ell)) throw std::invalid_argument("eigen_coeff: ell must be prime");
    EigenCoefficient c;
    c.h = chi.order();
    c.ell = ell;
    const PrimeFormResult r = prime_form(chi.disc(), ell);
    if (const auto *f = std::get_if<QuadForm>(&r)) {
        c.kind = SplitCoeff{chi.log(*f)};
    } else if (std::holds_alternative<Inert>(r)) {
        c.kind = InertCoeff{};
    } else {
        const auto &ram = std::get<Ramified>(r);
        c.kind = RamifiedCoeff{ram.form ? std::optional<i64>(chi.log(*ram.form)) : std::nullopt};
    }
    return c;
}

std::vector<Cyclotomic> euler_expansion(const ClassCharacter &chi, u64 n)
{
    const u64 h = chi.order();
    const i64 d = chi.disc().value();
    const auto spf = smallest_prime_factors(std::max<u64>(n, 2));
    std::vector<Cyclotomic> a(n + 1, Cyclotomic(h));
    if (n >= 1) a[1] = Cyclotomic::integer(h, 1);
    for (u64 k = 2; k <= n; ++k) {
        const u64 ell = spf[k];
        u64 q = 1;
        u64 r = k;
        while (r % ell == 0) {
            r /= ell;
            q *= ell;
        }
        if (r > 1) {
            a[k] = a[q] * a[r];
        } else if (q == ell) {
            a[k] = eigen_coeff(chi, ell).value();
        } else {
            const i64 chi0 = kronecker(d, static_cast<i64>(ell));
            a[k] = a[ell] * a[q / ell] - a[q / ell / ell] * chi0;
        }
    }
    return a;
}

Cyclotomic theta_coeff_oracle(const ClassCharacter &chi, u64 n)
{
    const i64 d = chi.disc().value();
    if (d == -3 || d == -4) throw std::invalid_argument("theta_coeff_oracle: D = -3, -4 have extra units");
    if (n == 0) throw std::invalid_argument("theta_coeff_oracle: n must be positive");
    const u64 h = chi.order();
    std::vector<i64> counts(h, 0);
    const i64 nn = static_cast<i64>(n);
    for (const QuadForm &f : chi.data().group.forms()) {
        // 4a n = (2ax + by)^2 + |D| y^2
        i64 reps = 0;
        const i64 ymax = static_cast<i64>(std::sqrt(static_cast<double>(4 * f.a * nn) / static_cast<double>(-d))) + 1;
        for (i64 y = -ymax; y <= ymax; ++y) {
            const i64 disc_x = 4 * f.a * nn + d * y * y;
            if (disc_x < 0) continue;
            i64 s = static_cast<i64>(std::sqrt(static_cast<double>(disc_x)));
            while (s * s > disc_x) --s;
            while ((s + 1) * (s + 1) <= disc_x) ++s;
            if (s * s != disc_x) continue;
            for (i64 sign : {1, -1}) {
                if (s == 0 && sign == -1) continue;
                const i64 num = -f.b * y + sign * s;
                if (num % (2 * f.a) == 0) ++reps;
            }
        }
        counts[static_cast<std::size_t>(chi.log(f))] += reps;
    }
    Cyclotomic z(h);
    for (u64 i = 0; i < h; ++i) {
        if (counts[i] % 2 != 0) throw std::logic_error("theta_coeff_oracle: odd representation count");
        z += Cyclotomic::root(h, static_cast<i64>(i)) * (counts[i] / 2);
    }
    return z;
}

namespace {

// An element of exact order h in the smallest field F_{p^m} containing one.
FieldElement root_of_unity(u64 p, u64 h)
{
    static std::mutex mu;
    static std::map<std::pair<u64, u64>, std::shared_ptr<FieldElement>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({p, h}); it != cache.end()) return *it->second;
    }
    if (!is_prime(p)) throw std::invalid_argument("root_of_unity: p must be prime");
    if (h % p == 0) throw std::invalid_argument("root_of_unity: p divides h");
    const unsigned m = h == 1 ? 1u : static_cast<unsigned>(multiplicative_order(p % h, h));
    auto x = std::make_shared<FieldElement>(element_of_order(field_cached(p, m), h));
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, h), x);
    return *x;
}

std::optional<FieldElement> reduced_split_value(const EigenCoefficient &c, u64 p)
{
    const auto *s = std::get_if<SplitCoeff>(&c.kind);
    if (!s) return std::nullopt;
    const FieldElement x = root_of_unity(p, c.h);
    const u64 e = static_cast<u64>(mod(s->e, static_cast<i64>(c.h)));
    const FieldElement xe = x.pow(e);
    return xe + xe.inverse();
}

} // namespace

bool coeff_in_prime_field(const EigenCoefficient &c, u64 p)
{
    const auto t = reduced_split_value(c, p);
    return !t || t->in_subfield(1);
}

unsigned coeff_field_degree(const EigenCoefficient &c, u64 p)
{
    const auto t = reduced_split_value(c, p);
    return t ? t->degree() : 1u;
}

WitnessSearch find_witness(std::shared_ptr<const ClassGroupData> data, u64 p, u64 bound)
{
    WitnessSearch out;
    out.disc = data->record.disc.value();
    out.class_number = data->record.class_number;
    out.p = p;
    out.result = NotFoundUpToBound{bound};
    const SuitabilityReport rep = is_p_suitable(data->record.structure, static_cast<i64>(p));
    if (!rep.suitable || !rep.witness_h) return out;
    const u64 h = static_cast<u64>(*rep.witness_h);
    out.character_order = h;
    const ClassCharacter chi(data, h);

    // Membership of x^e + x^-e in F_p depends only on e mod h.
    std::vector<signed char> in_fp(h, -1);
    for (u64 ell : primes_up_to(bound)) {
        const EigenCoefficient c = eigen_coeff(chi, ell);
        const auto *s = std::get_if<SplitCoeff>(&c.kind);
        if (!s) continue;
        auto &slot = in_fp[static_cast<std::size_t>(mod(s->e, static_cast<i64>(h)))];
        if (slot < 0) slot = coeff_in_prime_field(c, p) ? 1 : 0;
        if (slot == 0) {
            out.result = Witness{ell, c, coeff_field_degree(c, p)};
            return out;
        }
    }
    return out;
}

WitnessSearch find_witness(const Discriminant &d, u64 p, u64 bound)
{
    return find_witness(std::make_shared<const ClassGroupData>(class_group_data(d)), p, bound);
}

} // namespace dihedra
