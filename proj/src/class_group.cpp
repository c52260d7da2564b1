#include "dihedra/class_group.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dihedra {

namespace {

i64 checked(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("coordinate overflow");
    return static_cast<i64>(v);
}

} // namespace

FormClassGroup::FormClassGroup(std::vector<QuadForm> forms) : forms_(std::move(forms))
{
    if (forms_.empty()) throw std::invalid_argument("FormClassGroup: empty form list");
    const Discriminant disc(forms_.front().discriminant());
    for (std::size_t i = 0; i < forms_.size(); ++i) {
        if (forms_[i].discriminant() != disc.value() || !forms_[i].is_reduced()) {
            throw std::invalid_argument("FormClassGroup: forms must be reduced and share one discriminant");
        }
        if (!index_.emplace(form_key(forms_[i]), i).second) {
            throw std::invalid_argument("FormClassGroup: duplicate form");
        }
    }
    auto lookup = [&](const QuadForm &f) {
        auto it = index_.find(form_key(f));
        if (it == index_.end()) throw std::invalid_argument("FormClassGroup: composition left the form set");
        return it->second;
    };

    // Grow a subgroup H one generator at a time. For each new generator y
    // record the relation m*e_new = coords(y^m) with y^m the first power in H.
    const std::size_t n = forms_.size();
    std::vector<char> in_h(n, 0);
    std::vector<std::vector<i64>> old_coords(n);
    std::vector<std::size_t> members{lookup(principal_form(disc))};
    in_h[members.front()] = 1;

    std::vector<std::size_t> gens;
    std::vector<std::vector<i64>> relations;
    for (std::size_t cand = 0; cand < n && members.size() < n; ++cand) {
        if (in_h[cand]) continue;
        const std::size_t gi = gens.size();
        gens.push_back(cand);
        const QuadForm &y = forms_[cand];

        i64 m = 1;
        QuadForm z = y;
        std::size_t zi = cand;
        while (!in_h[zi]) {
            z = compose(z, y);
            zi = lookup(z);
            ++m;
            if (static_cast<std::size_t>(m) > n) throw std::invalid_argument("FormClassGroup: element order exceeds group size");
        }
        std::vector<i64> rel(gi + 1, 0);
        for (std::size_t j = 0; j < old_coords[zi].size(); ++j) rel[j] = -old_coords[zi][j];
        rel[gi] += m;
        relations.push_back(std::move(rel));

        const std::size_t old_size = members.size();
        for (std::size_t k = 0; k < old_size; ++k) {
            const std::size_t base = members[k];
            QuadForm t = forms_[base];
            for (i64 j = 1; j < m; ++j) {
                t = compose(t, y);
                const std::size_t ti = lookup(t);
                if (in_h[ti]) throw std::invalid_argument("FormClassGroup: inconsistent composition");
                in_h[ti] = 1;
                std::vector<i64> c = old_coords[base];
                c.resize(gi + 1, 0);
                c[gi] = j;
                old_coords[ti] = std::move(c);
                members.push_back(ti);
            }
        }
    }
    if (members.size() != n) throw std::invalid_argument("FormClassGroup: forms do not form a group");

    const std::size_t r = gens.size();
    coords_.assign(n, {});
    if (r == 0) return;

    std::vector<std::vector<i64>> rel_matrix(r, std::vector<i64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < relations[i].size(); ++j) rel_matrix[i][j] = relations[i][j];
    }
    const SmithForm snf = smith_normal_form(rel_matrix);

    std::vector<std::size_t> keep;
    std::vector<i64> factors;
    for (std::size_t i = 0; i < r; ++i) {
        if (snf.diagonal[i] == 0) throw std::logic_error("FormClassGroup: infinite factor in relation lattice");
        if (snf.diagonal[i] > 1) {
            keep.push_back(i);
            factors.push_back(snf.diagonal[i]);
        }
    }
    structure_ = AbelianGroup(factors);

    for (std::size_t i : keep) {
        QuadForm g = principal_form(disc);
        for (std::size_t j = 0; j < r; ++j) {
            if (snf.v_inverse[i][j] != 0) g = compose(g, power(forms_[gens[j]], snf.v_inverse[i][j]));
        }
        generators_.push_back(g);
    }
    for (std::size_t e = 0; e < n; ++e) {
        std::vector<i64> c(keep.size(), 0);
        const auto &x = old_coords[e];
        for (std::size_t k = 0; k < keep.size(); ++k) {
            i128 acc = 0;
            for (std::size_t j = 0; j < x.size(); ++j) acc += static_cast<i128>(x[j]) * snf.v[j][keep[k]];
            c[k] = mod(checked(acc % factors[k]), factors[k]);
        }
        coords_[e] = std::move(c);
    }
}

std::optional<std::size_t> FormClassGroup::index_of(const QuadForm &f) const
{
    auto it = index_.find(form_key(f));
    if (it == index_.end() || forms_[it->second] != f) return std::nullopt;
    return it->second;
}

const std::vector<i64> &FormClassGroup::coordinates(const QuadForm &f) const
{
    auto idx = index_of(f);
    if (!idx) throw std::invalid_argument("FormClassGroup: form not in group");
    return coords_[*idx];
}

AbelianGroup structure_from_forms(const std::vector<QuadForm> &forms)
{
    return FormClassGroup(forms).structure();
}

namespace {

std::vector<QuadForm> reduced_forms_fast(const Discriminant &d)
{
    const auto a_max = static_cast<u64>(std::sqrt(static_cast<double>(d.abs()) / 3.0)) + 1;
    if (a_max < 2000) return enumerate_reduced(d);
    const auto spf = smallest_prime_factors(static_cast<std::uint32_t>(4 * a_max + 4));
    return enumerate_reduced(d, spf);
}

ClassGroupRecord make_record(const Discriminant &d, const FormClassGroup &g)
{
    ClassGroupRecord rec;
    rec.disc = d;
    rec.class_number = g.order();
    rec.structure = g.structure();
    rec.non_fundamental = !d.fundamental();
    const auto &factors = g.structure().invariant_factors();
    for (std::size_t i = 0; i < factors.size(); ++i) rec.generators.push_back({g.generators()[i], factors[i]});
    return rec;
}

} // namespace

ClassGroupData class_group_data(const Discriminant &d)
{
    FormClassGroup g(reduced_forms_fast(d));
    ClassGroupRecord rec = make_record(d, g);
    return {std::move(rec), std::move(g)};
}

ClassGroupRecord class_group(const Discriminant &d)
{
    return class_group_data(d).record;
}

ClassGroupCache::ClassGroupCache(std::filesystem::path path) : path_(std::move(path)) {}

void ClassGroupCache::load()
{
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    if (!std::getline(in, line)) return;
    if (line != "disc,h,invariant_factors") throw std::runtime_error("class-group cache: unexpected header in " + path_.string());
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw std::runtime_error("class-group cache: malformed row at line " + std::to_string(lineno));
        }
        const i64 disc = std::stoll(line.substr(0, c1));
        const u64 h = std::stoull(line.substr(c1 + 1, c2 - c1 - 1));
        AbelianGroup g = AbelianGroup::parse(std::string_view(line).substr(c2 + 1));
        if (g.order() != h) throw std::runtime_error("class-group cache: h disagrees with invariant factors at line " + std::to_string(lineno));
        rows_[disc] = {h, std::move(g)};
    }
}

void ClassGroupCache::save() const
{
    if (path_.empty()) throw std::runtime_error("class-group cache: no path configured");
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw std::runtime_error("class-group cache: cannot write " + path_.string());
    out << "disc,h,invariant_factors\n";
    for (const auto &[disc, row] : rows_) out << disc << ',' << row.first << ',' << row.second.to_string() << '\n';
}

std::optional<std::pair<u64, AbelianGroup>> ClassGroupCache::find(i64 disc) const
{
    auto it = rows_.find(disc);
    if (it == rows_.end()) return std::nullopt;
    return it->second;
}

void ClassGroupCache::insert(i64 disc, u64 h, const AbelianGroup &g)
{
    rows_[disc] = {h, g};
    dirty_ = true;
}

std::pair<u64, AbelianGroup> ClassGroupCache::get(const Discriminant &d)
{
    if (auto hit = find(d.value())) return *hit;
    const ClassGroupRecord rec = class_group(d);
    insert(d.value(), rec.class_number, rec.structure);
    return {rec.class_number, rec.structure};
}

} // namespace dihedra
