// Command-line front end: one subcommand per scan or query, CSV or JSON out.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dihedra/class_group.hpp"
#include "dihedra/cohen_lenstra.hpp"
#include "dihedra/density.hpp"
#include "dihedra/dihedral.hpp"
#include "dihedra/eigenform.hpp"

using namespace dihedra;

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string decimal(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

void write_csv(std::ostream &os, const Table &t)
{
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
}

// Integer cells become JSON numbers and empty cells null; everything else,
// and the invariant-factor chain in particular, stays a string.
void write_json(std::ostream &os, const Table &t)
{
    static const std::regex integer("-?[0-9]+");
    static const std::set<std::string> text_columns{"invariant_factors"};
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            const std::string &cell = row[i];
            if (cell.empty()) {
                obj[t.header[i]] = nullptr;
            } else if (!text_columns.count(t.header[i]) && std::regex_match(cell, integer) && cell.size() < 19) {
                obj[t.header[i]] = std::stoll(cell);
            } else {
                obj[t.header[i]] = cell;
            }
        }
        out.push_back(std::move(obj));
    }
    os << out.dump(2) << '\n';
}

struct Config {
    std::string format = "csv";
    std::string output;
    std::string cache;
    unsigned workers = 1;
};

void emit(const Config &cfg, const Table &t)
{
    std::ofstream file;
    std::ostream *os = &std::cout;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) throw std::runtime_error("cannot write " + cfg.output);
        os = &file;
    }
    if (cfg.format == "json") {
        write_json(*os, t);
    } else {
        write_csv(*os, t);
    }
    if (!*os) throw std::runtime_error("write failed");
}

BatchOptions batch_opts(const Config &cfg)
{
    BatchOptions o;
    o.workers = cfg.workers;
    return o;
}

std::vector<u64> sample_points(u64 x, const std::vector<u64> &given)
{
    if (!given.empty()) {
        std::vector<u64> s = given;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
    return geometric_grid(x);
}

Table density_rows(const std::vector<u64> &xs, const std::function<std::pair<u64, u64>(u64)> &count)
{
    Table t{{"x", "count_member", "count_ambient", "ratio"}, {}};
    for (u64 x : xs) {
        const auto [member, ambient] = count(x);
        const auto e = make_estimate(x, member, ambient);
        t.rows.push_back({std::to_string(x), std::to_string(member), std::to_string(ambient), decimal(e.decimal())});
    }
    return t;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Class groups of imaginary quadratic fields, dihedral traces and density scans"};
    app.require_subcommand(1);
    Config cfg;
    if (const char *env = std::getenv("DIHEDRA_CACHE")) cfg.cache = env;
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output,-o", cfg.output, "write to a file instead of stdout");
    app.add_option("--cache", cfg.cache, "class-group cache CSV (default $DIHEDRA_CACHE)");
    app.add_option("--workers", cfg.workers, "threads for batch sweeps")->check(CLI::PositiveNumber);

    std::vector<i64> discs;
    u64 max_abs_disc = 0;
    u64 bound = 0;
    std::vector<u64> primes;
    std::vector<u64> orders;
    std::vector<u64> samples;
    std::vector<u64> residues;
    u64 modulus = 4;
    u64 max_h = 200;
    std::string set_name = "squarefree-3mod4";

    auto *classgroup = app.add_subcommand("classgroup", "class number and invariant factors of given discriminants");
    classgroup->add_option("--disc", discs, "negative discriminants")->required()->delimiter(',');

    auto *batch = app.add_subcommand("batch", "class numbers of all fundamental discriminants up to a bound");
    batch->add_option("--max-abs-disc", max_abs_disc)->required();

    auto *census = app.add_subcommand("census", "how many fundamental |D| < X have each class number");
    census->add_option("--max-abs-disc", max_abs_disc)->required();
    census->add_option("--orders", orders)->required()->delimiter(',');

    auto *exp3 = app.add_subcommand("exp3scan", "fundamental discriminants with class-group exponent 3");
    exp3->add_option("--max-abs-disc", max_abs_disc)->required();

    auto *suitable = app.add_subcommand("suitable", "density of N with a p-suitable squarefree divisor d = 3 mod 4");
    suitable->add_option("--p", primes)->required()->delimiter(',');
    suitable->add_option("--max-abs-disc", max_abs_disc)->required();
    suitable->add_option("--samples", samples)->delimiter(',');

    auto *witness = app.add_subcommand("witness", "smallest prime whose eigenvalue leaves F_p");
    witness->add_option("--disc", discs)->delimiter(',');
    witness->add_option("--max-abs-disc", max_abs_disc, "every fundamental D up to this bound");
    witness->add_option("--p", primes)->required()->delimiter(',');
    witness->add_option("--bound", bound)->required();

    auto *traces = app.add_subcommand("traces", "degree of the field generated by the traces of D_h");
    traces->add_option("--max-h", max_h);
    traces->add_option("--p", primes)->required()->delimiter(',');

    auto *density = app.add_subcommand("density", "finite-bound densities");
    density->add_option("--set", set_name)->check(CLI::IsMember({"squarefree-3mod4", "pgroup"}));
    density->add_option("--p", primes)->delimiter(',');
    density->add_option("--bound", bound)->required();
    density->add_option("--samples", samples)->delimiter(',');

    auto *landau = app.add_subcommand("landau", "integers whose prime factors lie in given classes mod A");
    landau->add_option("--bound", bound)->required();
    landau->add_option("--modulus", modulus);
    landau->add_option("--residues", residues)->delimiter(',');

    auto *clweights = app.add_subcommand("clweights", "weighted group sums against the prime lower bound");
    clweights->add_option("--bound", bound)->required();
    clweights->add_option("--exclude", primes)->delimiter(',');
    clweights->add_option("--samples", samples)->delimiter(',');

    auto *clcompare = app.add_subcommand("clcompare", "share of p | h(D) against the Cohen-Lenstra prediction");
    clcompare->add_option("--p", primes)->required()->delimiter(',');
    clcompare->add_option("--max-abs-disc", max_abs_disc)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<ClassGroupCache> cache;
        if (!cfg.cache.empty()) {
            cache.emplace(cfg.cache);
            cache->load();
        }
        auto group_of = [&](i64 d) -> std::pair<u64, AbelianGroup> {
            if (cache) return cache->get(Discriminant(d));
            const auto r = class_group(Discriminant(d));
            return {r.class_number, r.structure};
        };

        Table out;
        if (*classgroup) {
            out.header = {"disc", "h", "invariant_factors"};
            std::sort(discs.begin(), discs.end(), std::greater<>());
            for (i64 d : discs) {
                const auto [h, g] = group_of(d);
                out.rows.push_back({std::to_string(d), std::to_string(h), g.to_string()});
            }
        } else if (*batch) {
            out.header = {"disc", "h"};
            batch_class_numbers(max_abs_disc, batch_opts(cfg)).for_each([&](i64 d, std::uint32_t h) {
                out.rows.push_back({std::to_string(d), std::to_string(h)});
            });
        } else if (*census) {
            out.header = {"order", "count"};
            for (auto [o, c] : class_order_census(max_abs_disc, orders, batch_opts(cfg))) {
                out.rows.push_back({std::to_string(o), std::to_string(c)});
            }
        } else if (*exp3) {
            out.header = {"disc", "h", "invariant_factors"};
            for (const auto &r : exponent3_scan(max_abs_disc, batch_opts(cfg))) {
                if (cache) cache->insert(r.disc, r.class_number, r.structure);
                out.rows.push_back({std::to_string(r.disc), std::to_string(r.class_number), r.structure.to_string()});
            }
        } else if (*suitable) {
            if (primes.size() != 1) throw std::invalid_argument("suitable takes exactly one --p");
            if (max_abs_disc > DensityLimits{}.max_class_group) throw ResourceLimit("suitable: bound exceeds class-group budget");
            const auto table = batch_class_numbers(std::max<u64>(max_abs_disc, 3), batch_opts(cfg));
            const auto marked = hp_sieve(suitable_divisor_flags(primes.front(), table, max_abs_disc), max_abs_disc);
            std::vector<u64> prefix(max_abs_disc + 1, 0);
            for (u64 n = 1; n <= max_abs_disc; ++n) prefix[n] = prefix[n - 1] + marked[n];
            out = density_rows(sample_points(max_abs_disc, samples), [&](u64 x) { return std::make_pair(prefix[std::min(x, max_abs_disc)], x); });
        } else if (*witness) {
            out.header = {"disc", "h", "p", "witness_prime", "coefficient_field_degree"};
            std::vector<i64> targets = discs;
            if (max_abs_disc > 0) {
                for (i64 a = 3; a <= static_cast<i64>(max_abs_disc); ++a) {
                    if (is_fundamental(-a)) targets.push_back(-a);
                }
            }
            if (targets.empty()) throw std::invalid_argument("witness needs --disc or --max-abs-disc");
            std::sort(targets.begin(), targets.end(), std::greater<>());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            std::sort(primes.begin(), primes.end());
            for (i64 d : targets) {
                const auto data = std::make_shared<const ClassGroupData>(class_group_data(Discriminant(d)));
                for (u64 p : primes) {
                    const auto w = find_witness(data, p, bound);
                    std::string ell, deg;
                    if (const auto *hit = std::get_if<Witness>(&w.result)) {
                        ell = std::to_string(hit->ell);
                        deg = std::to_string(hit->field_degree);
                    }
                    out.rows.push_back({std::to_string(d), std::to_string(w.class_number), std::to_string(p), ell, deg});
                }
            }
        } else if (*traces) {
            out.header = {"h", "p", "m", "trace_field_degree"};
            std::sort(primes.begin(), primes.end());
            for (u64 h = 1; h <= max_h; ++h) {
                for (u64 p : primes) {
                    if (h % p == 0) continue;
                    const auto ts = dihedral_trace_set(h, p);
                    out.rows.push_back({std::to_string(h), std::to_string(p), std::to_string(ts.m), std::to_string(trace_field_degree(ts))});
                }
            }
        } else if (*density) {
            const auto xs = sample_points(bound, samples);
            if (set_name == "squarefree-3mod4") {
                const auto sf = squarefree_integers(bound);
                const auto b = residue_class(4, 3);
                const auto a = set_intersection(sf, b);
                out = density_rows(xs, [&](u64 x) {
                    const auto e = estimate(a, b, x);
                    return std::make_pair(e.count_member, e.count_ambient);
                });
            } else {
                if (primes.size() != 1) throw std::invalid_argument("density --set pgroup takes exactly one --p");
                if (bound > DensityLimits{}.max_class_group) throw ResourceLimit("density: bound exceeds class-group budget");
                const auto table = batch_class_numbers(std::max<u64>(bound, 3), batch_opts(cfg));
                out = density_rows(xs, [&](u64 x) {
                    const auto e = pgroup_density(primes.front(), table, x);
                    return std::make_pair(e.count_member, e.count_ambient);
                });
            }
        } else if (*landau) {
            out.header = {"x", "count_member", "count_ambient", "ratio", "normalized"};
            for (const auto &s : landau_count(bound, modulus, residues)) {
                out.rows.push_back({std::to_string(s.x), std::to_string(s.count), std::to_string(s.x),
                                    decimal(static_cast<double>(s.count) / static_cast<double>(s.x)), decimal(s.ratio)});
            }
        } else if (*clweights) {
            out.header = {"x", "weighted_sum", "lower_bound"};
            const std::set<u64> excluded(primes.begin(), primes.end());
            std::vector<u64> xs = samples;
            if (xs.empty()) {
                for (u64 x = 10; x <= bound; x *= 10) xs.push_back(x);
                if (xs.empty() || xs.back() != bound) xs.push_back(bound);
            }
            std::sort(xs.begin(), xs.end());
            // One pass over the table; sums are read off at each sample.
            const auto table = weighted_group_table(excluded, xs.back());
            const auto plist = primes_up_to(xs.back());
            mpq_class sum = 0, lower = 0;
            std::size_t ti = 0, pi = 0;
            for (u64 x : xs) {
                while (ti < table.size() && table[ti].order <= x) sum += table[ti++].w;
                while (pi < plist.size() && plist[pi] <= x) {
                    if (!excluded.count(plist[pi])) lower += mpq_class(1, plist[pi] - 1);
                    ++pi;
                }
                out.rows.push_back({std::to_string(x), decimal(sum.get_d()), decimal(lower.get_d())});
            }
        } else if (*clcompare) {
            out.header = {"p", "X", "empirical", "predicted", "abs_diff"};
            const auto table = batch_class_numbers(std::max<u64>(max_abs_disc, 3), batch_opts(cfg));
            std::sort(primes.begin(), primes.end());
            for (u64 p : primes) {
                const auto c = empirical_cl_comparison(p, table, max_abs_disc);
                out.rows.push_back({std::to_string(p), std::to_string(max_abs_disc), decimal(c.empirical), decimal(c.predicted), decimal(c.abs_diff())});
            }
        }
        emit(cfg, out);
        if (cache && cache->dirty()) cache->save();
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
