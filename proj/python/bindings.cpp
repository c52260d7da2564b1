#include <sstream>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dihedra/class_group.hpp"
#include "dihedra/cohen_lenstra.hpp"
#include "dihedra/density.hpp"
#include "dihedra/dihedral.hpp"
#include "dihedra/eigenform.hpp"

namespace py = pybind11;
using namespace dihedra;

namespace {

py::object to_fraction(const mpq_class &q)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::object to_int(const mpz_class &z)
{
    return py::int_(py::str(z.get_str()));
}

template <class T>
std::string streamed(const T &v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string kind_name(const EigenCoefficient &c)
{
    if (std::holds_alternative<SplitCoeff>(c.kind)) return "split";
    if (std::holds_alternative<InertCoeff>(c.kind)) return "inert";
    return "ramified";
}

py::dict search_to_dict(const WitnessSearch &w)
{
    py::dict d;
    d["disc"] = w.disc;
    d["class_number"] = w.class_number;
    d["p"] = w.p;
    d["character_order"] = w.character_order ? py::cast(*w.character_order) : py::none();
    if (const auto *hit = std::get_if<Witness>(&w.result)) {
        d["ell"] = hit->ell;
        d["field_degree"] = hit->field_degree;
        d["coefficient"] = streamed(hit->coeff.value());
        d["kind"] = kind_name(hit->coeff);
    } else {
        d["ell"] = py::none();
        d["bound"] = std::get<NotFoundUpToBound>(w.result).bound;
    }
    return d;
}

py::dict estimate_to_dict(const DensityEstimate &e)
{
    py::dict d;
    d["bound"] = e.bound;
    d["count_member"] = e.count_member;
    d["count_ambient"] = e.count_ambient;
    d["ratio"] = to_fraction(e.ratio);
    return d;
}

} // namespace

PYBIND11_MODULE(_dihedra, m)
{
    m.doc() = "Class groups of imaginary quadratic orders, dihedral traces and density experiments";

    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);

    py::class_<QuadForm>(m, "QuadForm")
        .def(py::init([](i64 a, i64 b, i64 c) { return QuadForm{a, b, c}; }), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readonly("a", &QuadForm::a)
        .def_readonly("b", &QuadForm::b)
        .def_readonly("c", &QuadForm::c)
        .def("discriminant", &QuadForm::discriminant)
        .def("is_reduced", &QuadForm::is_reduced)
        .def("__call__", &QuadForm::operator(), py::arg("x"), py::arg("y"))
        .def("__eq__", [](const QuadForm &f, const QuadForm &g) { return f == g; })
        .def("__hash__", [](const QuadForm &f) { return py::hash(py::make_tuple(f.a, f.b, f.c)); })
        .def("__repr__", [](const QuadForm &f) { return "QuadForm" + streamed(f); });

    m.def("is_fundamental", &is_fundamental, py::arg("d"));
    m.def("reduce", &reduce, py::arg("form"));
    m.def("compose", &compose, py::arg("f"), py::arg("g"));
    m.def("power", &power, py::arg("f"), py::arg("n"));
    m.def("principal_form", [](i64 d) { return principal_form(Discriminant(d)); }, py::arg("d"));
    m.def("reduced_forms", [](i64 d) { return enumerate_reduced(Discriminant(d)); }, py::arg("d"));

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def(py::init<>())
        .def(py::init<std::vector<i64>>(), py::arg("invariant_factors"))
        .def_static("from_cyclic_orders", &AbelianGroup::from_cyclic_orders, py::arg("orders"))
        .def_property_readonly("invariant_factors", &AbelianGroup::invariant_factors)
        .def_property_readonly("order", &AbelianGroup::order)
        .def_property_readonly("exponent", &AbelianGroup::exponent)
        .def_property_readonly("rank", &AbelianGroup::rank)
        .def("primary_parts", &AbelianGroup::primary_parts)
        .def("__eq__", [](const AbelianGroup &a, const AbelianGroup &b) { return a == b; })
        .def("__str__", &AbelianGroup::to_string)
        .def("__repr__", [](const AbelianGroup &g) { return "AbelianGroup([" + g.to_string() + "])"; });

    m.def("has_cyclic_quotient", &has_cyclic_quotient, py::arg("group"), py::arg("h"));
    m.def("is_p_suitable", [](const AbelianGroup &g, i64 p) {
        const auto r = is_p_suitable(g, p);
        return py::make_tuple(r.suitable, r.witness_h ? py::cast(*r.witness_h) : py::none());
    }, py::arg("group"), py::arg("p"), "(suitable, smallest valid cyclic quotient order or None)");
    m.def("aut_order", [](const AbelianGroup &g) { return to_int(aut_order(g)); }, py::arg("group"));

    m.def("class_group", [](i64 d) {
        const auto r = class_group(Discriminant(d));
        py::dict out;
        out["disc"] = d;
        out["class_number"] = r.class_number;
        out["structure"] = r.structure;
        py::list gens;
        for (const auto &g : r.generators) gens.append(py::make_tuple(g.form, g.order));
        out["generators"] = gens;
        out["fundamental"] = !r.non_fundamental;
        return out;
    }, py::arg("d"));

    py::class_<ClassNumberTable>(m, "ClassNumberTable")
        .def_readonly("max_abs_disc", &ClassNumberTable::max_abs_disc)
        .def("at", &ClassNumberTable::at, py::arg("d"))
        .def("fundamental_count", &ClassNumberTable::fundamental_count)
        .def("items", [](const ClassNumberTable &t) {
            std::vector<std::pair<i64, std::uint32_t>> rows;
            t.for_each([&](i64 d, std::uint32_t h) { rows.emplace_back(d, h); });
            return rows;
        });

    m.def("batch_class_numbers", [](u64 x, unsigned workers) {
        BatchOptions opts;
        opts.workers = workers;
        py::gil_scoped_release release;
        return batch_class_numbers(x, opts);
    }, py::arg("max_abs_disc"), py::arg("workers") = 1);

    m.def("class_order_census", py::overload_cast<const ClassNumberTable &, u64, const std::vector<u64> &>(&class_order_census), py::arg("table"), py::arg("x"), py::arg("orders"));
    m.def("exponent3_scan", [](const ClassNumberTable &t, u64 x) {
        std::vector<std::pair<i64, u64>> rows;
        for (const auto &r : exponent3_scan(t, x)) rows.emplace_back(r.disc, r.class_number);
        return rows;
    }, py::arg("table"), py::arg("x"));

    m.def("dihedral_traces", [](u64 h, u64 p) {
        const auto ts = dihedral_trace_set(h, p);
        py::dict out;
        out["h"] = h;
        out["p"] = p;
        out["m"] = ts.m;
        out["trace_count"] = ts.traces.size();
        out["in_prime_field"] = traces_all_in_subfield(ts, 1);
        out["trace_field_degree"] = trace_field_degree(ts);
        return out;
    }, py::arg("h"), py::arg("p"));

    m.def("eigen_coefficients", [](i64 d, u64 h, u64 n) {
        const auto chi = make_character(Discriminant(d), h);
        std::vector<std::string> out;
        for (const auto &c : euler_expansion(chi, n)) out.push_back(streamed(c));
        return out;
    }, py::arg("d"), py::arg("h"), py::arg("n"), "Coefficients a_0..a_n as strings in zeta_h.");

    m.def("find_witness", [](i64 d, u64 p, u64 bound) { return search_to_dict(find_witness(Discriminant(d), p, bound)); },
          py::arg("d"), py::arg("p"), py::arg("bound"));

    m.def("squarefree_density_3mod4", [](u64 x) {
        const auto b = residue_class(4, 3);
        return estimate_to_dict(estimate(set_intersection(squarefree_integers(x), b), b, x));
    }, py::arg("x"));
    m.def("suitable_divisor_density", [](u64 p, const ClassNumberTable &t, u64 x) {
        return estimate_to_dict(suitable_divisor_density(p, t, x));
    }, py::arg("p"), py::arg("table"), py::arg("x"));
    m.def("pgroup_density", [](u64 p, const ClassNumberTable &t, u64 x) {
        return estimate_to_dict(pgroup_density(p, t, x));
    }, py::arg("p"), py::arg("table"), py::arg("x"));
    m.def("landau_count", [](u64 x, u64 modulus, const std::vector<u64> &residues) {
        std::vector<std::tuple<u64, u64, double>> rows;
        for (const auto &s : landau_count(x, modulus, residues)) rows.emplace_back(s.x, s.count, s.ratio);
        return rows;
    }, py::arg("x"), py::arg("modulus"), py::arg("residues"));

    m.def("weight", [](const AbelianGroup &g) { return to_fraction(weight(g)); }, py::arg("group"));
    m.def("weighted_sum_coprime", [](const std::set<u64> &s, u64 x) { return to_fraction(weighted_sum_coprime(s, x)); },
          py::arg("excluded"), py::arg("x"));
    m.def("prime_lower_bound", [](const std::set<u64> &s, u64 x) { return to_fraction(prime_lower_bound(s, x)); },
          py::arg("excluded"), py::arg("x"));
    m.def("predicted_divisibility", &predicted_divisibility, py::arg("p"));
    m.def("empirical_cl_comparison", [](u64 p, const ClassNumberTable &t, u64 x) {
        const auto c = empirical_cl_comparison(p, t, x);
        py::dict out;
        out["p"] = c.p;
        out["bound"] = c.bound;
        out["divisible"] = c.divisible;
        out["total"] = c.total;
        out["empirical"] = c.empirical;
        out["predicted"] = c.predicted;
        return out;
    }, py::arg("p"), py::arg("table"), py::arg("x"));
}
