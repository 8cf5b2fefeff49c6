// Python bindings for the core calculus. Models are exposed as thin classes;
// reports, catalog dumps and anomaly flags cross the boundary as JSON text
// (the python package decodes them into dicts).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kodcalc/report_io.hpp"

namespace py = pybind11;
using namespace kodcalc;

namespace {

SurfaceFamily family_by_name(const std::string& name,
                             const std::vector<std::int64_t>& params) {
    const dsl::Expr e = dsl::family(name, params);
    const auto model = dsl::evaluate(e);
    return std::get<SurfaceModel>(model).family;
}

SurfaceModel instantiate_named(const std::string& name,
                               const std::vector<std::int64_t>& params) {
    return instantiate(family_by_name(name, params));
}

ExampleId parse_example(const std::string& name) {
    const auto id = example_from_name(name);
    if (!id) throw error(errc::bad_parameter, "unknown example '" + name + "'");
    return *id;
}

std::string dump(const nlohmann::json& payload) {
    return json_document(payload).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact invariant calculus for compact complex surfaces and "
              "surface x curve threefolds";

    static py::exception<error> calculus_error(m, "CalculusError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const error& e) {
            py::set_error(calculus_error,
                          (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<KodairaDim>(m, "KodairaDim")
        .def_static("minus_infinity", &KodairaDim::minus_infinity)
        .def_static("finite", &KodairaDim::finite, py::arg("value"))
        .def_property_readonly("is_finite", &KodairaDim::is_finite)
        .def_property_readonly("value", &KodairaDim::value)
        .def("__str__", &KodairaDim::str)
        .def("__repr__", [](const KodairaDim& d) { return "KodairaDim(" + d.str() + ")"; })
        .def("__eq__", [](const KodairaDim& a, const KodairaDim& b) { return a == b; })
        .def("__add__", [](KodairaDim a, KodairaDim b) { return a + b; });

    py::class_<IntersectionForm>(m, "IntersectionForm")
        .def_readonly("rank", &IntersectionForm::rank)
        .def_readonly("b_plus", &IntersectionForm::b_plus)
        .def_readonly("b_minus", &IntersectionForm::b_minus)
        .def_property_readonly("signature", &IntersectionForm::signature)
        .def_property_readonly("indefinite", &IntersectionForm::indefinite)
        .def_property_readonly(
            "parity", [](const IntersectionForm& f) { return parity_name(f.parity); })
        .def("__repr__", [](const IntersectionForm& f) {
            return "IntersectionForm(rank=" + std::to_string(f.rank) +
                   ", signature=" + std::to_string(f.signature()) + ", " +
                   parity_name(f.parity) + ")";
        });

    py::class_<FundamentalGroup>(m, "FundamentalGroup")
        .def_static("trivial", &FundamentalGroup::trivial)
        .def_static("surface_group", &FundamentalGroup::surface_group, py::arg("genus"))
        .def_property_readonly("is_trivial", &FundamentalGroup::is_trivial)
        .def("__str__", &FundamentalGroup::str)
        .def("__repr__", &FundamentalGroup::str);

    py::class_<SurfaceModel>(m, "SurfaceModel")
        .def_property_readonly("family",
                               [](const SurfaceModel& s) { return s.family.name(); })
        .def_property_readonly("params",
                               [](const SurfaceModel& s) { return s.family.params(); })
        .def_readonly("blowups", &SurfaceModel::blowups)
        .def_property_readonly("c1_sq",
                               [](const SurfaceModel& s) { return s.chern.c1_sq; })
        .def_property_readonly("c2", [](const SurfaceModel& s) { return s.chern.c2; })
        .def_property_readonly("p_g", [](const SurfaceModel& s) { return s.hodge.p_g; })
        .def_property_readonly("chi", [](const SurfaceModel& s) { return s.hodge.chi_o; })
        .def_readonly("spin", &SurfaceModel::spin)
        .def_property_readonly("kod", [](const SurfaceModel& s) { return s.kod.str(); })
        .def_property_readonly("c1_coords",
                               [](const SurfaceModel& s) { return s.c1_coords; })
        .def("__repr__", [](const SurfaceModel& s) {
            return "SurfaceModel(" + s.family.display() + " + " +
                   std::to_string(s.blowups) + " blow-ups)";
        });

    py::class_<ChernTriple>(m, "ChernTriple")
        .def_readonly("c1_cubed", &ChernTriple::c1_cubed)
        .def_readonly("c1c2", &ChernTriple::c1c2)
        .def_readonly("c3", &ChernTriple::c3)
        .def("__eq__", [](const ChernTriple& a, const ChernTriple& b) { return a == b; })
        .def("__iter__",
             [](const ChernTriple& t) {
                 return py::iter(py::make_tuple(t.c1_cubed, t.c1c2, t.c3));
             })
        .def("__repr__", [](const ChernTriple& t) {
            return "ChernTriple(" + std::to_string(t.c1_cubed) + ", " +
                   std::to_string(t.c1c2) + ", " + std::to_string(t.c3) + ")";
        });

    py::class_<ThreefoldModel>(m, "ThreefoldModel")
        .def_readonly("surface", &ThreefoldModel::surface)
        .def_property_readonly("genus",
                               [](const ThreefoldModel& x) { return x.curve.genus; })
        .def_readonly("chern3", &ThreefoldModel::chern3)
        .def_property_readonly("kod", [](const ThreefoldModel& x) { return x.kod.str(); })
        .def_property_readonly("pi1", [](const ThreefoldModel& x) { return x.pi1.str(); })
        .def("__repr__", [](const ThreefoldModel& x) {
            return "ThreefoldModel(" + x.surface.family.display() + " x genus-" +
                   std::to_string(x.curve.genus) + " curve)";
        });

    py::class_<Verdict>(m, "Verdict")
        .def_property_readonly("outcome",
                               [](const Verdict& v) { return outcome_name(v.outcome); })
        .def_readonly("chain", &Verdict::chain)
        .def_property_readonly("diffeomorphic", &Verdict::diffeomorphic)
        .def("__repr__", [](const Verdict& v) {
            return std::string("Verdict(") + outcome_name(v.outcome) + ")";
        });

    m.def("instantiate", &instantiate_named, py::arg("family"),
          py::arg("params") = std::vector<std::int64_t>{},
          "catalog row for a family, e.g. instantiate('dolgachev', [2, 3])");
    m.def("chi_from_noether",
          [](std::int64_t c1_sq, std::int64_t c2) {
              return chi_from_noether(ChernPair{c1_sq, c2});
          },
          py::arg("c1_sq"), py::arg("c2"));
    m.def("betti_data",
          [](std::int64_t p_g, std::int64_t c2) {
              const BettiData b = betti_data(p_g, c2);
              return py::make_tuple(b.b2, b.b_plus, b.b_minus);
          },
          py::arg("p_g"), py::arg("c2"));
    m.def("intersection_form", &intersection_form, py::arg("surface"));
    m.def("plurigenus", &plurigenus, py::arg("surface"), py::arg("m"));
    m.def("kodaira_dimension",
          [](const SurfaceModel& s) { return kodaira_dimension(s).str(); },
          py::arg("surface"));
    m.def("blow_up", &blow_up, py::arg("surface"), py::arg("k"));
    m.def("log_transform", &log_transform, py::arg("surface"), py::arg("p"), py::arg("q"));
    m.def("curve_plurigenus",
          [](std::int64_t genus, std::int64_t m) {
              return curve_plurigenus(make_curve(genus), m);
          },
          py::arg("genus"), py::arg("m"));
    m.def("curve_kod",
          [](std::int64_t genus) { return curve_kod(make_curve(genus)).str(); },
          py::arg("genus"));
    m.def("product",
          [](const SurfaceModel& s, std::int64_t genus) {
              return product(s, make_curve(genus));
          },
          py::arg("surface"), py::arg("genus"));
    m.def("threefold_plurigenus", &threefold_plurigenus, py::arg("threefold"), py::arg("m"));

    m.def("forms_isomorphic", &forms_isomorphic, py::arg("a"), py::arg("b"));
    m.def("h_cobordant", &h_cobordant, py::arg("a"), py::arg("b"));
    m.def("balance_blowups", &balance_blowups, py::arg("m"), py::arg("m2"), py::arg("k"));
    m.def("wh_vanishes", &wh_vanishes, py::arg("pi1"));
    m.def("diffeomorphic_product", &diffeomorphic_product, py::arg("m"), py::arg("m2"),
          py::arg("genus"));
    m.def("c1_primitive",
          [](const std::vector<std::int64_t>& v) { return c1_primitive(v); },
          py::arg("coords"));

    m.def("evaluate",
          [](const std::string& text) -> py::object {
              const dsl::Model model = dsl::evaluate(dsl::parse(text));
              if (const auto* s = std::get_if<SurfaceModel>(&model)) return py::cast(*s);
              return py::cast(std::get<ThreefoldModel>(model));
          },
          py::arg("expression"), "parse and evaluate a construction expression");
    m.def("canonical",
          [](const std::string& text) { return dsl::pretty_print(dsl::parse(text)); },
          py::arg("expression"), "canonical form of a construction expression");

    m.def("min_distinguishing_plurigenus",
          [](const ThreefoldModel& x, const ThreefoldModel& y, std::int64_t bound) {
              return min_distinguishing_plurigenus(x, y, bound);
          },
          py::arg("x"), py::arg("y"), py::arg("m_bound") = 40);

    m.def("verify_theorem_a_json",
          [](const std::string& example, std::int64_t k_max, std::int64_t genus) {
              return dump(to_json(verify_theorem_A(parse_example(example), k_max, genus)));
          },
          py::arg("example"), py::arg("k_max") = 20, py::arg("genus") = 1);
    m.def("verify_theorem_b_json",
          [](const std::string& example, std::int64_t k_max, std::int64_t genus,
             std::int64_t m_bound) {
              return dump(to_json(
                  verify_theorem_B(parse_example(example), k_max, genus, m_bound)));
          },
          py::arg("example"), py::arg("k_max") = 20, py::arg("genus") = 1,
          py::arg("m_bound") = 40);
    m.def("coverage_theorem_a", [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (const KodPair& p : coverage_theorem_A())
            out.emplace_back(p.low.str(), p.high.str());
        return out;
    });
    m.def("anomaly_scan_json", [] {
        nlohmann::json list = nlohmann::json::array();
        for (const AnomalyFlag& flag : anomaly_scan()) list.push_back(to_json(flag));
        return dump(nlohmann::json{{"anomalies", list}});
    });
    m.def("catalog_json", [] { return dump(catalog_json()); });
    m.def("surface_json", [](const SurfaceModel& s) { return dump(to_json(s)); });
    m.def("threefold_json", [](const ThreefoldModel& x) { return dump(to_json(x)); });

    m.attr("__version__") = "1.0.0";
}
