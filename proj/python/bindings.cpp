#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "weylcells/cell_membership.hpp"
#include "weylcells/cli.hpp"
#include "weylcells/g2_normal_form.hpp"
#include "weylcells/kl_engine.hpp"
#include "weylcells/literal.hpp"
#include "weylcells/sign_type.hpp"
#include "weylcells/verify.hpp"

namespace py = pybind11;
using namespace weylcells;

namespace {

py::dict verdict_dict(const CellVerdict& v) {
  py::dict d;
  d["verdict"] = std::string(verdict_name(v.verdict));
  d["criterion"] = v.criterion;
  d["witness"] = v.witness;
  return d;
}

// pybind11 cannot hold shared_ptr<const T>; systems are immutable either way.
using Held = std::shared_ptr<RootSystem>;

Side parse_side(const std::string& s) {
  if (s == "left") return Side::Left;
  if (s == "right") return Side::Right;
  if (s == "two-sided") return Side::TwoSided;
  throw py::value_error("side must be 'left', 'right' or 'two-sided'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Affine Weyl group cells: elements, cell criteria and Kazhdan-Lusztig polynomials";

  py::register_exception<LiteralError>(m, "LiteralError", PyExc_ValueError);
  py::register_exception<UnknownSuite>(m, "UnknownSuite", PyExc_ValueError);
  py::register_exception<BallCapExceeded>(m, "BallCapExceeded", PyExc_RuntimeError);

  py::class_<RootSystem, Held>(m, "RootSystem")
      .def(py::init([](const std::string& family, int rank) {
             return std::const_pointer_cast<RootSystem>(RootSystem::build(parse_family(family), rank));
           }),
           py::arg("family"), py::arg("rank"))
      .def_property_readonly("name", &RootSystem::name)
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("family", [](const RootSystem& rs) { return std::string(family_name(rs.family())); })
      .def_property_readonly("num_positive", &RootSystem::num_positive)
      .def("weyl_group_order", &RootSystem::weyl_group_order)
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + rs.name() + "')"; });

  py::class_<Element>(m, "Element")
      .def(py::init([](const Held& rs, const std::string& literal) { return parse_element(rs, literal); }),
           py::arg("system"), py::arg("literal") = "e")
      .def_property_readonly("length", &Element::length)
      .def_property_readonly("word", [](const Element& g) { return format_word(g.reduced_word()); })
      .def_property_readonly("literal", &element_literal)
      .def_property_readonly("gamma", &Element::gamma_label)
      .def_property_readonly("translation", [](const Element& g) { return g.lambda(); })
      .def("inverse", &Element::inverse)
      .def("coordinate_form", &Element::coordinate_form)
      .def("is_translation", &Element::is_translation)
      .def("in_affine_weyl", &Element::in_affine_weyl)
      .def("left_descents", &Element::left_descents)
      .def("right_descents", &Element::right_descents)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", &Element::hash)
      .def("__repr__", [](const Element& g) { return "Element('" + element_literal(g) + "')"; });

  m.def("fundamental", [](const Held& rs, int i) { return Element::fundamental(rs, i); }, py::arg("system"),
        py::arg("i"), "x_i = t_{lambda_i}");
  m.def("dominant", [](const Held& rs, const IntVec& a) { return Element::dominant(rs, a); }, py::arg("system"),
        py::arg("exponents"), "prod x_i^{a_i}");
  m.def("bruhat_leq", &bruhat_leq, "x <= w in Bruhat order; None across different gamma cosets");
  m.def("affine_ball", [](const Held& rs, int L, std::size_t cap) { return affine_ball(rs, L, cap); },
        py::arg("system"), py::arg("L"), py::arg("cap") = 200'000);

  m.def("in_lowest_cell", &in_lowest_cell);
  m.def("classify", [](const Element& g) { return verdict_dict(classify(g)); },
        "verdict dict with keys verdict, criterion, witness");
  m.def("translation_second_lowest", [](const Element& g) { return verdict_dict(translation_second_lowest(g)); });
  m.def("a_value_second_lowest", [](const RootSystem& rs) { return a_value_table(rs.family(), rs.rank()); });
  m.def("sign_type", [](const Element& g) { return sign_type(g).str(); });
  m.def("is_admissible", [](const RootSystem& rs, const std::string& s) { return is_admissible(rs, SignType::parse(rs, s)); });
  m.def("mu_partition", [](const Element& g) { return mu_partition(g); }, "type A partition invariant");
  m.def("window", [](const Element& g) { return to_permutation(g).window(); }, "affine permutation window (type A)");
  m.def("g2_normal_form", [](const Element& g) -> py::object {
    auto nf = g2_normal_form(g);
    if (!nf) return py::none();
    return py::make_tuple(nf->i, nf->j, nf->k);
  });

  py::class_<KLTable>(m, "KLTable")
      .def(py::init([](const Held& rs, int L, std::size_t cap) { return KLTable(rs, L, cap); }), py::arg("system"),
           py::arg("L"), py::arg("cap") = 200'000, py::call_guard<py::gil_scoped_release>())
      .def("__len__", &KLTable::size)
      .def_property_readonly("elements", &KLTable::elements)
      .def("P", py::overload_cast<const Element&, const Element&>(&KLTable::P, py::const_), "coefficients, lowest first")
      .def("mu", [](const KLTable& t, const Element& x, const Element& w) { return t.mu(t.require_index(x), t.require_index(w)); })
      .def("is_distinguished", [](const KLTable& t, const Element& w, std::int64_t a) {
        return t.is_distinguished(t.require_index(w), a);
      })
      .def("components", [](const KLTable& t, const std::string& side) {
        const CellGraph g = t.cell_graph(parse_side(side));
        std::vector<std::vector<Element>> out;
        for (const auto& comp : g.components) {
          out.emplace_back();
          for (int x : comp) out.back().push_back(t.element(x));
        }
        return out;
      }, py::arg("side") = "left", "strongly connected components of the cell graph inside the ball");

  m.def("suites", [] {
    std::vector<std::string> names;
    for (const auto& s : suites()) names.push_back(s.name);
    return names;
  });
  m.def("run_suite", [](const std::string& name) {
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(name);
    }
    py::list checks;
    for (const auto& c : r.checks) checks.append(py::make_tuple(c.name, c.pass, c.detail));
    py::dict d;
    d["suite"] = r.suite;
    d["claim"] = r.claim;
    d["pass"] = r.pass();
    d["checks"] = checks;
    d["findings"] = r.findings;
    return d;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "run the command line in-process; returns (status, stdout, stderr)");
}
