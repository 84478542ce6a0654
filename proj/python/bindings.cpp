#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pa/analysis.hpp"
#include "pa/diagram.hpp"
#include "pa/gns.hpp"
#include "pa/io.hpp"
#include "pa/suites.hpp"
#include "pa/tl.hpp"
#include "pa/tower.hpp"

namespace py = pybind11;
using namespace pa;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
json from_py(const py::object& o) { return json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Temperley-Lieb planar algebra tower: exact diagram calculus and verification suites";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ModeMismatch>(m, "ModeMismatch", PyExc_TypeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<Ring>(m, "Ring")
      .def_static("symbolic", &Ring::symbolic)
      .def_static("rational", [](const std::string& q) { return Ring::rational(parse_rational(q)); })
      .def_static("floating", &Ring::floating)
      .def_static("parse", &parse_delta)
      .def("__repr__", [](const Ring& r) { return "Ring(" + r.describe() + ")"; })
      .def(py::self == py::self);

  py::class_<Scalar>(m, "Scalar")
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; })
      .def("__float__", &Scalar::to_double)
      .def("to_json", [](const Scalar& s) { return to_py(to_json(s)); })
      .def(py::self == py::self);

  py::class_<Element>(m, "Element")
      .def_static("from_json", [](const py::object& o, const Ring& r) { return element_from_json(from_py(o), r); },
                  py::arg("data"), py::arg("ring") = Ring::symbolic())
      .def_static("unit", &unit)
      .def_static("jones_projection", &jones_projection)
      .def_property_readonly("n", &Element::n)
      .def("to_json", [](const Element& x) { return to_py(to_json(x)); })
      .def("specialize", &Element::specialize)
      .def("__str__", &Element::str)
      .def("__repr__", [](const Element& x) { return "Element(" + x.str() + ")"; })
      .def("__mul__", &multiply)
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def(py::self == py::self);

  py::class_<GradedElement>(m, "GradedElement")
      .def_static("from_json", [](const py::object& o, const Ring& r) { return graded_from_json(from_py(o), r); },
                  py::arg("data"), py::arg("ring") = Ring::symbolic())
      .def_static("of", &GradedElement::of)
      .def_property_readonly("level", &GradedElement::level)
      .def("component", &GradedElement::component)
      .def("to_json", [](const GradedElement& a) { return to_py(to_json(a)); })
      .def("specialize", &GradedElement::specialize)
      .def("__str__", &GradedElement::str)
      .def("__repr__", [](const GradedElement& a) { return "GradedElement(" + a.str() + ")"; })
      .def("__add__", [](const GradedElement& a, const GradedElement& b) { return a + b; })
      .def("__sub__", [](const GradedElement& a, const GradedElement& b) { return a - b; })
      .def(py::self == py::self);

  // Temperley-Lieb layer
  m.def("multiply", &multiply);
  m.def("star", &star);
  m.def("tau", &tau);
  m.def("rotate", &rotate, py::arg("x"), py::arg("times") = 1);
  m.def("op_norm", &op_norm);
  m.def("psd_sqrt", &psd_sqrt);
  m.def("catalan", &catalan);
  m.def("dimension", [](int n) { return enumerate_diagrams(n).size(); });

  // filtered algebras
  m.def("sharp", &sharp);
  m.def("bullet", &bullet);
  m.def("dagger", py::overload_cast<const GradedElement&>(&dagger));
  m.def("trace_tk", &trace_tk);
  m.def("trace_Tr", &trace_Tr);
  m.def("inner_product", &inner_product);
  m.def("include", &include);
  m.def("include_to", &include_to);
  m.def("cond_expect", &cond_expect);
  m.def("phi", &phi);
  m.def("psi", &psi);
  m.def("dot_action", &dot_action);
  m.def("jones_e", &jones_e);
  m.def("element_c", &element_c);
  m.def("element_d", &element_d);

  m.def(
      "evaluate_tangle",
      [](const std::string& dsl, const std::vector<Element>& inputs, const Ring& ring) {
        return evaluate(parse_tangle(dsl), inputs, ring);
      },
      py::arg("dsl"), py::arg("inputs"), py::arg("ring") = Ring::symbolic());

  m.def("suite_names", &suite_names);
  m.def(
      "verify",
      [](const std::string& suite, const std::string& delta, int level, int max_colour, uint64_t seed, int jobs) {
        SuiteConfig cfg;
        if (!delta.empty()) {
          Ring r = parse_delta(delta);
          if (r.mode() != Mode::symbolic) cfg.ring = r;
        }
        cfg.level = level;
        cfg.max_colour = max_colour;
        cfg.seed = seed;
        cfg.jobs = jobs;
        SuiteResult res;
        {
          py::gil_scoped_release release;
          res = run_suite(suite, cfg);
        }
        return to_py(res.to_json(cfg));
      },
      py::arg("suite"), py::arg("delta") = "", py::arg("level") = 2, py::arg("max_colour") = -1,
      py::arg("seed") = 42, py::arg("jobs") = 1);
}
