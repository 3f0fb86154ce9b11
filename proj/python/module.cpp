#include "woplab/counting.hpp"
#include "woplab/error.hpp"
#include "woplab/noncross.hpp"
#include "woplab/p_polynomial.hpp"
#include "woplab/permutation.hpp"
#include "woplab/summation.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace woplab;

namespace {

// Big integers cross as decimal strings; the package wraps them in int().
std::string digits(const mpz_class &z) { return z.get_str(); }

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact decomposition of W-operators into summation templates";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_OverflowError);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init([](const std::string &text) { return parse_permutation(text); }), py::arg("text"))
      .def_static("from_images", [](std::vector<int> images) { return Permutation(std::move(images)); })
      .def_property_readonly("n", &Permutation::size)
      .def_property_readonly("images", &Permutation::images)
      .def_property_readonly("cycles", &Permutation::cycles)
      .def("descending", &Permutation::to_descending_string)
      .def("__call__", &Permutation::operator())
      .def("__str__", &Permutation::to_string)
      .def("__repr__", [](const Permutation &p) { return "Permutation('" + p.to_string() + "')"; })
      .def("__eq__", &Permutation::operator==)
      .def("__hash__", [](const Permutation &p) { return py::hash(py::tuple(py::cast(p.images()))); });

  m.def("lift", &lift, py::arg("alpha"), py::arg("j"));
  m.def("project", [](const Permutation &beta) {
    const Projection p = project(beta);
    return py::make_tuple(p.alpha, p.j);
  });
  m.def("lift_chain", [](const Permutation &p) { return lift_chain(p).js; });
  m.def("satisfies_star", &satisfies_star);

  m.def("normalize_p", [](const std::string &text) { return print_p(parse_p(text)); }, py::arg("text"));
  m.def(
      "apply_W", [](int n, const std::string &f) { return print_p(apply_W(n, parse_p(f))); }, py::arg("n"),
      py::arg("f"));
  m.def(
      "apply_template",
      [](const Permutation &beta, const std::string &f) { return print_p(apply_template(summation_of(beta), parse_p(f))); },
      py::arg("beta"), py::arg("f"));

  m.def(
      "decompose",
      [](int n, const std::string &format) {
        const RenderFormat fmt = parse_render_format(format);
        std::vector<std::tuple<Permutation, int, std::string>> out;
        for (const auto &t : decompose_W(n))
          out.emplace_back(t.perm, degree(t).total(), render(t, fmt));
        return out;
      },
      py::arg("n"), py::arg("format") = "plain");

  m.def("decode", [](const std::string &seq) { return decode(parse_sequence(seq)); });
  m.def("encode", [](const Permutation &p) { return encode(p).to_string(); });
  m.def("dual", [](const std::string &seq) { return dual(parse_sequence(seq)).to_string(); });
  m.def("enumerate", [](int n, int r) {
    std::vector<std::string> out;
    for (const auto &s : enumerate(n, r))
      out.push_back(s.to_string());
    return out;
  });

  m.def("_catalan", [](long n) { return digits(catalan(n)); });
  m.def("_narayana", [](long n, long r) { return digits(narayana(n, r)); });
  m.def("count_report", [](int n) { return verify_counts(n).to_json(); });
}
