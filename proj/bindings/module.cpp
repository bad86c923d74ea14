#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tforge/field_descriptor.hpp"
#include "tforge/report.hpp"
#include "tforge/symmetric.hpp"

namespace py = pybind11;

namespace {

py::dict to_py(const tforge::RunReport& rep) {
  py::dict out;
  py::object loads = py::module_::import("json").attr("loads");
  out["report"] = loads(rep.json.dump());
  out["exit_code"] = rep.exit_code;
  return out;
}

std::string canonical_poly(const std::string& field, const std::string& text,
                           const std::vector<std::string>& vars) {
  tforge::FieldVariant K = tforge::parse_field_descriptor(field);
  return std::visit(
      [&](const auto& dom) {
        return tforge::format_poly(tforge::parse_poly(text, dom, vars), vars);
      },
      K);
}

}  // namespace

PYBIND11_MODULE(_tforge, m) {
  m.doc() = "exact covariants, Tschirnhaus transformations and normal forms "
            "for equations of degree 3..6";

  m.def("verify", [](const std::string& which) { return to_py(tforge::cmd_verify(which)); },
        py::arg("which"),
        "Run an exact identity suite: hermite, joubert, s4, conditions-tr, group-facts.");

  m.def(
      "transform",
      [](const std::string& field, const std::string& poly, const std::string& covariant) {
        return to_py(tforge::cmd_transform(field, poly, covariant));
      },
      py::arg("field"), py::arg("poly"), py::arg("covariant"),
      "Apply the degree-5 or degree-6 covariant to a monic separable polynomial.");

  m.def(
      "normalize",
      [](const std::string& field, py::object poly, py::object degree, std::uint64_t seed) {
        std::optional<std::string> p;
        std::optional<int> d;
        if (!poly.is_none()) p = poly.cast<std::string>();
        if (!degree.is_none()) d = degree.cast<int>();
        return to_py(tforge::cmd_normalize(field, p, d, seed));
      },
      py::arg("field"), py::arg("poly") = py::none(), py::arg("degree") = py::none(),
      py::arg("seed") = 12345,
      "Normalize an irreducible separable equation of degree 3..6.");

  m.def("table", [](int corrupt) { return to_py(tforge::cmd_table(corrupt)); },
        py::arg("corrupt_entry") = -1, "Re-verify the explicit quintic list.");

  m.def("canonical_poly", &canonical_poly, py::arg("field"), py::arg("poly"), py::arg("vars"),
        "Parse a polynomial over the given field and return its canonical text form.");

  m.def("delta", [](int n) {
    tforge::ZZ z;
    return tforge::format_poly(tforge::vandermonde_delta(z, n), tforge::numbered_vars("x", n));
  });

  m.def("elementary_symmetric", [](int n, int k) {
    tforge::ZZ z;
    return tforge::format_poly(tforge::elementary_symmetric(z, n, k),
                               tforge::numbered_vars("x", n));
  });
}
