// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "algcheck/cli.hpp"
#include "algcheck/document.hpp"
#include "algcheck/fixtures.hpp"
#include "algcheck/operators.hpp"

namespace py = pybind11;

namespace {

std::string check_operator_json(const std::string& text, const std::string& name, const std::string& kind,
                                unsigned power, const std::string& weight, const std::string& product) {
  using namespace algcheck;
  const AlgebraDocument doc = parse_document(text);
  const auto k = parse_operator_kind(kind);
  if (!k) throw Error(ErrorKind::parse, "unknown operator kind '" + kind + "'");
  const auto it = doc.operators.find(name);
  if (it == doc.operators.end()) throw Error(ErrorKind::shape, "no operator named '" + name + "'");
  ProductScope scope = ProductScope::present;
  if (product == "mu") {
    scope = ProductScope::mu;
  } else if (product == "bracket") {
    scope = ProductScope::bracket;
  } else if (product != "both" && product != "present") {
    throw Error(ErrorKind::parse, "product must be mu, bracket or both");
  }
  const OperatorClaim claim{EvenLinearMap(doc.algebra.basis(), it->second),
                            OperatorParams{*k, power, parse_scalar(weight)}};
  return to_json(check_operator(doc.algebra, claim, OperatorOptions{scope})).dump();
}

}  // namespace

PYBIND11_MODULE(_algcheck, m) {
  m.doc() = "Exact checker for graded Hom-algebra identities";

  static py::exception<algcheck::Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const algcheck::DocumentError& e) {
      error((e.code() + " at " + e.location() + ": " + e.what()).c_str());
    } catch (const algcheck::Error& e) {
      error((std::string(algcheck::to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("fixture_names", &algcheck::fixture_names);
  m.def("fixture_text", [](const std::string& name) { return algcheck::serialize_document(algcheck::fixture(name)); });
  m.def("normalize", [](const std::string& text) {
    return algcheck::serialize_document(algcheck::parse_document(text));
  });
  m.def(
      "validate_json",
      [](const std::string& text, bool commutative) {
        return algcheck::to_json(algcheck::validation_report(algcheck::parse_document(text), commutative)).dump();
      },
      py::arg("text"), py::arg("commutative") = false);
  m.def("check_operator_json", &check_operator_json, py::arg("text"), py::arg("name"), py::arg("kind"),
        py::arg("power") = 0, py::arg("weight") = "0", py::arg("product") = "present");
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = algcheck::run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
