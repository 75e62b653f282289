// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "algcheck/axioms.hpp"
#include "algcheck/constructions.hpp"
#include "algcheck/document.hpp"
#include "algcheck/fixtures.hpp"
#include "algcheck/operators.hpp"

namespace algcheck {

using nlohmann::json;

std::string format_vector(const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    Scalar c = v[k];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    if (c != 1) out += to_string(c) + " ";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

namespace {

bool group_section(const std::string& axiom) {
  return axiom.starts_with("bicharacter") || axiom.starts_with("multiplier");
}

std::string element_label(std::size_t index, const GroupSpec* group) {
  if (!group) return "#" + std::to_string(index);
  std::string s = "(";
  const auto coords = group->element(index).coords;
  for (std::size_t c = 0; c < coords.size(); ++c) s += (c ? "," : "") + std::to_string(coords[c]);
  return s + ")";
}

std::string tuple_label(const AxiomReport& a, const Violation& v, const GroupSpec* group) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.indices.size(); ++i) {
    if (i) s += ", ";
    s += group_section(a.axiom) ? element_label(v.indices[i], group) : "e" + std::to_string(v.indices[i] + 1);
  }
  return s + ")";
}

std::string value_text(const AxiomReport& a, const Vector& v) {
  if (group_section(a.axiom)) return v.empty() ? "0" : to_string(v.front());
  return format_vector(v);
}

std::string violation_line(const AxiomReport& a, const Violation& v, const GroupSpec* group) {
  return "at " + tuple_label(a, v, group) + ": lhs " + value_text(a, v.lhs) + ", rhs " + value_text(a, v.rhs) +
         ", residual " + value_text(a, v.residual());
}

}  // namespace

std::string format_report(const Report& report, bool full, const GroupSpec* group) {
  std::ostringstream out;
  for (const auto& a : report.axioms()) {
    out << (a.holds() ? "PASS " : "FAIL ") << a.axiom << " (" << a.checked << " checked";
    if (!a.holds()) out << ", " << a.violations.size() << (a.violations.size() == 1 ? " violation" : " violations");
    out << ")\n";
    if (a.holds()) continue;
    if (full) {
      for (const auto& v : a.violations) out << "    " << violation_line(a, v, group) << "\n";
    } else {
      out << "    first " << violation_line(a, a.violations.front(), group) << "\n";
    }
  }
  return out.str();
}

namespace {

json summary(const Report& r) {
  json failed = json::array();
  for (const auto& a : r.axioms()) {
    if (!a.holds()) failed.push_back(a.axiom);
  }
  return json{{"ok", r.ok()}, {"violations", r.violation_count()}, {"failed", std::move(failed)}};
}

Report relabel(Report r, const std::string& prefix) {
  Report out;
  for (auto a : r.axioms()) {
    a.axiom = prefix + a.axiom;
    out.add(std::move(a));
  }
  return out;
}

}  // namespace

Report validation_report(const AlgebraDocument& doc, bool commutative) {
  const GradedAlgebra& a = doc.algebra;
  Report r = check_bicharacter_laws(a.epsilon().table());
  for (const auto& [name, table] : doc.multipliers) {
    Report m = validate_multiplier(a.group(), table, false);
    r.append(relabel(std::move(m), "[" + name + "] "));
  }
  if (a.has_mu() && a.has_bracket()) {
    r.append(check_hom_poisson(a, commutative));
  } else if (a.has_mu()) {
    r.append(check_hom_associative(a));
    if (commutative) r.append(check_epsilon_commutative(a));
  } else {
    r.append(check_hom_lie(a));
  }
  return r;
}

namespace {

const Matrix& named_operator(const AlgebraDocument& doc, const std::string& name) {
  const auto it = doc.operators.find(name);
  if (it == doc.operators.end()) {
    std::string known;
    for (const auto& [k, _] : doc.operators) known += (known.empty() ? "" : ", ") + k;
    throw Error(ErrorKind::shape, "no operator named '" + name + "' (available: " + (known.empty() ? "none" : known) + ")");
  }
  return it->second;
}

const MultiplierTable& named_multiplier(const AlgebraDocument& doc, const std::string& name) {
  const auto it = doc.multipliers.find(name);
  if (it == doc.multipliers.end()) throw Error(ErrorKind::shape, "no multiplier named '" + name + "'");
  return it->second;
}

Vector parse_vector(const std::string& text) {
  Vector v;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    v.push_back(parse_scalar(item));
  }
  return v;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::hypothesis:
    case ErrorKind::inversion:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

struct Common {
  std::string path;
  bool as_json = false;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_validate(const Common& c, bool commutative, bool full, std::ostream& out) {
  const AlgebraDocument doc = load_document(c.path);
  const Report r = validation_report(doc, commutative);
  if (c.as_json) {
    emit(out, json{{"command", full ? "report" : "validate"}, {"name", doc.name}, {"report", to_json(r)}});
  } else {
    out << format_report(r, full, &doc.algebra.group());
    out << (r.ok() ? "OK" : "FAILED") << ": " << r.axioms().size() << " sections, " << r.violation_count()
        << " violations\n";
  }
  return r.ok() ? kExitOk : kExitFailure;
}

struct OperatorArgs {
  std::string name, kind, product = "both", weight = "0";
  unsigned power = 0;
};

int cmd_check_operator(const Common& c, const OperatorArgs& o, std::ostream& out) {
  const AlgebraDocument doc = load_document(c.path);
  const auto kind = parse_operator_kind(o.kind);
  if (!kind) throw Error(ErrorKind::shape, "unknown operator kind '" + o.kind + "'");
  ProductScope scope = ProductScope::present;
  if (o.product == "mu") scope = ProductScope::mu;
  if (o.product == "bracket") scope = ProductScope::bracket;
  const EvenLinearMap m(doc.algebra.basis(), named_operator(doc, o.name));
  const Report r = check_operator(doc.algebra, OperatorClaim{m, OperatorParams{*kind, o.power, parse_scalar(o.weight)}},
                                  OperatorOptions{scope});
  if (c.as_json) {
    emit(out, json{{"command", "check-operator"}, {"operator", o.name}, {"kind", o.kind}, {"report", to_json(r)}});
  } else {
    out << format_report(r);
    out << (r.ok() ? "OK" : "FAILED") << ": " << o.name << " as " << o.kind << " operator\n";
  }
  return r.ok() ? kExitOk : kExitFailure;
}

struct TwistArgs {
  std::string construction, op, multiplier, xi, left, output;
  std::optional<std::string> weight;
  unsigned power = 0;
};

ConstructionResult run_construction(const AlgebraDocument& doc, const TwistArgs& t) {
  const GradedAlgebra& p = doc.algebra;
  auto op = [&] { return EvenLinearMap(p.basis(), named_operator(doc, t.op)); };
  const std::string& c = t.construction;
  if (c == "xi") return xi_twist(p, parse_vector(t.xi));
  if (c == "multiplier-sym") return multiplier_twist_symmetric(p, named_multiplier(doc, t.multiplier));
  if (c == "multiplier-delta") {
    std::vector<NamedMap> maps;
    for (const auto& [name, m] : doc.operators) {
      try {
        maps.emplace_back(name, EvenLinearMap(p.basis(), m));
      } catch (const Error&) {
        // Odd maps cannot be endomorphisms; skip them.
      }
    }
    return multiplier_twist_delta(p, named_multiplier(doc, t.multiplier), maps);
  }
  if (c == "transport") return transport_along_bijection(p, op());
  if (c == "centroid") return centroid_twist(p, op());
  if (c == "averaging-pair") return averaging_twist_pairwise(p, op());
  if (c == "averaging-untwisted") return averaging_twist_untwisted(p, op());
  if (c == "averaging-power") return averaging_twist_power(p, op(), t.power);
  if (c == "nijenhuis") return nijenhuis_twist(p, op());
  if (c == "rota-baxter") {
    std::string w;
    if (t.weight) {
      w = *t.weight;
    } else if (doc.metadata.contains("lambda") && doc.metadata["lambda"].is_string()) {
      w = doc.metadata["lambda"].get<std::string>();
    } else {
      throw Error(ErrorKind::shape, "rota-baxter needs --weight (or a \"lambda\" metadata entry)");
    }
    return rota_baxter_twist(p, op(), parse_scalar(w));
  }
  if (c == "tensor") {
    if (t.left.empty()) throw Error(ErrorKind::shape, "tensor needs --left <file>");
    return tensor_with_commutative(load_document(t.left).algebra, p);
  }
  throw Error(ErrorKind::shape, "unknown construction '" + c + "'");
}

int finish_twist(const AlgebraDocument& src, const std::string& construction, const ConstructionResult& r,
                 const std::string& output, bool as_json, std::ostream& out) {
  AlgebraDocument doc{src.name + "_" + construction, r.algebra, {}, {}, json::object()};
  std::replace(doc.name.begin(), doc.name.end(), '-', '_');
  doc.metadata = json{{"construction", construction},
                      {"source", src.name},
                      {"gate", summary(r.gate)},
                      {"certification", summary(r.certification)},
                      {"certified", r.certified()}};
  if (!r.morphism.axioms().empty()) {
    doc.metadata["morphism"] = summary(r.morphism);
    doc.metadata["morphism_binding"] = r.morphism_binding;
  }
  save_document(output, doc);

  if (as_json) {
    json j{{"command", "twist"},
           {"construction", construction},
           {"output", output},
           {"certified", r.certified()},
           {"gate", to_json(r.gate)},
           {"certification", to_json(r.certification)}};
    if (!r.morphism.axioms().empty()) {
      j["morphism"] = to_json(r.morphism);
      j["morphism_binding"] = r.morphism_binding;
    }
    emit(out, j);
  } else {
    out << "gate:\n" << format_report(r.gate);
    out << "certification:\n" << format_report(r.certification);
    if (!r.morphism.axioms().empty()) {
      out << "morphism" << (r.morphism_binding ? "" : " (informational)") << ":\n" << format_report(r.morphism);
    }
    out << (r.certified() ? "CERTIFIED" : "NOT CERTIFIED") << ": wrote " << output << "\n";
  }
  return r.certified() ? kExitOk : kExitFailure;
}

int cmd_twist(const Common& c, const TwistArgs& t, std::ostream& out) {
  const AlgebraDocument doc = load_document(c.path);
  return finish_twist(doc, t.construction, run_construction(doc, t), t.output, c.as_json, out);
}

int cmd_tensor(const std::string& left, const Common& c, const std::string& output, std::ostream& out) {
  const AlgebraDocument a = load_document(left);
  const AlgebraDocument p = load_document(c.path);
  AlgebraDocument named = p;
  named.name = a.name + "_" + p.name;
  return finish_twist(named, "tensor", tensor_with_commutative(a.algebra, p.algebra), output, c.as_json, out);
}

int cmd_fixtures(const std::string& dir, std::ostream& out) {
  std::filesystem::create_directories(dir);
  for (const auto& name : fixture_names()) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    save_document(path, fixture(name));
    out << "wrote " << path.string() << "\n";
  }
  return kExitOk;
}

void report_gate(const GateError& e, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    emit(out, json{{"error", "hypothesis"}, {"message", e.what()}, {"gate", to_json(e.report())}});
  } else {
    out << "gate:\n" << format_report(e.report());
  }
  err << "error: " << e.what() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks graded Hom-algebra axioms with exact rational arithmetic", "algcheck"};
  app.require_subcommand(1);

  Common common;
  bool commutative = false;
  auto* validate = app.add_subcommand("validate", "Check every axiom that applies to an algebra file");
  validate->add_option("path", common.path, "Algebra file")->required();
  validate->add_flag("--commutative", commutative, "Also require mu to be epsilon-commutative");
  validate->add_flag("--json", common.as_json, "Machine-readable output");

  auto* report = app.add_subcommand("report", "Like validate, listing every violation");
  report->add_option("path", common.path, "Algebra file")->required();
  report->add_flag("--commutative", commutative, "Also require mu to be epsilon-commutative");
  report->add_flag("--json", common.as_json, "Machine-readable output");

  OperatorArgs op;
  auto* check_op = app.add_subcommand("check-operator", "Check a named operator of the file");
  check_op->add_option("path", common.path, "Algebra file")->required();
  check_op->add_option("--name", op.name, "Operator name in the file")->required();
  check_op->add_option("--kind", op.kind, "centroid | averaging | rota-baxter | nijenhuis")->required();
  check_op->add_option("--power", op.power, "Power k of alpha");
  check_op->add_option("--weight", op.weight, "Rota-Baxter weight");
  check_op->add_option("--product", op.product, "mu | bracket | both")
      ->check(CLI::IsMember({"mu", "bracket", "both"}));
  check_op->add_flag("--json", common.as_json, "Machine-readable output");

  TwistArgs tw;
  auto* twist = app.add_subcommand("twist", "Build a new algebra and certify it");
  twist->add_option("path", common.path, "Algebra file")->required();
  twist->add_option("--construction", tw.construction,
                    "xi | multiplier-sym | multiplier-delta | transport | centroid | averaging-pair | "
                    "averaging-untwisted | averaging-power | nijenhuis | rota-baxter | tensor")
      ->required();
  twist->add_option("--operator", tw.op, "Operator name in the file");
  twist->add_option("--weight", tw.weight, "Rota-Baxter weight");
  twist->add_option("--power", tw.power, "Power k of alpha");
  twist->add_option("--multiplier", tw.multiplier, "Multiplier name in the file");
  twist->add_option("--xi", tw.xi, "Comma-separated coordinates of xi");
  twist->add_option("--left", tw.left, "Commutative factor A for the tensor construction");
  twist->add_option("-o,--output", tw.output, "Output file")->required();
  twist->add_flag("--json", common.as_json, "Machine-readable output");

  std::string left, tensor_out;
  auto* tensor = app.add_subcommand("tensor", "Tensor a commutative algebra A with P");
  tensor->add_option("left", left, "Commutative algebra A")->required();
  tensor->add_option("right", common.path, "Hom-Poisson algebra P")->required();
  tensor->add_option("-o,--output", tensor_out, "Output file")->required();
  tensor->add_flag("--json", common.as_json, "Machine-readable output");

  std::string fixtures_dir;
  auto* fixtures = app.add_subcommand("fixtures", "Write the built-in example algebras");
  fixtures->add_option("-o,--output", fixtures_dir, "Output directory")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(common, commutative, false, out);
    if (*report) return cmd_validate(common, commutative, true, out);
    if (*check_op) return cmd_check_operator(common, op, out);
    if (*twist) return cmd_twist(common, tw, out);
    if (*tensor) return cmd_tensor(left, common, tensor_out, out);
    if (*fixtures) return cmd_fixtures(fixtures_dir, out);
  } catch (const GateError& e) {
    report_gate(e, common.as_json, out, err);
    return kExitFailure;
  } catch (const DocumentError& e) {
    if (common.as_json) {
      emit(out, json{{"error", "parse"}, {"code", e.code()}, {"location", e.location()}, {"message", e.what()}});
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (common.as_json) emit(out, json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
    err << "error: " << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace algcheck
