// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace algcheck {

using nlohmann::json;

namespace {

std::string join(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string join(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

[[noreturn]] void fail(std::string code, std::string location, const std::string& message) {
  throw DocumentError(std::move(code), std::move(location), message);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& require(const json& obj, std::string_view key, const std::string& path) {
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail("E-SCHEMA", join(path, key), "missing required field");
  return *it;
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail("E-SCHEMA", path, "expected an array");
  return v;
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) fail("E-SCHEMA", path, "expected an object");
  return v;
}

long long integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) fail("E-SCHEMA", path, "expected an integer");
  return v.get<long long>();
}

std::size_t index(const json& v, std::size_t bound, const std::string& path) {
  const long long i = integer(v, path);
  if (i < 0 || static_cast<std::size_t>(i) >= bound) {
    fail("E-SHAPE", path, "index " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
  }
  return static_cast<std::size_t>(i);
}

Scalar rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(mpz_class(std::to_string(v.get<long long>())));
  if (!v.is_string()) fail("E-RATIONAL", path, "rationals are written as strings \"p/q\"");
  const auto& s = v.get_ref<const std::string&>();
  try {
    return parse_scalar(s);
  } catch (const Error& e) {
    if (std::string_view(e.what()).find("zero denominator") != std::string_view::npos) {
      fail("E-ZERO-DENOMINATOR", path, e.what());
    }
    fail("E-RATIONAL", path, e.what());
  }
}

Matrix matrix(const json& v, std::size_t n, const std::string& path) {
  require_array(v, path);
  if (v.size() != n) fail("E-SHAPE", path, "expected " + std::to_string(n) + " rows, got " + std::to_string(v.size()));
  std::vector<Scalar> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row_path = join(path, i);
    const auto& row = require_array(v[i], row_path);
    if (row.size() != n) {
      fail("E-SHAPE", row_path, "expected " + std::to_string(n) + " columns, got " + std::to_string(row.size()));
    }
    for (std::size_t j = 0; j < n; ++j) entries.push_back(rational(row[j], join(row_path, j)));
  }
  return Matrix(n, std::move(entries));
}

PairTable pair_table(const json& v, const GroupSpec& g, const std::string& path) {
  const std::size_t n = g.order();
  require_array(v, path);
  if (v.size() != n) fail("E-SHAPE", path, "expected " + std::to_string(n) + " rows (one per group element)");
  std::vector<Scalar> values;
  values.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto row_path = join(path, a);
    const auto& row = require_array(v[a], row_path);
    if (row.size() != n) fail("E-SHAPE", row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t b = 0; b < n; ++b) {
      Scalar s = rational(row[b], join(row_path, b));
      if (s == 0) fail("E-MULTIPLIER", join(row_path, b), "table entries must be nonzero");
      values.push_back(std::move(s));
    }
  }
  return PairTable(g, std::move(values));
}

GroupSpec parse_group(const json& root) {
  const std::string path = "/group";
  const auto& group = require_object(require(root, "group", ""), path);
  const auto& moduli_json = require_array(require(group, "moduli", path), join(path, "moduli"));
  std::vector<int> moduli;
  for (std::size_t i = 0; i < moduli_json.size(); ++i) {
    const long long m = integer(moduli_json[i], join(join(path, "moduli"), i));
    if (m < 1) fail("E-GROUP", join(join(path, "moduli"), i), "moduli must be >= 1");
    if (m > 1'000'000) fail("E-GROUP", join(join(path, "moduli"), i), "modulus too large");
    moduli.push_back(static_cast<int>(m));
  }
  try {
    return GroupSpec(std::move(moduli));
  } catch (const Error& e) {
    fail("E-GROUP", path, e.what());
  }
}

CommutationFactor parse_epsilon(const json& root, const GroupSpec& g) {
  const std::string path = "/epsilon";
  const auto& eps = require_object(require(root, "epsilon", ""), path);
  if (eps.contains("matrix") == eps.contains("table")) {
    fail("E-SCHEMA", path, "give exactly one of \"matrix\" or \"table\"");
  }
  if (eps.contains("table")) return CommutationFactor(pair_table(eps["table"], g, join(path, "table")));

  const std::string mpath = join(path, "matrix");
  const auto& m = require_array(eps["matrix"], mpath);
  if (m.size() != g.rank()) fail("E-SHAPE", mpath, "exponent matrix must be rank x rank");
  std::vector<std::vector<int>> exps(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto& row = require_array(m[i], join(mpath, i));
    if (row.size() != g.rank()) fail("E-SHAPE", join(mpath, i), "exponent matrix must be rank x rank");
    for (std::size_t j = 0; j < g.rank(); ++j) exps[i].push_back(static_cast<int>(integer(row[j], join(join(mpath, i), j))));
  }
  try {
    return CommutationFactor(g, SignBicharacter(std::move(exps)));
  } catch (const Error& e) {
    fail("E-BICHARACTER", mpath, e.what());
  }
}

GradedBasis parse_basis(const json& root, const GroupSpec& g) {
  const std::string path = "/degrees";
  const auto& degrees_json = require_array(require(root, "degrees", ""), path);
  if (degrees_json.empty()) fail("E-SHAPE", path, "basis must not be empty");
  std::vector<GroupElement> degrees;
  for (std::size_t i = 0; i < degrees_json.size(); ++i) {
    const auto dpath = join(path, i);
    const auto& d = require_array(degrees_json[i], dpath);
    if (d.size() != g.rank()) {
      fail("E-SHAPE", dpath, "degree needs " + std::to_string(g.rank()) + " coordinates");
    }
    GroupElement e;
    for (std::size_t c = 0; c < d.size(); ++c) {
      const long long v = integer(d[c], join(dpath, c));
      if (v < 0 || v >= g.moduli()[c]) {
        fail("E-DEGREE", join(dpath, c), "coordinate " + std::to_string(v) + " out of range [0, " +
                                             std::to_string(g.moduli()[c]) + ")");
      }
      e.coords.push_back(static_cast<int>(v));
    }
    degrees.push_back(std::move(e));
  }
  return GradedBasis(g, std::move(degrees));
}

BilinearProduct parse_product(const json& v, const GradedBasis& basis, const std::string& path) {
  const std::size_t n = basis.dim();
  require_array(v, path);
  BilinearProduct p(n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t t = 0; t < v.size(); ++t) {
    const auto tpath = join(path, t);
    const auto& triple = require_array(v[t], tpath);
    if (triple.size() != 4) fail("E-SCHEMA", tpath, "structure constants are [i, j, k, \"c\"]");
    const std::size_t i = index(triple[0], n, join(tpath, 0));
    const std::size_t j = index(triple[1], n, join(tpath, 1));
    const std::size_t k = index(triple[2], n, join(tpath, 2));
    if (!seen.emplace(i, j, k).second) fail("E-SCHEMA", tpath, "duplicate structure constant");
    const Scalar c = rational(triple[3], join(tpath, 3));
    if (c != 0 && basis.degree_index(k) != basis.group().add_indices(basis.degree_index(i), basis.degree_index(j))) {
      fail("E-EVENNESS", tpath, "e_" + std::to_string(i) + " * e_" + std::to_string(j) +
                                    " may only involve basis vectors of degree deg(i) + deg(j)");
    }
    p.set(i, j, k, c);
  }
  return p;
}

EvenLinearMap parse_alpha(const json& root, const GradedBasis& basis) {
  const std::string path = "/alpha";
  if (!root.contains("alpha")) return EvenLinearMap::identity(basis);
  const Matrix m = matrix(root["alpha"], basis.dim(), path);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m(i, j) != 0 && basis.degree_index(i) != basis.degree_index(j)) {
        fail("E-EVENNESS", join(join(path, i), j), "alpha links basis vectors of different degree");
      }
    }
  }
  return EvenLinearMap(basis, m);
}

json rational_json(const Scalar& s) { return to_string(s); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(rational_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json table_json(const PairTable& t) {
  const std::size_t n = t.group().order();
  json rows = json::array();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(rational_json(t.at(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json product_json(const BilinearProduct& p) {
  json triples = json::array();
  for (const auto& sc : p.constants()) triples.push_back(json::array({sc.i, sc.j, sc.k, rational_json(sc.c)}));
  return triples;
}

}  // namespace

AlgebraDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail("E-JSON", line_column(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
  }
  require_object(root, "");

  std::string name;
  if (root.contains("name")) {
    if (!root["name"].is_string()) fail("E-SCHEMA", "/name", "expected a string");
    name = root["name"].get<std::string>();
  }

  const GroupSpec g = parse_group(root);
  CommutationFactor eps = parse_epsilon(root, g);
  GradedBasis basis = parse_basis(root, g);

  std::optional<BilinearProduct> mu, bracket;
  const auto& products = require_object(require(root, "products", ""), "/products");
  for (const auto& [key, value] : products.items()) {
    if (key == "mu") {
      mu = parse_product(value, basis, "/products/mu");
    } else if (key == "bracket") {
      bracket = parse_product(value, basis, "/products/bracket");
    } else {
      fail("E-SCHEMA", "/products/" + key, "unknown product (expected \"mu\" or \"bracket\")");
    }
  }
  if (!mu && !bracket) fail("E-SHAPE", "/products", "at least one of \"mu\" / \"bracket\" is required");
  EvenLinearMap alpha = parse_alpha(root, basis);

  AlgebraDocument doc{name, GradedAlgebra(basis, std::move(eps), std::move(mu), std::move(bracket), std::move(alpha)),
                      {}, {}, json::object()};

  if (root.contains("operators")) {
    const auto& ops = require_object(root["operators"], "/operators");
    for (const auto& [key, value] : ops.items()) {
      doc.operators.emplace(key, matrix(value, basis.dim(), "/operators/" + key));
    }
  }
  if (root.contains("multipliers")) {
    const auto& ms = require_object(root["multipliers"], "/multipliers");
    for (const auto& [key, value] : ms.items()) doc.multipliers.emplace(key, pair_table(value, g, "/multipliers/" + key));
  }
  if (root.contains("metadata")) doc.metadata = require_object(root["metadata"], "/metadata");

  static const std::set<std::string> known{"name", "group", "epsilon", "degrees", "products",
                                           "alpha", "operators", "multipliers", "metadata"};
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) fail("E-SCHEMA", "/" + key, "unknown top-level field");
  }
  return doc;
}

std::string serialize_document(const AlgebraDocument& doc) {
  const GradedAlgebra& a = doc.algebra;
  json root = json::object();
  root["name"] = doc.name;
  root["group"] = {{"moduli", a.group().moduli()}};
  if (const auto* sign = a.epsilon().sign_form()) {
    root["epsilon"] = {{"matrix", sign->exponents()}};
  } else {
    root["epsilon"] = {{"table", table_json(a.epsilon().table())}};
  }
  json degrees = json::array();
  for (const auto& d : a.basis().degrees()) degrees.push_back(d.coords);
  root["degrees"] = std::move(degrees);
  json products = json::object();
  if (a.has_mu()) products["mu"] = product_json(a.mu());
  if (a.has_bracket()) products["bracket"] = product_json(a.bracket());
  root["products"] = std::move(products);
  root["alpha"] = matrix_json(a.alpha().matrix());
  if (!doc.operators.empty()) {
    json ops = json::object();
    for (const auto& [key, m] : doc.operators) ops[key] = matrix_json(m);
    root["operators"] = std::move(ops);
  }
  if (!doc.multipliers.empty()) {
    json ms = json::object();
    for (const auto& [key, t] : doc.multipliers) ms[key] = table_json(t);
    root["multipliers"] = std::move(ms);
  }
  root["metadata"] = doc.metadata.is_null() ? json::object() : doc.metadata;
  return root.dump(2) + "\n";
}

AlgebraDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("E-IO", path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const std::filesystem::path& path, const AlgebraDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse, "cannot write " + path.string());
  out << serialize_document(doc);
}

json to_json(const Report& report) {
  json axioms = json::array();
  for (const auto& a : report.axioms()) {
    json violations = json::array();
    for (const auto& v : a.violations) {
      json lhs = json::array(), rhs = json::array();
      for (const auto& s : v.lhs) lhs.push_back(to_string(s));
      for (const auto& s : v.rhs) rhs.push_back(to_string(s));
      violations.push_back({{"indices", v.indices}, {"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}});
    }
    axioms.push_back({{"axiom", a.axiom},
                      {"arity", a.arity},
                      {"checked", a.checked},
                      {"holds", a.holds()},
                      {"violations", std::move(violations)}});
  }
  return json{{"ok", report.ok()}, {"axioms", std::move(axioms)}};
}

}  // namespace algcheck
