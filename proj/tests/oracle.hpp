// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

// Reference evaluation of every identity the checkers sweep, written
// independently of the library's structure-constant composition: products
// go through the dense apply_product, maps through Matrix::apply, and
// arbitrary arguments are split into homogeneous components so the colour
// signs are taken from actual degrees.

#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algcheck/algebra.hpp"
#include "algcheck/linalg.hpp"

namespace algcheck::oracle {

struct Context {
  const GradedAlgebra* algebra = nullptr;
  Matrix op;       // operator under test, if any
  Matrix alpha_k;  // alpha^k for centroid / averaging
  Scalar weight = 0;
};

inline Context context(const GradedAlgebra& a) { return Context{&a, Matrix(a.dim()), Matrix::identity(a.dim()), 0}; }

inline Vector add(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vector sub(Vector a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vector scale(const Scalar& c, Vector a) {
  for (auto& x : a) x *= c;
  return a;
}

/// Homogeneous components of v keyed by degree index.
inline std::map<std::size_t, Vector> components(const GradedAlgebra& a, const Vector& v) {
  std::map<std::size_t, Vector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto [it, _] = out.try_emplace(a.basis().degree_index(i), Vector(v.size(), Scalar(0)));
    it->second[i] = v[i];
  }
  return out;
}

using Sides = std::pair<Vector, Vector>;

/// Both sides of `axiom` on homogeneous arguments of the given degree indices.
inline Sides homogeneous_sides(const std::string& axiom, const Context& c, const std::vector<Vector>& v,
                               const std::vector<std::size_t>& d) {
  const GradedAlgebra& a = *c.algebra;
  const std::size_t n = a.dim();
  auto e = [&](std::size_t p, std::size_t q) { return a.epsilon().at(d[p], d[q]); };
  auto al = [&](const Vector& x) { return a.alpha().matrix().apply(x); };
  auto ak = [&](const Vector& x) { return c.alpha_k.apply(x); };
  auto op = [&](const Vector& x) { return c.op.apply(x); };
  const Vector zero(n, Scalar(0));

  if (axiom == "associativity") {
    auto m = [&](const Vector& x, const Vector& y) { return apply_product(a.mu(), x, y); };
    return {m(m(v[0], v[1]), v[2]), m(v[0], m(v[1], v[2]))};
  }
  if (axiom == "hom_associativity") {
    auto m = [&](const Vector& x, const Vector& y) { return apply_product(a.mu(), x, y); };
    return {m(al(v[0]), m(v[1], v[2])), m(m(v[0], v[1]), al(v[2]))};
  }
  if (axiom == "epsilon_commutativity") {
    auto m = [&](const Vector& x, const Vector& y) { return apply_product(a.mu(), x, y); };
    return {m(v[0], v[1]), scale(e(0, 1), m(v[1], v[0]))};
  }
  if (axiom == "skew_symmetry") {
    auto b = [&](const Vector& x, const Vector& y) { return apply_product(a.bracket(), x, y); };
    return {b(v[0], v[1]), scale(-e(0, 1), b(v[1], v[0]))};
  }
  if (axiom == "hom_jacobi") {
    auto b = [&](const Vector& x, const Vector& y) { return apply_product(a.bracket(), x, y); };
    Vector s = scale(e(2, 0), b(al(v[0]), b(v[1], v[2])));
    s = add(s, scale(e(0, 1), b(al(v[1]), b(v[2], v[0]))));
    s = add(s, scale(e(1, 2), b(al(v[2]), b(v[0], v[1]))));
    return {s, zero};
  }
  if (axiom == "hom_leibniz") {
    auto m = [&](const Vector& x, const Vector& y) { return apply_product(a.mu(), x, y); };
    auto b = [&](const Vector& x, const Vector& y) { return apply_product(a.bracket(), x, y); };
    return {b(al(v[0]), m(v[1], v[2])), add(m(b(v[0], v[1]), al(v[2])), scale(e(0, 1), m(al(v[1]), b(v[0], v[2]))))};
  }

  // Operator identities: "<kind>.alpha_commutation" or "<kind>.<product>[.left|.right]".
  const auto dot = axiom.find('.');
  const std::string kind = axiom.substr(0, dot);
  const std::string rest = axiom.substr(dot + 1);
  if (rest == "alpha_commutation") return {op(al(v[0])), al(op(v[0]))};
  const bool on_bracket = rest.starts_with("bracket");
  const BilinearProduct& prod = on_bracket ? a.bracket() : a.mu();
  auto p = [&](const Vector& x, const Vector& y) { return apply_product(prod, x, y); };
  const std::string side = rest.find('.') == std::string::npos ? "" : rest.substr(rest.find('.') + 1);
  const Vector& x = v[0];
  const Vector& y = v[1];
  if (kind == "centroid") {
    if (side == "right") return {op(p(x, y)), p(ak(x), op(y))};
    if (side == "mirror") return {op(p(x, y)), p(ak(x), op(y))};
    return {op(p(x, y)), p(op(x), ak(y))};
  }
  if (kind == "averaging") {
    if (side == "right") return {p(op(x), op(y)), op(p(ak(x), op(y)))};
    return {op(p(op(x), ak(y))), p(op(x), op(y))};
  }
  if (kind == "rota_baxter") {
    return {p(op(x), op(y)), op(add(add(p(op(x), y), p(x, op(y))), scale(c.weight, p(x, y))))};
  }
  if (kind == "nijenhuis") return {p(op(x), op(y)), op(sub(add(p(op(x), y), p(x, op(y))), op(p(x, y))))};
  throw std::invalid_argument("oracle has no rule for " + axiom);
}

/// Multilinear extension of `axiom` to arbitrary arguments: the identity is
/// evaluated on every combination of homogeneous components and summed.
inline Sides sides(const std::string& axiom, const Context& c, const std::vector<Vector>& args) {
  const std::size_t n = c.algebra->dim();
  std::vector<std::vector<std::pair<std::size_t, Vector>>> parts;
  for (const auto& v : args) {
    const auto comps = components(*c.algebra, v);
    parts.emplace_back(comps.begin(), comps.end());
  }
  Sides total{Vector(n, Scalar(0)), Vector(n, Scalar(0))};
  std::vector<Vector> vs(args.size());
  std::vector<std::size_t> ds(args.size());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == args.size()) {
      const Sides s = homogeneous_sides(axiom, c, vs, ds);
      total.first = add(total.first, s.first);
      total.second = add(total.second, s.second);
      return;
    }
    for (const auto& [d, v] : parts[pos]) {
      ds[pos] = d;
      vs[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return total;
}

}  // namespace algcheck::oracle
