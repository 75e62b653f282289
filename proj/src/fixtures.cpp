// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/fixtures.hpp"

#include <functional>
#include <map>

#include "algcheck/axioms.hpp"
#include "algcheck/error.hpp"

namespace algcheck {

namespace {

using nlohmann::json;

Scalar q(const char* s) { return parse_scalar(s); }

GradedBasis basis(const GroupSpec& g, std::vector<std::vector<int>> degrees) {
  std::vector<GroupElement> out;
  for (auto& d : degrees) out.push_back(GroupElement{std::move(d)});
  return GradedBasis(g, std::move(out));
}

BilinearProduct product(std::size_t n, std::vector<StructureConstant> constants) {
  return BilinearProduct(n, constants);
}

Matrix diag(std::vector<Scalar> d) { return Matrix::diagonal(d); }

GradedAlgebra z2_algebra(std::vector<std::vector<int>> degrees, std::optional<BilinearProduct> mu,
                         std::optional<BilinearProduct> bracket, std::optional<Matrix> alpha = std::nullopt,
                         int epsilon_exponent = 1) {
  const GroupSpec g({2});
  GradedBasis b = basis(g, std::move(degrees));
  EvenLinearMap a = alpha ? EvenLinearMap(b, *alpha) : EvenLinearMap::identity(b);
  const SignBicharacter e(std::vector<std::vector<int>>{{epsilon_exponent}});
  return GradedAlgebra(b, CommutationFactor(g, e), std::move(mu), std::move(bracket), a);
}

// Yau twist: both products composed with alpha, which becomes the twisting map.
GradedAlgebra yau_twist(const GradedAlgebra& a, const Matrix& alpha) {
  const EvenLinearMap m(a.basis(), alpha);
  auto compose = [&](const BilinearProduct& p) {
    BilinearProduct out(a.dim());
    for (const auto& sc : p.constants()) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        if (alpha(k, sc.k) != 0) out.add(sc.i, sc.j, k, sc.c * alpha(k, sc.k));
      }
    }
    return out;
  };
  std::optional<BilinearProduct> mu, bracket;
  if (a.has_mu()) mu = compose(a.mu());
  if (a.has_bracket()) bracket = compose(a.bracket());
  return GradedAlgebra(a.basis(), a.epsilon(), std::move(mu), std::move(bracket), m);
}

AlgebraDocument rb2() {
  GradedAlgebra a = z2_algebra({{0}, {1}},
                               product(2, {{0, 0, 0, -1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}),
                               std::nullopt, diag({1, -1}));
  return {"rb2",
          a,
          {{"R", Matrix::scalar(2, q("-1/2"))},
           {"Id", Matrix::identity(2)},
           {"Zero", Matrix(2)},
           {"Ndiag10", diag({1, 0})}},
          {},
          json{{"description", "two-dimensional Hom-associative color algebra; R is Rota-Baxter of weight lambda"},
               {"lambda", "1/2"}}};
}

AlgebraDocument rb2_polarized() {
  AlgebraDocument d = rb2();
  d.name = "rb2_polarized";
  d.algebra = commutator_bracket(d.algebra);
  d.operators = {{"R", Matrix::scalar(2, -1)}, {"Id", Matrix::identity(2)}, {"Zero", Matrix(2)}};
  d.metadata = json{{"description", "rb2 with its commutator bracket; R is Rota-Baxter of weight lambda"},
                    {"lambda", "1"}};
  return d;
}

std::vector<StructureConstant> example3_mu(const Scalar& a) {
  return {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, a}, {1, 0, 1, 1}, {1, 1, 1, 1 / a}, {1, 2, 2, 1}, {2, 0, 2, a}};
}

AlgebraDocument example3() {
  const Scalar a = 2;
  Matrix swap(3, {0, 1, 0, 1, 0, 0, 0, 0, 1});
  return {"example3",
          example3_algebra(a),
          {{"R", Matrix::scalar(3, -1)},
           {"R_half", Matrix::scalar(3, q("-1/2"))},
           {"Id", Matrix::identity(3)},
           {"C2", Matrix::scalar(3, 2)},
           {"Cthird", Matrix::scalar(3, q("-1/3"))},
           {"Swap12", swap}},
          {},
          json{{"description", "three-dimensional Hom-Poisson color algebra with parameter a (e2 * e2 = e2 / a)"},
               {"a", "2"}}};
}

AlgebraDocument example3_as_printed() {
  AlgebraDocument d = example3();
  d.name = "example3_as_printed";
  d.algebra = example3_algebra(2, 1, false);
  d.operators = {{"Id", Matrix::identity(3)}};
  d.metadata = json{{"description", "example3 without the e2 * e2 term; fails Hom-Leibniz"}, {"a", "2"}};
  return d;
}

AlgebraDocument z2sq() {
  const GroupSpec g({2, 2});
  std::vector<std::vector<int>> degrees;
  for (const auto& e : g.elements()) degrees.push_back(e.coords);
  const GradedBasis b = basis(g, degrees);
  BilinearProduct mu(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mu.set(i, j, g.add_indices(i, j), 1);
  }
  Vector chi;
  for (const auto& e : g.elements()) chi.push_back(e.coords[0] ? -1 : 1);
  const GradedAlgebra plain(b, CommutationFactor(g, SignBicharacter::identity(2)), mu, std::nullopt,
                            EvenLinearMap::identity(b));
  const GradedAlgebra twisted = commutator_bracket(yau_twist(plain, diag(chi)));
  return {"z2sq",
          twisted,
          {{"Alpha", twisted.alpha().matrix()}, {"Id", Matrix::identity(4)}},
          {{"sigma_asym", PairTable::tabulate(g, [](const GroupElement& x, const GroupElement& y) {
              return Scalar(x.coords[0] * y.coords[1] % 2 ? -1 : 1);
            })},
           {"sigma_sym", PairTable::tabulate(g, [](const GroupElement& x, const GroupElement& y) {
              return Scalar(x.coords[0] * y.coords[0] % 2 ? -1 : 1);
            })},
           {"sigma_const", PairTable::constant(g, 3)}},
          json{{"description", "group algebra of Z2 x Z2, Yau-twisted by a character, with commutator bracket"}}};
}

AlgebraDocument heis3() {
  GradedAlgebra a = z2_algebra({{1}, {1}, {0}}, product(3, {{0, 1, 2, 1}, {1, 0, 2, 1}}),
                               product(3, {{0, 1, 2, 2}, {1, 0, 2, 2}}), diag({2, 3, 1}));
  return {"heis3",
          a,
          {{"Alpha", a.alpha().matrix()}},
          {},
          json{{"description", "three-dimensional algebra with all triple products zero; alpha fixes products"}}};
}

AlgebraDocument ext3() {
  const GroupSpec g;
  const GradedBasis b = basis(g, {{}, {}, {}});
  Matrix d(3);
  d(1, 0) = 1;
  GradedAlgebra a(b, CommutationFactor(g, SignBicharacter::trivial(0)), product(3, {{0, 1, 2, 1}, {1, 0, 2, -1}}),
                  std::nullopt, EvenLinearMap(b, diag({2, 2, 1})));
  return {"ext3", a, {{"D", d}}, {}, json{{"description", "exterior-type algebra; D (e1 -> e2) squares to zero"}}};
}

AlgebraDocument zz_parity() {
  // (-1)^((i1 + i2)(j1 + j2)) on Z x Z depends only on parities.
  const GroupSpec g({2, 2});
  std::vector<std::vector<int>> degrees;
  for (const auto& e : g.elements()) degrees.push_back(e.coords);
  const GradedBasis b = basis(g, degrees);
  BilinearProduct mu(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) mu.set(i, j, g.add_indices(i, j), 1);
  }
  const GradedAlgebra a(b, CommutationFactor(g, SignBicharacter(std::vector<std::vector<int>>{{1, 1}, {1, 1}})), mu,
                        std::nullopt, EvenLinearMap::identity(b));
  return {"zz_parity",
          commutator_bracket(a),
          {{"Id", Matrix::identity(4)}},
          {},
          json{{"description", "polarized group algebra of the parity quotient Z2 x Z2 of Z x Z"}}};
}

GradedAlgebra pair4_algebra() {
  // Two copies of K[Z2] (basis 1, g with g of odd degree) and their commutator brackets.
  BilinearProduct mu = product(4, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1},
                                   {2, 2, 2, 1}, {2, 3, 3, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}});
  return commutator_bracket(z2_algebra({{0}, {1}, {0}, {1}}, mu, std::nullopt));
}

AlgebraDocument pair4() {
  return {"pair4",
          pair4_algebra(),
          {{"Proj1", diag({1, 1, 0, 0})},
           {"Nij", diag({2, 2, 3, 3})},
           {"RB", diag({-1, -1, 0, 0})},
           {"Id", Matrix::identity(4)}},
          {},
          json{{"description", "product of two copies of the polarized group algebra of Z2"}, {"lambda", "1"}}};
}

AlgebraDocument yau4() {
  // alpha(x, y) = (x, x).
  Matrix alpha(4, {1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0});
  GradedAlgebra a = yau_twist(pair4_algebra(), alpha);
  return {"yau4",
          a,
          {{"Alpha", alpha}},
          {},
          json{{"description", "pair4 Yau-twisted by the idempotent morphism (x, y) -> (x, x)"}}};
}

AlgebraDocument group_algebra_z2() {
  const GroupSpec g({2});
  const GradedBasis b = basis(g, {{0}, {0}});
  GradedAlgebra a(b, CommutationFactor(g, SignBicharacter(std::vector<std::vector<int>>{{0}})),
                  product(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}}), BilinearProduct(2),
                  EvenLinearMap::identity(b));
  const Scalar h = q("1/2");
  return {"group_algebra_z2",
          a,
          {{"E", Matrix(2, {h, h, h, h})}, {"Id", Matrix::identity(2)}},
          {},
          json{{"description", "group algebra of Z2, trivially graded; E is multiplication by (1 + g) / 2"}}};
}

AlgebraDocument unit1() {
  return {"unit1", z2_algebra({{0}}, product(1, {{0, 0, 0, 1}}), std::nullopt), {}, {},
          json{{"description", "the ground field"}}};
}

AlgebraDocument dual2() {
  return {"dual2", z2_algebra({{0}, {0}}, product(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}}), std::nullopt),
          {}, {}, json{{"description", "dual numbers K[v] / (v^2)"}}};
}

AlgebraDocument sqrt2() {
  return {"sqrt2",
          z2_algebra({{0}, {0}}, product(2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 2}}), std::nullopt),
          {}, {}, json{{"description", "K[t] / (t^2 - 2)"}}};
}

const std::map<std::string, std::function<AlgebraDocument()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<AlgebraDocument()>, std::less<>> r{
      {"dual2", dual2},
      {"example3", example3},
      {"example3_as_printed", example3_as_printed},
      {"ext3", ext3},
      {"group_algebra_z2", group_algebra_z2},
      {"heis3", heis3},
      {"pair4", pair4},
      {"rb2", rb2},
      {"rb2_polarized", rb2_polarized},
      {"sqrt2", sqrt2},
      {"unit1", unit1},
      {"yau4", yau4},
      {"z2sq", z2sq},
      {"zz_parity", zz_parity},
  };
  return r;
}

}  // namespace

GradedAlgebra example3_algebra(const Scalar& a, int epsilon_exponent, bool corrected) {
  if (a == 0) throw Error(ErrorKind::shape, "the parameter a must be nonzero");
  auto mu = example3_mu(a);
  if (!corrected) std::erase_if(mu, [](const StructureConstant& sc) { return sc.i == 1 && sc.j == 1; });
  return z2_algebra({{0}, {0}, {1}}, product(3, std::move(mu)), product(3, {{1, 2, 2, 1}, {2, 1, 2, -1}}),
                    diag({1, 1, a}), epsilon_exponent);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

AlgebraDocument fixture(std::string_view name) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::shape, "unknown fixture '" + std::string(name) + "'");
  return it->second();
}

}  // namespace algcheck
