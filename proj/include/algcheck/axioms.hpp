// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algcheck/algebra.hpp"
#include "algcheck/report.hpp"

namespace algcheck {

/// Both sides of a multilinear identity evaluated on every tuple of basis
/// vectors (lexicographic order, first index most significant). Because the
/// sides are multilinear, the identity holds on the whole algebra iff the
/// two tables agree entrywise.
struct IdentityTable {
  std::string axiom;
  std::size_t arity = 0;
  std::size_t dim = 0;
  std::vector<Vector> lhs;
  std::vector<Vector> rhs;

  std::size_t tuple_count() const { return lhs.size(); }
  std::vector<std::size_t> tuple(std::size_t offset) const;

  AxiomReport report() const;

  /// Multilinear extension of one side to arbitrary arguments:
  /// sum over tuples of args[0][i0] * ... * side(i0, ...).
  Vector contract_lhs(std::span<const Vector> args) const;
  Vector contract_rhs(std::span<const Vector> args) const;
};

using TupleSides = std::pair<Vector, Vector>;

/// Sweeps f over all dim^arity basis tuples.
IdentityTable tabulate_identity(std::string axiom, std::size_t arity, std::size_t dim,
                                const std::function<TupleSides(std::span<const std::size_t>)>& f);

// Identity tables. Each throws Error(missing_component) when the algebra
// lacks a product the identity needs.
IdentityTable associativity_table(const GradedAlgebra& a);          // (xy)z = x(yz)
IdentityTable hom_associativity_table(const GradedAlgebra& a);      // a(x)(yz) = (xy)a(z)
IdentityTable epsilon_commutativity_table(const GradedAlgebra& a);  // xy = eps(x,y) yx
IdentityTable skew_symmetry_table(const GradedAlgebra& a);          // [x,y] = -eps(x,y)[y,x]
IdentityTable hom_jacobi_table(const GradedAlgebra& a);             // eps-cyclic sum = 0
IdentityTable hom_leibniz_table(const GradedAlgebra& a);

Report check_associative(const GradedAlgebra& a);
Report check_hom_associative(const GradedAlgebra& a);
Report check_epsilon_commutative(const GradedAlgebra& a);
Report check_hom_lie(const GradedAlgebra& a);
Report check_hom_leibniz(const GradedAlgebra& a);
/// Hom-associativity, Hom-Lie (skew + Jacobi), Hom-Leibniz; with
/// `commutative`, also eps-commutativity of mu.
Report check_hom_poisson(const GradedAlgebra& a, bool commutative = false);

/// Every axiom table that check_hom_poisson sweeps (used by the oracle
/// equivalence tests).
std::vector<IdentityTable> hom_poisson_tables(const GradedAlgebra& a, bool commutative = false);

/// Adds the bracket [x, y] = mu(x, y) - eps(x, y) mu(y, x), replacing any
/// existing bracket. Throws GateError unless mu is Hom-associative.
GradedAlgebra commutator_bracket(const GradedAlgebra& a);

/// f o alpha_src = alpha_dst o f, f(mu_src(x,y)) = mu_dst(f x, f y) and the
/// same for the bracket, for every product present in src.
Report check_morphism(const EvenLinearMap& f, const GradedAlgebra& src, const GradedAlgebra& dst);

}  // namespace algcheck
