// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algcheck/algebra.hpp"
#include "algcheck/grading.hpp"
#include "algcheck/report.hpp"

namespace algcheck {

/// Output of a construction. Every construction runs its hypothesis gates
/// first (throwing GateError on failure, so a returned result always has a
/// passing `gate`) and sweeps the axioms of the output afterwards.
struct ConstructionResult {
  GradedAlgebra algebra;
  Report gate;
  Report certification;
  /// Morphism clause(s) attached to the construction, if any.
  Report morphism;
  /// False when the morphism verdict is informational only (centroid twist).
  bool morphism_binding = false;

  bool certified() const { return certification.ok() && (!morphism_binding || morphism.ok()); }
};

using NamedMap = std::pair<std::string, EvenLinearMap>;

/// mu_xi(x, y) = (x xi) y. Needs mu associative and Hom-associative and xi
/// homogeneous of degree 0. The output carries mu_xi only (no bracket) and
/// is certified for Hom-associativity.
ConstructionResult xi_twist(const GradedAlgebra& a, const Vector& xi);

/// Both products rescaled by sigma(|x|, |y|); sigma must be a symmetric
/// multiplier with the cyclic property.
ConstructionResult multiplier_twist_symmetric(const GradedAlgebra& p, const MultiplierTable& sigma);

/// Both products rescaled by sigma; the commutation factor becomes the table
/// eps * delta. Each supplied map that is an endomorphism of P (alpha is
/// always tried) is re-checked as an endomorphism of the output.
ConstructionResult multiplier_twist_delta(const GradedAlgebra& p, const MultiplierTable& sigma,
                                          std::span<const NamedMap> endomorphisms = {});

/// Pulls P' back along an even bijection f: x.y = f^-1(f x .' f y), same for
/// the bracket, alpha = f^-1 alpha' f. f is then a morphism output -> P'.
ConstructionResult transport_along_bijection(const GradedAlgebra& target, const EvenLinearMap& f);

/// mu unchanged, {x, y} = [beta(x), y] for an alpha^0-centroid element.
/// The "beta is a morphism" verdict is recorded but not binding.
ConstructionResult centroid_twist(const GradedAlgebra& p, const EvenLinearMap& beta);

/// x * y = beta(x) beta(y), {x, y} = [beta(x), beta(y)] for an
/// alpha^0-averaging operator.
ConstructionResult averaging_twist_pairwise(const GradedAlgebra& p, const EvenLinearMap& beta);

/// Starting from alpha = id: x * y = beta(x) y, {x, y} = [beta(x), y], and
/// beta becomes the twisting map.
ConstructionResult averaging_twist_untwisted(const GradedAlgebra& p, const EvenLinearMap& beta);

/// x * y = beta(x) alpha^k(y), {x, y} = [beta(x), alpha^k(y)] for a bijective
/// alpha^k-averaging operator; beta is a morphism output -> P.
ConstructionResult averaging_twist_power(const GradedAlgebra& p, const EvenLinearMap& beta, unsigned power);

/// Deformed products x ._N y = N(x) y + x N(y) - N(x y) (same for the
/// bracket); N is a morphism output -> P.
ConstructionResult nijenhuis_twist(const GradedAlgebra& p, const EvenLinearMap& n);

/// x * y = R(x) y + x R(y) + lambda x y (same for the bracket); R is a
/// morphism output -> P.
ConstructionResult rota_baxter_twist(const GradedAlgebra& p, const EvenLinearMap& r, const Scalar& weight);

/// A (x) P for a commutative Hom-associative A over the same group and
/// commutation factor. Basis e_(i,p) has index i * dim(P) + p.
ConstructionResult tensor_with_commutative(const GradedAlgebra& a, const GradedAlgebra& p);

}  // namespace algcheck
