// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "algcheck/grading.hpp"
#include "algcheck/linalg.hpp"
#include "algcheck/scalar.hpp"

namespace algcheck {

/// Basis e_1..e_n of a G-graded space with one homogeneous degree per vector.
class GradedBasis {
 public:
  GradedBasis(GroupSpec group, std::vector<GroupElement> degrees);

  std::size_t dim() const { return degrees_.size(); }
  const GroupSpec& group() const { return group_; }
  const std::vector<GroupElement>& degrees() const { return degrees_; }
  const GroupElement& degree(std::size_t i) const { return degrees_[i]; }
  /// Index of degree(i) in the group's element order.
  std::size_t degree_index(std::size_t i) const { return degree_index_[i]; }

  /// True when every nonzero coordinate of v sits on one degree. A zero
  /// vector counts as homogeneous of every degree.
  bool is_homogeneous(const Vector& v) const;
  /// Degree index of a nonzero homogeneous vector, nullopt otherwise.
  std::optional<std::size_t> degree_of(const Vector& v) const;

  friend bool operator==(const GradedBasis& a, const GradedBasis& b) {
    return a.group_ == b.group_ && a.degrees_ == b.degrees_;
  }

 private:
  GroupSpec group_;
  std::vector<GroupElement> degrees_;
  std::vector<std::size_t> degree_index_;
};

/// Linear map that preserves degrees: entry (i, j) != 0 only when
/// deg(e_i) == deg(e_j). Construction rejects anything else.
class EvenLinearMap {
 public:
  EvenLinearMap(const GradedBasis& basis, Matrix matrix);

  static EvenLinearMap identity(const GradedBasis& basis);
  static EvenLinearMap zero(const GradedBasis& basis);
  static EvenLinearMap scalar(const GradedBasis& basis, const Scalar& c);

  std::size_t dim() const { return matrix_.size(); }
  const Matrix& matrix() const { return matrix_; }
  Vector apply(const Vector& v) const { return matrix_.apply(v); }

  friend bool operator==(const EvenLinearMap&, const EvenLinearMap&) = default;

 private:
  Matrix matrix_;
};

struct ProductTerm {
  std::size_t k;
  Scalar c;
  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
};

struct StructureConstant {
  std::size_t i, j, k;
  Scalar c;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Bilinear map e_i * e_j = sum_k c_ij^k e_k stored sparsely: each cell
/// (i, j) keeps its nonzero terms sorted by k.
class BilinearProduct {
 public:
  BilinearProduct() = default;
  explicit BilinearProduct(std::size_t dim) : dim_(dim), cells_(dim * dim) {}
  BilinearProduct(std::size_t dim, std::span<const StructureConstant> constants);

  std::size_t dim() const { return dim_; }

  /// Overwrites c_ij^k (setting 0 removes the term).
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  std::span<const ProductTerm> terms(std::size_t i, std::size_t j) const { return cells_[i * dim_ + j]; }
  Scalar coefficient(std::size_t i, std::size_t j, std::size_t k) const;
  /// All nonzero constants, lexicographic in (i, j, k).
  std::vector<StructureConstant> constants() const;
  bool is_zero() const;

  /// Throws Error(evenness) if some c_ij^k != 0 with deg k != deg i + deg j.
  void require_even(const GradedBasis& basis) const;

  friend bool operator==(const BilinearProduct&, const BilinearProduct&) = default;

 private:
  void check_index(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_ = 0;
  std::vector<std::vector<ProductTerm>> cells_;
};

/// sum_ij x_i y_j c_ij^k e_k.
Vector apply_product(const BilinearProduct& p, const Vector& x, const Vector& y);

/// Basis, commutation factor, up to two products (mu, bracket) and the
/// twisting map alpha. Immutable; the with_* helpers return modified copies.
class GradedAlgebra {
 public:
  GradedAlgebra(GradedBasis basis, CommutationFactor epsilon, std::optional<BilinearProduct> mu,
                std::optional<BilinearProduct> bracket, EvenLinearMap alpha);

  const GradedBasis& basis() const { return basis_; }
  const GroupSpec& group() const { return basis_.group(); }
  std::size_t dim() const { return basis_.dim(); }
  const CommutationFactor& epsilon() const { return epsilon_; }
  /// eps(deg e_i, deg e_j).
  const Scalar& eps(std::size_t i, std::size_t j) const {
    return epsilon_.at(basis_.degree_index(i), basis_.degree_index(j));
  }

  bool has_mu() const { return mu_.has_value(); }
  bool has_bracket() const { return bracket_.has_value(); }
  /// Throw Error(missing_component) when absent.
  const BilinearProduct& mu() const;
  const BilinearProduct& bracket() const;
  const EvenLinearMap& alpha() const { return alpha_; }

  GradedAlgebra with_mu(std::optional<BilinearProduct> mu) const;
  GradedAlgebra with_bracket(std::optional<BilinearProduct> bracket) const;
  GradedAlgebra with_alpha(EvenLinearMap alpha) const;
  GradedAlgebra with_epsilon(CommutationFactor epsilon) const;

  /// Same group, degrees, factor representation, constants and alpha.
  friend bool operator==(const GradedAlgebra&, const GradedAlgebra&) = default;

 private:
  GradedBasis basis_;
  CommutationFactor epsilon_;
  std::optional<BilinearProduct> mu_;
  std::optional<BilinearProduct> bracket_;
  EvenLinearMap alpha_;
};

}  // namespace algcheck
