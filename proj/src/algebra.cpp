// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/algebra.hpp"

#include <algorithm>
#include <string>

#include "algcheck/error.hpp"

namespace algcheck {

GradedBasis::GradedBasis(GroupSpec group, std::vector<GroupElement> degrees)
    : group_(std::move(group)), degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw Error(ErrorKind::shape, "graded basis must have dimension >= 1");
  degree_index_.reserve(degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (!group_.is_canonical(degrees_[i])) {
      throw Error(ErrorKind::shape, "degree of basis vector " + std::to_string(i) + " is not a canonical group element");
    }
    degree_index_.push_back(group_.index_of(degrees_[i]));
  }
}

std::optional<std::size_t> GradedBasis::degree_of(const Vector& v) const {
  std::optional<std::size_t> deg;
  for (std::size_t i = 0; i < v.size() && i < dim(); ++i) {
    if (v[i] == 0) continue;
    if (deg && *deg != degree_index_[i]) return std::nullopt;
    deg = degree_index_[i];
  }
  return deg;
}

bool GradedBasis::is_homogeneous(const Vector& v) const { return is_zero(v) || degree_of(v).has_value(); }

// ---------------------------------------------------------------------------

EvenLinearMap::EvenLinearMap(const GradedBasis& basis, Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.size() != basis.dim()) {
    throw Error(ErrorKind::shape, "linear map is " + std::to_string(matrix_.size()) + "x" +
                                      std::to_string(matrix_.size()) + " but the basis has dimension " +
                                      std::to_string(basis.dim()));
  }
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      if (matrix_(i, j) != 0 && basis.degree_index(i) != basis.degree_index(j)) {
        throw Error(ErrorKind::evenness, "linear map entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                             ") links basis vectors of different degree");
      }
    }
  }
}

EvenLinearMap EvenLinearMap::identity(const GradedBasis& basis) {
  return EvenLinearMap(basis, Matrix::identity(basis.dim()));
}

EvenLinearMap EvenLinearMap::zero(const GradedBasis& basis) { return EvenLinearMap(basis, Matrix(basis.dim())); }

EvenLinearMap EvenLinearMap::scalar(const GradedBasis& basis, const Scalar& c) {
  return EvenLinearMap(basis, Matrix::scalar(basis.dim(), c));
}

// ---------------------------------------------------------------------------

BilinearProduct::BilinearProduct(std::size_t dim, std::span<const StructureConstant> constants)
    : BilinearProduct(dim) {
  for (const auto& sc : constants) add(sc.i, sc.j, sc.k, sc.c);
}

void BilinearProduct::check_index(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) {
    throw Error(ErrorKind::shape, "structure constant index (" + std::to_string(i) + ", " + std::to_string(j) + ", " +
                                      std::to_string(k) + ") out of range for dimension " + std::to_string(dim_));
  }
}

void BilinearProduct::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  check_index(i, j, k);
  auto& cell = cells_[i * dim_ + j];
  auto it = std::lower_bound(cell.begin(), cell.end(), k, [](const ProductTerm& t, std::size_t key) { return t.k < key; });
  if (it != cell.end() && it->k == k) {
    if (c == 0) {
      cell.erase(it);
    } else {
      it->c = c;
    }
  } else if (c != 0) {
    cell.insert(it, ProductTerm{k, c});
  }
}

void BilinearProduct::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (c == 0) return;
  set(i, j, k, coefficient(i, j, k) + c);
}

Scalar BilinearProduct::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  check_index(i, j, k);
  for (const auto& t : terms(i, j)) {
    if (t.k == k) return t.c;
  }
  return 0;
}

std::vector<StructureConstant> BilinearProduct::constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (const auto& t : terms(i, j)) out.push_back(StructureConstant{i, j, t.k, t.c});
    }
  }
  return out;
}

bool BilinearProduct::is_zero() const {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& cell) { return cell.empty(); });
}

void BilinearProduct::require_even(const GradedBasis& basis) const {
  if (basis.dim() != dim_) throw Error(ErrorKind::shape, "product dimension does not match basis");
  const GroupSpec& g = basis.group();
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::size_t target = g.add_indices(basis.degree_index(i), basis.degree_index(j));
      for (const auto& t : terms(i, j)) {
        if (basis.degree_index(t.k) != target) {
          throw Error(ErrorKind::evenness, "structure constant (" + std::to_string(i) + ", " + std::to_string(j) +
                                               ", " + std::to_string(t.k) +
                                               ") lands outside degree deg(i) + deg(j)");
        }
      }
    }
  }
}

Vector apply_product(const BilinearProduct& p, const Vector& x, const Vector& y) {
  if (x.size() != p.dim() || y.size() != p.dim()) {
    throw Error(ErrorKind::shape, "apply_product: vector length does not match product dimension");
  }
  Vector out = zero_vector(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      if (y[j] == 0) continue;
      const Scalar xy = x[i] * y[j];
      for (const auto& t : p.terms(i, j)) out[t.k] += xy * t.c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GradedAlgebra::GradedAlgebra(GradedBasis basis, CommutationFactor epsilon, std::optional<BilinearProduct> mu,
                             std::optional<BilinearProduct> bracket, EvenLinearMap alpha)
    : basis_(std::move(basis)),
      epsilon_(std::move(epsilon)),
      mu_(std::move(mu)),
      bracket_(std::move(bracket)),
      alpha_(std::move(alpha)) {
  if (!(epsilon_.group() == basis_.group())) {
    throw Error(ErrorKind::incompatible, "commutation factor is defined on a different group than the basis");
  }
  if (!mu_ && !bracket_) throw Error(ErrorKind::missing_component, "algebra needs at least one of mu / bracket");
  if (mu_) mu_->require_even(basis_);
  if (bracket_) bracket_->require_even(basis_);
  // Re-run the evenness gate: alpha may have been built against another basis.
  alpha_ = EvenLinearMap(basis_, alpha_.matrix());
}

const BilinearProduct& GradedAlgebra::mu() const {
  if (!mu_) throw Error(ErrorKind::missing_component, "algebra has no associative product mu");
  return *mu_;
}

const BilinearProduct& GradedAlgebra::bracket() const {
  if (!bracket_) throw Error(ErrorKind::missing_component, "algebra has no bracket");
  return *bracket_;
}

GradedAlgebra GradedAlgebra::with_mu(std::optional<BilinearProduct> mu) const {
  return GradedAlgebra(basis_, epsilon_, std::move(mu), bracket_, alpha_);
}

GradedAlgebra GradedAlgebra::with_bracket(std::optional<BilinearProduct> bracket) const {
  return GradedAlgebra(basis_, epsilon_, mu_, std::move(bracket), alpha_);
}

GradedAlgebra GradedAlgebra::with_alpha(EvenLinearMap alpha) const {
  return GradedAlgebra(basis_, epsilon_, mu_, bracket_, std::move(alpha));
}

GradedAlgebra GradedAlgebra::with_epsilon(CommutationFactor epsilon) const {
  return GradedAlgebra(basis_, std::move(epsilon), mu_, bracket_, alpha_);
}

}  // namespace algcheck
