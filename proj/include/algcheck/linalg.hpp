// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "algcheck/scalar.hpp"

namespace algcheck {

/// Dense square rational matrix; column j is the image of basis vector j.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n, Scalar(0)) {}
  Matrix(std::size_t n, std::vector<Scalar> row_major);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix scalar(std::size_t n, const Scalar& c);

  std::size_t size() const { return n_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<Scalar>& row_major() const { return a_; }

  Vector apply(const Vector& v) const;
  Vector column(std::size_t j) const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  Matrix power(unsigned k) const;

  bool is_identity() const;
  bool is_zero() const;
  Scalar determinant() const;
  /// Exact Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_size(const Matrix& rhs) const;

  std::size_t n_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace algcheck
