// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "algcheck/error.hpp"

namespace algcheck {

Matrix::Matrix(std::size_t n, std::vector<Scalar> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n * n) {
    throw Error(ErrorKind::shape, "matrix of size " + std::to_string(n) + " needs " + std::to_string(n * n) +
                                      " entries, got " + std::to_string(a_.size()));
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::scalar(std::size_t n, const Scalar& c) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

void Matrix::require_same_size(const Matrix& rhs) const {
  if (rhs.n_ != n_) throw Error(ErrorKind::shape, "matrix size mismatch");
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != n_) throw Error(ErrorKind::shape, "vector length does not match matrix size");
  Vector out = zero_vector(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (v[j] == 0) continue;
    for (std::size_t i = 0; i < n_; ++i) {
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

Vector Matrix::column(std::size_t j) const {
  Vector out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_size(rhs);
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t l = 0; l < n_; ++l) {
      const Scalar& a = (*this)(i, l);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(l, j);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_same_size(rhs);
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_same_size(rhs);
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& x : out.a_) x *= c;
  return out;
}

Matrix Matrix::transposed() const {
  Matrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::power(unsigned k) const {
  Matrix out = identity(n_);
  for (unsigned i = 0; i < k; ++i) out = out * (*this);
  return out;
}

bool Matrix::is_identity() const { return *this == identity(n_); }

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s == 0; });
}

Scalar Matrix::determinant() const {
  Matrix m = *this;
  Scalar det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(m(pivot, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (m(r, col) == 0) continue;
      const Scalar f = m(r, col) / m(col, col);
      for (std::size_t j = col; j < n_; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  Matrix m = *this;
  Matrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && m(pivot, col) == 0) ++pivot;
    if (pivot == n_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar p = m(col, col);
    for (std::size_t j = 0; j < n_; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = 0; j < n_; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace algcheck
