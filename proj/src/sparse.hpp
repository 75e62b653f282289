// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

// Sparse evaluation helpers used by the checkers: vectors are kept as
// index -> coefficient maps and products are composed directly from the
// structure constants.

#pragma once

#include <map>

#include "algcheck/algebra.hpp"

namespace algcheck::detail {

using Sparse = std::map<std::size_t, Scalar>;

inline Sparse basis_vector(std::size_t i) { return Sparse{{i, Scalar(1)}}; }

inline void prune(Sparse& v) {
  for (auto it = v.begin(); it != v.end();) {
    it = (it->second == 0) ? v.erase(it) : std::next(it);
  }
}

/// acc += c * x
inline Sparse& axpy(Sparse& acc, const Scalar& c, const Sparse& x) {
  if (c == 0) return acc;
  for (const auto& [k, v] : x) acc[k] += c * v;
  prune(acc);
  return acc;
}

inline Sparse scaled(const Scalar& c, const Sparse& x) {
  Sparse out;
  return axpy(out, c, x);
}

inline Sparse operator+(Sparse a, const Sparse& b) { return axpy(a, Scalar(1), b); }
inline Sparse operator-(Sparse a, const Sparse& b) { return axpy(a, Scalar(-1), b); }

inline Sparse mul(const BilinearProduct& p, const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [i, ai] : a) {
    for (const auto& [j, bj] : b) {
      const Scalar ab = ai * bj;
      for (const auto& t : p.terms(i, j)) out[t.k] += ab * t.c;
    }
  }
  prune(out);
  return out;
}

inline Sparse map(const Matrix& m, const Sparse& a) {
  Sparse out;
  for (const auto& [j, aj] : a) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m(i, j) != 0) out[i] += m(i, j) * aj;
    }
  }
  prune(out);
  return out;
}

inline Sparse map(const EvenLinearMap& f, const Sparse& a) { return map(f.matrix(), a); }

inline Vector densify(const Sparse& v, std::size_t dim) {
  Vector out = zero_vector(dim);
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

inline Sparse sparsify(const Vector& v) {
  Sparse out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0) out[k] = v[k];
  }
  return out;
}

/// Builds a product whose value on (e_i, e_j) is f(i, j).
template <class F>
BilinearProduct tabulate_product(std::size_t dim, F&& f) {
  BilinearProduct p(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (const auto& [k, c] : f(i, j)) p.set(i, j, k, c);
    }
  }
  return p;
}

}  // namespace algcheck::detail
