// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "algcheck/report.hpp"
#include "algcheck/scalar.hpp"

namespace algcheck {

/// Element of Z_{m_1} x ... x Z_{m_r}; coords[i] lies in [0, m_i) once it
/// has gone through GroupSpec.
struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Group-order bound used when none is given: $ALGCHECK_GROUP_BOUND if set
/// to a positive integer, else 256.
std::size_t default_group_bound();

/// Finite abelian group given as a product of cyclic factors. Elements are
/// enumerated lexicographically (first coordinate most significant); every
/// table over the group uses that order.
class GroupSpec {
 public:
  GroupSpec() = default;  // trivial group, rank 0
  explicit GroupSpec(std::vector<int> moduli);
  GroupSpec(std::vector<int> moduli, std::size_t order_bound);

  std::size_t rank() const { return moduli_.size(); }
  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t order() const { return order_; }

  GroupElement zero() const;
  /// Reduces arbitrary integer coordinates into canonical range.
  GroupElement reduce(const std::vector<long long>& coords) const;
  bool is_canonical(const GroupElement& a) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;

  std::size_t index_of(const GroupElement& a) const;
  GroupElement element(std::size_t index) const;
  std::vector<GroupElement> elements() const;
  /// index_of(add(element(a), element(b))) without materialising elements.
  std::size_t add_indices(std::size_t a, std::size_t b) const;

  friend bool operator==(const GroupSpec& x, const GroupSpec& y) { return x.moduli_ == y.moduli_; }

 private:
  void require_shape(const GroupElement& a) const;

  std::vector<int> moduli_;
  std::size_t order_ = 1;
};

/// Componentwise sum reduced modulo each factor.
GroupElement group_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b);

/// Sign bicharacter eps(a, b) = (-1)^(a^T E b) with E taken mod 2.
class SignBicharacter {
 public:
  SignBicharacter() = default;
  explicit SignBicharacter(std::vector<std::vector<int>> exponents);

  static SignBicharacter trivial(std::size_t rank);
  static SignBicharacter identity(std::size_t rank);

  std::size_t rank() const { return exponents_.size(); }
  int exponent(std::size_t i, std::size_t j) const { return exponents_[i][j]; }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }

  int sign(const GroupElement& a, const GroupElement& b) const;

  /// Throws Error(invalid_representation) when a factor of odd order has a
  /// nonzero row or column, or when the rank does not match the group.
  void require_well_defined(const GroupSpec& g) const;

  friend bool operator==(const SignBicharacter&, const SignBicharacter&) = default;

 private:
  std::vector<std::vector<int>> exponents_;
};

/// Total map G x G -> nonzero rationals stored densely in element order.
/// Used for multipliers, their associated bicharacters, and table-valued
/// commutation factors.
class PairTable {
 public:
  PairTable(GroupSpec g, std::vector<Scalar> values);

  template <class F>
  static PairTable tabulate(const GroupSpec& g, F&& f) {
    std::vector<Scalar> values;
    values.reserve(g.order() * g.order());
    const auto elems = g.elements();
    for (const auto& a : elems) {
      for (const auto& b : elems) values.emplace_back(f(a, b));
    }
    return PairTable(g, std::move(values));
  }
  static PairTable constant(const GroupSpec& g, const Scalar& c);

  const GroupSpec& group() const { return group_; }
  const Scalar& at(std::size_t a, std::size_t b) const { return values_[a * group_.order() + b]; }
  const Scalar& operator()(const GroupElement& a, const GroupElement& b) const {
    return at(group_.index_of(a), group_.index_of(b));
  }
  const std::vector<Scalar>& values() const { return values_; }

  friend bool operator==(const PairTable&, const PairTable&) = default;

 private:
  GroupSpec group_;
  std::vector<Scalar> values_;
};

using MultiplierTable = PairTable;

/// Commutation factor of a color algebra: either a sign bicharacter given by
/// its exponent matrix, or an explicit table (as produced by multiplier
/// twists). Both are evaluated through the same dense table.
class CommutationFactor {
 public:
  CommutationFactor(const GroupSpec& g, SignBicharacter sign);
  explicit CommutationFactor(PairTable table);

  const GroupSpec& group() const { return table_.group(); }
  const Scalar& at(std::size_t a, std::size_t b) const { return table_.at(a, b); }
  const PairTable& table() const { return table_; }
  const SignBicharacter* sign_form() const { return sign_ ? &*sign_ : nullptr; }

  friend bool operator==(const CommutationFactor&, const CommutationFactor&) = default;

 private:
  std::optional<SignBicharacter> sign_;
  PairTable table_;
};

/// Exhaustive check of the skew-symmetric bicharacter laws and the derived
/// facts eps(a,0) = eps(0,a) = 1 and eps(a,a) = +-1.
Report check_bicharacter_laws(const PairTable& eps);

/// Well-definedness gate (throws) followed by check_bicharacter_laws.
Report validate_bicharacter(const GroupSpec& g, const SignBicharacter& e);

/// Cocycle identity on all triples; with `symmetric`, also sigma(x,y) =
/// sigma(y,x) and cyclic invariance of sigma(x,y) sigma(z,x+y).
Report validate_multiplier(const GroupSpec& g, const MultiplierTable& s, bool symmetric);

/// delta(x, y) = sigma(x, y) / sigma(y, x).
PairTable delta_from_multiplier(const GroupSpec& g, const MultiplierTable& s);

/// Pointwise product eps * delta.
PairTable twist_epsilon(const PairTable& eps, const PairTable& delta);

}  // namespace algcheck
