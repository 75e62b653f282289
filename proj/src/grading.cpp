// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/grading.hpp"

#include <cstdlib>
#include <string>

#include "algcheck/error.hpp"

namespace algcheck {

std::size_t default_group_bound() {
  if (const char* env = std::getenv("ALGCHECK_GROUP_BOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 256;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec::GroupSpec(std::vector<int> moduli) : GroupSpec(std::move(moduli), default_group_bound()) {}

GroupSpec::GroupSpec(std::vector<int> moduli, std::size_t order_bound) : moduli_(std::move(moduli)) {
  order_ = 1;
  for (int m : moduli_) {
    if (m < 1) throw Error(ErrorKind::shape, "cyclic factor modulus must be >= 1, got " + std::to_string(m));
    order_ *= static_cast<std::size_t>(m);
    if (order_ > order_bound) {
      throw Error(ErrorKind::shape, "group order exceeds bound " + std::to_string(order_bound));
    }
  }
}

void GroupSpec::require_shape(const GroupElement& a) const {
  if (a.coords.size() != rank()) {
    throw Error(ErrorKind::shape, "group element has " + std::to_string(a.coords.size()) +
                                      " coordinates, group rank is " + std::to_string(rank()));
  }
}

GroupElement GroupSpec::zero() const { return GroupElement{std::vector<int>(rank(), 0)}; }

GroupElement GroupSpec::reduce(const std::vector<long long>& coords) const {
  if (coords.size() != rank()) {
    throw Error(ErrorKind::shape, "coordinate count does not match group rank");
  }
  GroupElement out{std::vector<int>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) {
    const long long m = moduli_[i];
    out.coords[i] = static_cast<int>(((coords[i] % m) + m) % m);
  }
  return out;
}

bool GroupSpec::is_canonical(const GroupElement& a) const {
  if (a.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.coords[i] < 0 || a.coords[i] >= moduli_[i]) return false;
  }
  return true;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
  require_shape(a);
  require_shape(b);
  GroupElement out{std::vector<int>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
  return out;
}

GroupElement GroupSpec::negate(const GroupElement& a) const {
  require_shape(a);
  GroupElement out{std::vector<int>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = (moduli_[i] - a.coords[i]) % moduli_[i];
  return out;
}

std::size_t GroupSpec::index_of(const GroupElement& a) const {
  if (!is_canonical(a)) throw Error(ErrorKind::shape, "group element is not canonical for this group");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) idx = idx * moduli_[i] + static_cast<std::size_t>(a.coords[i]);
  return idx;
}

GroupElement GroupSpec::element(std::size_t index) const {
  if (index >= order_) throw Error(ErrorKind::shape, "group element index out of range");
  GroupElement out{std::vector<int>(rank())};
  for (std::size_t i = rank(); i-- > 0;) {
    out.coords[i] = static_cast<int>(index % moduli_[i]);
    index /= moduli_[i];
  }
  return out;
}

std::vector<GroupElement> GroupSpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(order_);
  for (std::size_t i = 0; i < order_; ++i) out.push_back(element(i));
  return out;
}

std::size_t GroupSpec::add_indices(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  std::size_t weight = 1;
  for (std::size_t i = rank(); i-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli_[i]);
    out += ((a % m + b % m) % m) * weight;
    a /= m;
    b /= m;
    weight *= m;
  }
  return out;
}

GroupElement group_add(const GroupSpec& g, const GroupElement& a, const GroupElement& b) { return g.add(a, b); }

// ---------------------------------------------------------------------------
// SignBicharacter

SignBicharacter::SignBicharacter(std::vector<std::vector<int>> exponents) : exponents_(std::move(exponents)) {
  for (auto& row : exponents_) {
    if (row.size() != exponents_.size()) {
      throw Error(ErrorKind::shape, "bicharacter exponent matrix must be square");
    }
    for (int& e : row) e = ((e % 2) + 2) % 2;
  }
}

SignBicharacter SignBicharacter::trivial(std::size_t rank) {
  return SignBicharacter(std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0)));
}

SignBicharacter SignBicharacter::identity(std::size_t rank) {
  auto e = std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) e[i][i] = 1;
  return SignBicharacter(std::move(e));
}

int SignBicharacter::sign(const GroupElement& a, const GroupElement& b) const {
  if (a.coords.size() != rank() || b.coords.size() != rank()) {
    throw Error(ErrorKind::shape, "bicharacter rank does not match element");
  }
  long long parity = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.coords[i] % 2 == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) parity += exponents_[i][j] * (b.coords[j] % 2);
  }
  return parity % 2 == 0 ? 1 : -1;
}

void SignBicharacter::require_well_defined(const GroupSpec& g) const {
  if (rank() != g.rank()) {
    throw Error(ErrorKind::invalid_representation,
                "bicharacter exponent matrix is " + std::to_string(rank()) + "x" + std::to_string(rank()) +
                    " but the group has rank " + std::to_string(g.rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g.moduli()[i] % 2 == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (exponents_[i][j] != 0 || exponents_[j][i] != 0) {
        throw Error(ErrorKind::invalid_representation,
                    "factor " + std::to_string(i) + " has odd order but a nonzero exponent in row/column " +
                        std::to_string(i));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Tables

PairTable::PairTable(GroupSpec g, std::vector<Scalar> values) : group_(std::move(g)), values_(std::move(values)) {
  const std::size_t n = group_.order();
  if (values_.size() != n * n) {
    throw Error(ErrorKind::shape, "pair table needs " + std::to_string(n * n) + " entries, got " +
                                      std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) {
      throw Error(ErrorKind::invalid_representation,
                  "pair table entry (" + std::to_string(i / n) + ", " + std::to_string(i % n) + ") is zero");
    }
  }
}

PairTable PairTable::constant(const GroupSpec& g, const Scalar& c) {
  return PairTable(g, std::vector<Scalar>(g.order() * g.order(), c));
}

CommutationFactor::CommutationFactor(const GroupSpec& g, SignBicharacter sign)
    : sign_(std::move(sign)), table_(PairTable::constant(g, 1)) {
  sign_->require_well_defined(g);
  const auto& s = *sign_;
  table_ = PairTable::tabulate(g, [&](const GroupElement& a, const GroupElement& b) { return Scalar(s.sign(a, b)); });
}

CommutationFactor::CommutationFactor(PairTable table) : table_(std::move(table)) {}

namespace {

Violation scalar_violation(std::vector<std::size_t> idx, const Scalar& lhs, const Scalar& rhs) {
  return Violation{std::move(idx), Vector{lhs}, Vector{rhs}};
}

}  // namespace

Report check_bicharacter_laws(const PairTable& eps) {
  const GroupSpec& g = eps.group();
  const std::size_t n = g.order();
  const std::size_t zero = g.index_of(g.zero());

  AxiomReport skew{"bicharacter.skew", 2, 0, {}};
  AxiomReport right{"bicharacter.right_additive", 3, 0, {}};
  AxiomReport left{"bicharacter.left_additive", 3, 0, {}};
  AxiomReport unit{"bicharacter.unit", 1, 0, {}};
  AxiomReport diagonal{"bicharacter.diagonal_sign", 1, 0, {}};

  for (std::size_t a = 0; a < n; ++a) {
    ++unit.checked;
    if (eps.at(a, zero) != 1 || eps.at(zero, a) != 1) {
      unit.violations.push_back(scalar_violation({a}, eps.at(a, zero) * eps.at(zero, a), 1));
    }
    ++diagonal.checked;
    const Scalar sq = eps.at(a, a) * eps.at(a, a);
    if (sq != 1) diagonal.violations.push_back(scalar_violation({a}, sq, 1));

    for (std::size_t b = 0; b < n; ++b) {
      ++skew.checked;
      const Scalar prod = eps.at(a, b) * eps.at(b, a);
      if (prod != 1) skew.violations.push_back(scalar_violation({a, b}, prod, 1));

      for (std::size_t c = 0; c < n; ++c) {
        ++right.checked;
        const Scalar r_lhs = eps.at(a, g.add_indices(b, c));
        const Scalar r_rhs = eps.at(a, b) * eps.at(a, c);
        if (r_lhs != r_rhs) right.violations.push_back(scalar_violation({a, b, c}, r_lhs, r_rhs));

        ++left.checked;
        const Scalar l_lhs = eps.at(g.add_indices(a, b), c);
        const Scalar l_rhs = eps.at(a, c) * eps.at(b, c);
        if (l_lhs != l_rhs) left.violations.push_back(scalar_violation({a, b, c}, l_lhs, l_rhs));
      }
    }
  }

  Report report;
  report.add(std::move(skew));
  report.add(std::move(right));
  report.add(std::move(left));
  report.add(std::move(unit));
  report.add(std::move(diagonal));
  return report;
}

Report validate_bicharacter(const GroupSpec& g, const SignBicharacter& e) {
  return check_bicharacter_laws(CommutationFactor(g, e).table());
}

Report validate_multiplier(const GroupSpec& g, const MultiplierTable& s, bool symmetric) {
  if (!(s.group() == g)) throw Error(ErrorKind::incompatible, "multiplier table is over a different group");
  for (const auto& v : s.values()) {
    if (v == 0) throw Error(ErrorKind::invalid_representation, "multiplier has a zero entry");
  }
  const std::size_t n = g.order();
  Report report;

  AxiomReport cocycle{"multiplier.cocycle", 3, 0, {}};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        ++cocycle.checked;
        const Scalar lhs = s.at(x, g.add_indices(y, z)) * s.at(y, z);
        const Scalar rhs = s.at(x, y) * s.at(g.add_indices(x, y), z);
        if (lhs != rhs) cocycle.violations.push_back(scalar_violation({x, y, z}, lhs, rhs));
      }
    }
  }
  report.add(std::move(cocycle));
  if (!symmetric) return report;

  AxiomReport sym{"multiplier.symmetric", 2, 0, {}};
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ++sym.checked;
      if (s.at(x, y) != s.at(y, x)) sym.violations.push_back(scalar_violation({x, y}, s.at(x, y), s.at(y, x)));
    }
  }
  report.add(std::move(sym));

  // f(x,y,z) = sigma(x,y) sigma(z,x+y); invariance under (x,y,z) -> (y,z,x)
  // on every triple gives invariance under the whole cyclic group.
  AxiomReport cyclic{"multiplier.cyclic", 3, 0, {}};
  auto f = [&](std::size_t x, std::size_t y, std::size_t z) { return Scalar(s.at(x, y) * s.at(z, g.add_indices(x, y))); };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        ++cyclic.checked;
        const Scalar lhs = f(x, y, z);
        const Scalar rhs = f(y, z, x);
        if (lhs != rhs) cyclic.violations.push_back(scalar_violation({x, y, z}, lhs, rhs));
      }
    }
  }
  report.add(std::move(cyclic));
  return report;
}

PairTable delta_from_multiplier(const GroupSpec& g, const MultiplierTable& s) {
  if (!(s.group() == g)) throw Error(ErrorKind::incompatible, "multiplier table is over a different group");
  const std::size_t n = g.order();
  std::vector<Scalar> values;
  values.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) values.emplace_back(s.at(x, y) / s.at(y, x));
  }
  return PairTable(g, std::move(values));
}

PairTable twist_epsilon(const PairTable& eps, const PairTable& delta) {
  if (!(eps.group() == delta.group())) {
    throw Error(ErrorKind::incompatible, "commutation factor and delta are over different groups");
  }
  std::vector<Scalar> values;
  values.reserve(eps.values().size());
  for (std::size_t i = 0; i < eps.values().size(); ++i) values.emplace_back(eps.values()[i] * delta.values()[i]);
  return PairTable(eps.group(), std::move(values));
}

}  // namespace algcheck
