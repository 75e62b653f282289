// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "algcheck/error.hpp"
#include "algcheck/scalar.hpp"

namespace algcheck {

/// One tuple on which an identity fails. Indices are 0-based basis indices
/// (or group-element indices for group-level laws); lhs/rhs are the two
/// sides evaluated on that tuple.
struct Violation {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;

  Vector residual() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Result of sweeping one identity over every tuple. The identity holds iff
/// `violations` is empty; violations are kept in lexicographic index order.
struct AxiomReport {
  std::string axiom;
  std::size_t arity = 0;
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool holds() const { return violations.empty(); }
  void sort();
  friend bool operator==(const AxiomReport&, const AxiomReport&) = default;
};

/// Ordered bundle of axiom reports produced by one check.
class Report {
 public:
  Report() = default;
  explicit Report(AxiomReport single) { add(std::move(single)); }

  void add(AxiomReport axiom);
  void append(const Report& other);

  bool ok() const;
  std::size_t violation_count() const;
  const std::vector<AxiomReport>& axioms() const { return axioms_; }
  /// nullptr when no section carries that label.
  const AxiomReport* find(std::string_view axiom) const;
  const AxiomReport* first_failure() const;

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::vector<AxiomReport> axioms_;
};

/// Raised when a theorem's hypotheses do not hold on the given input; the
/// offending report travels with the exception.
class GateError : public Error {
 public:
  GateError(const std::string& what, Report report)
      : Error(ErrorKind::hypothesis, what), report_(std::move(report)) {}

  const Report& report() const noexcept { return report_; }

 private:
  Report report_;
};

}  // namespace algcheck
