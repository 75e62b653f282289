// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/report.hpp"

#include <algorithm>
#include <numeric>

namespace algcheck {

Vector Violation::residual() const {
  Vector r = lhs;
  for (std::size_t k = 0; k < r.size() && k < rhs.size(); ++k) r[k] -= rhs[k];
  return r;
}

void AxiomReport::sort() {
  std::stable_sort(violations.begin(), violations.end(),
                   [](const Violation& a, const Violation& b) { return a.indices < b.indices; });
}

void Report::add(AxiomReport axiom) {
  axiom.sort();
  axioms_.push_back(std::move(axiom));
}

void Report::append(const Report& other) {
  axioms_.insert(axioms_.end(), other.axioms_.begin(), other.axioms_.end());
}

bool Report::ok() const {
  return std::all_of(axioms_.begin(), axioms_.end(), [](const AxiomReport& a) { return a.holds(); });
}

std::size_t Report::violation_count() const {
  return std::accumulate(axioms_.begin(), axioms_.end(), std::size_t{0},
                         [](std::size_t n, const AxiomReport& a) { return n + a.violations.size(); });
}

const AxiomReport* Report::find(std::string_view axiom) const {
  for (const auto& a : axioms_) {
    if (a.axiom == axiom) return &a;
  }
  return nullptr;
}

const AxiomReport* Report::first_failure() const {
  for (const auto& a : axioms_) {
    if (!a.holds()) return &a;
  }
  return nullptr;
}

}  // namespace algcheck
