// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace algcheck {

/// Failure categories shared by every module. The CLI maps them onto exit
/// codes; the parser additionally reports them as diagnostic codes.
enum class ErrorKind {
  shape,                   ///< dimension / length mismatch, empty basis
  invalid_representation,  ///< zero multiplier entry, ill-defined sign matrix
  missing_component,       ///< product or map required by a check is absent
  evenness,                ///< map or product does not respect the grading
  hypothesis,              ///< theorem hypothesis not met (other than a gate report)
  inversion,               ///< singular matrix where a bijection was required
  search_bound,            ///< enumeration would exceed its guard
  incompatible,            ///< algebras over different groups / factors
  parse,                   ///< malformed document
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace algcheck
