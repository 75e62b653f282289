// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace algcheck {

/// Exact rational number, always kept in canonical form (reduced, positive
/// denominator).
using Scalar = mpq_class;

/// Dense coordinate vector with respect to a basis.
using Vector = std::vector<Scalar>;

/// Parses "p/q" or "p" (optional sign, decimal digits only). Throws
/// algcheck::Error(parse) on malformed input and on a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Scalar& value);

Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t index);
bool is_zero(const Vector& v);

}  // namespace algcheck
