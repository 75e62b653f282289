// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "algcheck/document.hpp"

namespace algcheck {

/// Names of the built-in example algebras, sorted.
std::vector<std::string> fixture_names();

/// Build the named fixture; throws Error(shape) for an unknown name.
AlgebraDocument fixture(std::string_view name);

/// The three-dimensional Hom-Poisson example on Z2 for a nonzero parameter
/// `a` and sign exponent E = [epsilon_exponent]. `corrected` selects
/// e2 * e2 = e2 / a; without it the e2 * e2 term is absent.
GradedAlgebra example3_algebra(const Scalar& a, int epsilon_exponent = 1, bool corrected = true);

}  // namespace algcheck
