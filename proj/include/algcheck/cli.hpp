// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "algcheck/grading.hpp"
#include "algcheck/report.hpp"
#include "algcheck/scalar.hpp"

namespace algcheck {

struct AlgebraDocument;

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // an axiom, gate or certification failed
inline constexpr int kExitUsage = 2;    // unreadable input, bad arguments, incompatible data

/// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The sections `validate` prints: bicharacter laws, each multiplier's
/// cocycle law, then Hom-Poisson, Hom-associative or Hom-Lie axioms
/// depending on which products are present.
Report validation_report(const AlgebraDocument& doc, bool commutative = false);

/// Linear combination with 1-based labels, e.g. "2 e1 - 1/2 e3"; "0" for zero.
std::string format_vector(const Vector& v);

/// One PASS/FAIL line per section. With `full`, every violation is listed;
/// otherwise only the first one of each failing section. Sections about the
/// grading group (bicharacter, multiplier) print group elements when `group`
/// is given.
std::string format_report(const Report& report, bool full = false, const GroupSpec* group = nullptr);

}  // namespace algcheck
