// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "algcheck/algebra.hpp"
#include "algcheck/error.hpp"
#include "algcheck/grading.hpp"
#include "algcheck/report.hpp"

namespace algcheck {

/// Parse failure with a stable diagnostic code (e.g. "E-EVENNESS") and a
/// location: "line L, column C" for syntax errors, a JSON pointer for
/// schema and invariant errors.
class DocumentError : public Error {
 public:
  DocumentError(std::string code, std::string location, const std::string& message)
      : Error(ErrorKind::parse, code + " at " + location + ": " + message),
        code_(std::move(code)),
        location_(std::move(location)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string code_;
  std::string location_;
};

/// One algebra file: the algebra itself plus named operator matrices,
/// named multiplier tables and free-form metadata.
struct AlgebraDocument {
  std::string name;
  GradedAlgebra algebra;
  /// Shape-checked only; evenness is enforced when a map is used.
  std::map<std::string, Matrix> operators;
  std::map<std::string, MultiplierTable> multipliers;
  nlohmann::json metadata = nlohmann::json::object();

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

AlgebraDocument parse_document(std::string_view text);
/// Canonical text: sorted keys, sorted structure constants, reduced
/// rationals, two-space indentation, trailing newline.
std::string serialize_document(const AlgebraDocument& doc);

AlgebraDocument load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const AlgebraDocument& doc);

nlohmann::json to_json(const Report& report);

}  // namespace algcheck
