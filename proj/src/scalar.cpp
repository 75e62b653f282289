// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "algcheck/error.hpp"

namespace algcheck {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::shape: return "shape";
    case ErrorKind::invalid_representation: return "invalid-representation";
    case ErrorKind::missing_component: return "missing-component";
    case ErrorKind::evenness: return "evenness";
    case ErrorKind::hypothesis: return "hypothesis";
    case ErrorKind::inversion: return "inversion";
    case ErrorKind::search_bound: return "search-bound";
    case ErrorKind::incompatible: return "incompatible";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_literal(num_text)) {
    throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_literal(den_text)) {
      throw Error(ErrorKind::parse, "malformed rational '" + std::string(text) + "'");
    }
    den = parse_integer(den_text);
    if (den == 0) {
      throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    }
  }
  Scalar value(parse_integer(num_text), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vector zero_vector(std::size_t dim) { return Vector(dim, Scalar(0)); }

Vector unit_vector(std::size_t dim, std::size_t index) {
  Vector v = zero_vector(dim);
  v.at(index) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

}  // namespace algcheck
