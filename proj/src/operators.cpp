// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/operators.hpp"

#include <algorithm>
#include <string>

#include "algcheck/error.hpp"
#include "sparse.hpp"

namespace algcheck {

using detail::axpy;
using detail::basis_vector;
using detail::densify;
using detail::map;
using detail::mul;
using detail::scaled;
using detail::Sparse;
using detail::operator+;
using detail::operator-;

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::centroid: return "centroid";
    case OperatorKind::averaging: return "averaging";
    case OperatorKind::rota_baxter: return "rota-baxter";
    case OperatorKind::nijenhuis: return "nijenhuis";
  }
  return "unknown";
}

std::optional<OperatorKind> parse_operator_kind(std::string_view text) noexcept {
  for (auto kind : {OperatorKind::centroid, OperatorKind::averaging, OperatorKind::rota_baxter, OperatorKind::nijenhuis}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

std::string label(OperatorKind kind) {
  std::string s(to_string(kind));
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

TupleSides sides(const Sparse& l, const Sparse& r, std::size_t dim) { return {densify(l, dim), densify(r, dim)}; }

// Identities of one kind against one product p. `is_bracket` only changes
// the labels and, for centroid / averaging, selects the single-sided
// bracket form.
void product_tables(std::vector<IdentityTable>& out, const GradedAlgebra& a, const BilinearProduct& p,
                    const std::string& which, const OperatorClaim& claim, const Matrix& alpha_k) {
  const std::size_t n = a.dim();
  const auto& b = claim.map.matrix();
  const auto& params = claim.params;
  const bool is_bracket = which == "bracket";
  const std::string prefix = label(params.kind) + "." + which;

  switch (params.kind) {
    case OperatorKind::centroid:
      out.push_back(tabulate_identity(is_bracket ? prefix : prefix + ".left", 2, n, [&](std::span<const std::size_t> t) {
        const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
        return sides(map(b, mul(p, x, y)), mul(p, map(b, x), map(alpha_k, y)), n);
      }));
      if (!is_bracket) {
        out.push_back(tabulate_identity(prefix + ".right", 2, n, [&](std::span<const std::size_t> t) {
          const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
          return sides(map(b, mul(p, x, y)), mul(p, map(alpha_k, x), map(b, y)), n);
        }));
      }
      break;
    case OperatorKind::averaging:
      out.push_back(tabulate_identity(is_bracket ? prefix : prefix + ".left", 2, n, [&](std::span<const std::size_t> t) {
        const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
        return sides(map(b, mul(p, map(b, x), map(alpha_k, y))), mul(p, map(b, x), map(b, y)), n);
      }));
      if (!is_bracket) {
        out.push_back(tabulate_identity(prefix + ".right", 2, n, [&](std::span<const std::size_t> t) {
          const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
          return sides(mul(p, map(b, x), map(b, y)), map(b, mul(p, map(alpha_k, x), map(b, y))), n);
        }));
      }
      break;
    case OperatorKind::rota_baxter:
      out.push_back(tabulate_identity(prefix, 2, n, [&](std::span<const std::size_t> t) {
        const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
        Sparse inner = mul(p, map(b, x), y) + mul(p, x, map(b, y));
        axpy(inner, params.weight, mul(p, x, y));
        return sides(mul(p, map(b, x), map(b, y)), map(b, inner), n);
      }));
      break;
    case OperatorKind::nijenhuis:
      out.push_back(tabulate_identity(prefix, 2, n, [&](std::span<const std::size_t> t) {
        const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
        const Sparse inner = mul(p, map(b, x), y) + mul(p, x, map(b, y)) - map(b, mul(p, x, y));
        return sides(mul(p, map(b, x), map(b, y)), map(b, inner), n);
      }));
      break;
  }
}

}  // namespace

std::vector<IdentityTable> operator_tables(const GradedAlgebra& a, const OperatorClaim& claim,
                                           const OperatorOptions& options) {
  const auto& params = claim.params;
  if (params.power > options.max_power) {
    throw Error(ErrorKind::shape, "operator power " + std::to_string(params.power) + " exceeds bound " +
                                      std::to_string(options.max_power));
  }
  // Re-validate evenness against this algebra's grading.
  const EvenLinearMap beta(a.basis(), claim.map.matrix());
  const std::size_t n = a.dim();
  const Matrix& alpha = a.alpha().matrix();
  const Matrix alpha_k = alpha.power(params.power);

  const bool want_mu = options.scope != ProductScope::bracket;
  const bool want_bracket = options.scope != ProductScope::mu;
  if (options.scope == ProductScope::mu) a.mu();
  if (options.scope == ProductScope::bracket) a.bracket();

  std::vector<IdentityTable> out;
  out.push_back(tabulate_identity(label(params.kind) + ".alpha_commutation", 1, n, [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]);
    return sides(map(beta, map(alpha, x)), map(alpha, map(beta, x)), n);
  }));
  if (want_mu && a.has_mu()) product_tables(out, a, a.mu(), "mu", claim, alpha_k);
  if (want_bracket && a.has_bracket()) product_tables(out, a, a.bracket(), "bracket", claim, alpha_k);
  return out;
}

Report check_operator(const GradedAlgebra& a, const OperatorClaim& claim, const OperatorOptions& options) {
  Report r;
  for (const auto& table : operator_tables(a, claim, options)) r.add(table.report());
  return r;
}

Report check_centroid_mirror(const GradedAlgebra& a, const EvenLinearMap& beta, unsigned power) {
  const auto& p = a.bracket();
  const Matrix alpha_k = a.alpha().matrix().power(power);
  const std::size_t n = a.dim();
  return Report(tabulate_identity("centroid.bracket.mirror", 2, n, [&](std::span<const std::size_t> t) {
                  const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
                  return sides(map(beta, mul(p, x, y)), mul(p, map(alpha_k, x), map(beta, y)), n);
                }).report());
}

Report check_nijenhuis_transfer(const GradedAlgebra& a, const EvenLinearMap& n) {
  const OperatorClaim claim{n, OperatorParams{OperatorKind::nijenhuis, 0, 0}};
  Report gate = check_operator(a, claim, OperatorOptions{ProductScope::mu});
  if (!gate.ok()) throw GateError("map is not a Nijenhuis operator for mu", std::move(gate));
  const GradedAlgebra polarised = commutator_bracket(a.with_bracket(std::nullopt));
  return check_operator(polarised, claim, OperatorOptions{ProductScope::bracket});
}

std::vector<EvenLinearMap> search_diagonal_operators(const GradedAlgebra& a, const OperatorParams& params,
                                                     std::vector<Scalar> candidates, const SearchOptions& options) {
  const std::size_t n = a.dim();
  if (n > options.max_dim) {
    throw Error(ErrorKind::search_bound,
                "diagonal search limited to dimension " + std::to_string(options.max_dim) + ", got " + std::to_string(n));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  if (candidates.empty()) return {};

  std::size_t space = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (space > options.max_candidates / candidates.size()) {
      throw Error(ErrorKind::search_bound, "search space of " + std::to_string(candidates.size()) + "^" +
                                               std::to_string(n) + " maps exceeds bound " +
                                               std::to_string(options.max_candidates));
    }
    space *= candidates.size();
  }

  std::vector<EvenLinearMap> found;
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t s = 0; s < space; ++s) {
    Vector diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = candidates[digits[i]];
    EvenLinearMap m(a.basis(), Matrix::diagonal(diag));
    if (check_operator(a, OperatorClaim{m, params}, options.check).ok()) found.push_back(std::move(m));
    for (std::size_t i = n; i-- > 0;) {
      if (++digits[i] < candidates.size()) break;
      digits[i] = 0;
    }
  }
  return found;
}

}  // namespace algcheck
