// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "algcheck/algebra.hpp"
#include "algcheck/axioms.hpp"
#include "algcheck/report.hpp"

namespace algcheck {

enum class OperatorKind { centroid, averaging, rota_baxter, nijenhuis };

std::string_view to_string(OperatorKind kind) noexcept;
/// Accepts "centroid", "averaging", "rota-baxter", "nijenhuis".
std::optional<OperatorKind> parse_operator_kind(std::string_view text) noexcept;

/// Which products the operator identities are checked against. `present`
/// means every product the algebra carries (the Hom-Poisson notion); the
/// other two select one structure only.
enum class ProductScope { present, mu, bracket };

struct OperatorParams {
  OperatorKind kind = OperatorKind::rota_baxter;
  unsigned power = 0;  ///< k in alpha^k (centroid / averaging)
  Scalar weight = 0;   ///< lambda (Rota-Baxter)
};

struct OperatorClaim {
  EvenLinearMap map;
  OperatorParams params;
};

struct OperatorOptions {
  ProductScope scope = ProductScope::present;
  unsigned max_power = 4;
};

/// Identity tables for the claim: commutation with alpha, then the kind's
/// product identities for each product in scope. Throws Error(shape) when
/// the power exceeds its bound and Error(missing_component) when a product
/// in scope is absent.
std::vector<IdentityTable> operator_tables(const GradedAlgebra& a, const OperatorClaim& claim,
                                           const OperatorOptions& options = {});

Report check_operator(const GradedAlgebra& a, const OperatorClaim& claim, const OperatorOptions& options = {});

/// beta([x, y]) = [alpha^k(x), beta(y)], the mirror image of the centroid
/// bracket identity.
Report check_centroid_mirror(const GradedAlgebra& a, const EvenLinearMap& beta, unsigned power);

/// Gate: N is Nijenhuis for mu. Then polarises mu into the commutator
/// bracket and checks N against that bracket. Throws GateError if the gate
/// (or the polarisation gate) fails.
Report check_nijenhuis_transfer(const GradedAlgebra& a, const EvenLinearMap& n);

struct SearchOptions {
  OperatorOptions check;
  std::size_t max_dim = 6;
  std::size_t max_candidates = 1'000'000;
};

/// Enumerates diagonal maps with entries from `candidates` (sorted and
/// deduplicated first; first diagonal entry most significant) and returns
/// those passing check_operator. Throws Error(search_bound) with the size
/// estimate when the space is too large.
std::vector<EvenLinearMap> search_diagonal_operators(const GradedAlgebra& a, const OperatorParams& params,
                                                     std::vector<Scalar> candidates, const SearchOptions& options = {});

}  // namespace algcheck
