// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/axioms.hpp"

#include <string>

#include "algcheck/error.hpp"
#include "sparse.hpp"

namespace algcheck {

using detail::basis_vector;
using detail::densify;
using detail::map;
using detail::mul;
using detail::scaled;
using detail::Sparse;

std::vector<std::size_t> IdentityTable::tuple(std::size_t offset) const {
  std::vector<std::size_t> idx(arity);
  for (std::size_t p = arity; p-- > 0;) {
    idx[p] = offset % dim;
    offset /= dim;
  }
  return idx;
}

AxiomReport IdentityTable::report() const {
  AxiomReport out{axiom, arity, tuple_count(), {}};
  for (std::size_t t = 0; t < tuple_count(); ++t) {
    if (lhs[t] != rhs[t]) out.violations.push_back(Violation{tuple(t), lhs[t], rhs[t]});
  }
  return out;
}

namespace {

Vector contract(const IdentityTable& table, const std::vector<Vector>& side, std::span<const Vector> args) {
  if (args.size() != table.arity) throw Error(ErrorKind::shape, "contract: wrong number of arguments");
  for (const auto& a : args) {
    if (a.size() != table.dim) throw Error(ErrorKind::shape, "contract: argument length does not match dimension");
  }
  Vector out = zero_vector(table.dim);
  for (std::size_t t = 0; t < table.tuple_count(); ++t) {
    const auto idx = table.tuple(t);
    Scalar w = 1;
    for (std::size_t p = 0; p < table.arity && w != 0; ++p) w *= args[p][idx[p]];
    if (w == 0) continue;
    for (std::size_t k = 0; k < table.dim; ++k) {
      if (side[t][k] != 0) out[k] += w * side[t][k];
    }
  }
  return out;
}

}  // namespace

Vector IdentityTable::contract_lhs(std::span<const Vector> args) const { return contract(*this, lhs, args); }
Vector IdentityTable::contract_rhs(std::span<const Vector> args) const { return contract(*this, rhs, args); }

IdentityTable tabulate_identity(std::string axiom, std::size_t arity, std::size_t dim,
                                const std::function<TupleSides(std::span<const std::size_t>)>& f) {
  IdentityTable table{std::move(axiom), arity, dim, {}, {}};
  std::size_t count = 1;
  for (std::size_t p = 0; p < arity; ++p) count *= dim;
  table.lhs.reserve(count);
  table.rhs.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const auto idx = table.tuple(t);
    auto [l, r] = f(idx);
    table.lhs.push_back(std::move(l));
    table.rhs.push_back(std::move(r));
  }
  return table;
}

namespace {

TupleSides sides(const Sparse& l, const Sparse& r, std::size_t dim) { return {densify(l, dim), densify(r, dim)}; }

}  // namespace

IdentityTable associativity_table(const GradedAlgebra& a) {
  const auto& m = a.mu();
  return tabulate_identity("associativity", 3, a.dim(), [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]), z = basis_vector(t[2]);
    return sides(mul(m, mul(m, x, y), z), mul(m, x, mul(m, y, z)), a.dim());
  });
}

IdentityTable hom_associativity_table(const GradedAlgebra& a) {
  const auto& m = a.mu();
  const auto& alpha = a.alpha();
  return tabulate_identity("hom_associativity", 3, a.dim(), [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]), z = basis_vector(t[2]);
    return sides(mul(m, map(alpha, x), mul(m, y, z)), mul(m, mul(m, x, y), map(alpha, z)), a.dim());
  });
}

IdentityTable epsilon_commutativity_table(const GradedAlgebra& a) {
  const auto& m = a.mu();
  return tabulate_identity("epsilon_commutativity", 2, a.dim(), [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
    return sides(mul(m, x, y), scaled(a.eps(t[0], t[1]), mul(m, y, x)), a.dim());
  });
}

IdentityTable skew_symmetry_table(const GradedAlgebra& a) {
  const auto& b = a.bracket();
  return tabulate_identity("skew_symmetry", 2, a.dim(), [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
    return sides(mul(b, x, y), scaled(-a.eps(t[0], t[1]), mul(b, y, x)), a.dim());
  });
}

IdentityTable hom_jacobi_table(const GradedAlgebra& a) {
  const auto& b = a.bracket();
  const auto& alpha = a.alpha();
  return tabulate_identity("hom_jacobi", 3, a.dim(), [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]), z = basis_vector(t[2]);
    Sparse sum;
    detail::axpy(sum, a.eps(t[2], t[0]), mul(b, map(alpha, x), mul(b, y, z)));
    detail::axpy(sum, a.eps(t[0], t[1]), mul(b, map(alpha, y), mul(b, z, x)));
    detail::axpy(sum, a.eps(t[1], t[2]), mul(b, map(alpha, z), mul(b, x, y)));
    return sides(sum, Sparse{}, a.dim());
  });
}

IdentityTable hom_leibniz_table(const GradedAlgebra& a) {
  const auto& m = a.mu();
  const auto& b = a.bracket();
  const auto& alpha = a.alpha();
  return tabulate_identity("hom_leibniz", 3, a.dim(), [&](std::span<const std::size_t> t) {
    const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]), z = basis_vector(t[2]);
    const Sparse lhs = mul(b, map(alpha, x), mul(m, y, z));
    Sparse rhs = mul(m, mul(b, x, y), map(alpha, z));
    detail::axpy(rhs, a.eps(t[0], t[1]), mul(m, map(alpha, y), mul(b, x, z)));
    return sides(lhs, rhs, a.dim());
  });
}

Report check_associative(const GradedAlgebra& a) { return Report(associativity_table(a).report()); }

Report check_hom_associative(const GradedAlgebra& a) { return Report(hom_associativity_table(a).report()); }

Report check_epsilon_commutative(const GradedAlgebra& a) { return Report(epsilon_commutativity_table(a).report()); }

Report check_hom_lie(const GradedAlgebra& a) {
  Report r(skew_symmetry_table(a).report());
  r.add(hom_jacobi_table(a).report());
  return r;
}

Report check_hom_leibniz(const GradedAlgebra& a) { return Report(hom_leibniz_table(a).report()); }

std::vector<IdentityTable> hom_poisson_tables(const GradedAlgebra& a, bool commutative) {
  std::vector<IdentityTable> out;
  out.push_back(hom_associativity_table(a));
  out.push_back(skew_symmetry_table(a));
  out.push_back(hom_jacobi_table(a));
  out.push_back(hom_leibniz_table(a));
  if (commutative) out.push_back(epsilon_commutativity_table(a));
  return out;
}

Report check_hom_poisson(const GradedAlgebra& a, bool commutative) {
  // Fail fast on a missing component before sweeping anything.
  a.mu();
  a.bracket();
  Report r;
  for (const auto& table : hom_poisson_tables(a, commutative)) r.add(table.report());
  return r;
}

GradedAlgebra commutator_bracket(const GradedAlgebra& a) {
  const auto& m = a.mu();
  Report gate = check_hom_associative(a);
  if (!gate.ok()) throw GateError("commutator bracket needs a Hom-associative product", std::move(gate));
  auto bracket = detail::tabulate_product(a.dim(), [&](std::size_t i, std::size_t j) {
    Sparse v = mul(m, basis_vector(i), basis_vector(j));
    return detail::axpy(v, -a.eps(i, j), mul(m, basis_vector(j), basis_vector(i)));
  });
  return a.with_bracket(std::move(bracket));
}

Report check_morphism(const EvenLinearMap& f, const GradedAlgebra& src, const GradedAlgebra& dst) {
  if (src.dim() != dst.dim() || f.dim() != src.dim()) {
    throw Error(ErrorKind::shape, "morphism check needs equal dimensions");
  }
  if (!(src.group() == dst.group())) throw Error(ErrorKind::shape, "morphism check needs a common grading group");
  // f must be even for both gradings.
  const EvenLinearMap fs(src.basis(), f.matrix());
  const EvenLinearMap fd(dst.basis(), f.matrix());
  const std::size_t n = src.dim();

  Report r;
  r.add(tabulate_identity("morphism.alpha", 1, n, [&](std::span<const std::size_t> t) {
          const Sparse x = basis_vector(t[0]);
          return sides(map(f, map(src.alpha(), x)), map(dst.alpha(), map(f, x)), n);
        }).report());

  auto product_clause = [&](const char* label, const BilinearProduct& p_src, const BilinearProduct& p_dst) {
    r.add(tabulate_identity(label, 2, n, [&](std::span<const std::size_t> t) {
            const Sparse x = basis_vector(t[0]), y = basis_vector(t[1]);
            return sides(map(f, mul(p_src, x, y)), mul(p_dst, map(f, x), map(f, y)), n);
          }).report());
  };
  if (src.has_mu()) product_clause("morphism.mu", src.mu(), dst.mu());
  if (src.has_bracket()) product_clause("morphism.bracket", src.bracket(), dst.bracket());
  return r;
}

}  // namespace algcheck
