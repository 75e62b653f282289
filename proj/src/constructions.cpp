// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include "algcheck/constructions.hpp"

#include <string>

#include "algcheck/axioms.hpp"
#include "algcheck/error.hpp"
#include "algcheck/operators.hpp"
#include "sparse.hpp"

namespace algcheck {

using detail::axpy;
using detail::basis_vector;
using detail::map;
using detail::mul;
using detail::scaled;
using detail::Sparse;
using detail::operator+;
using detail::operator-;
using detail::tabulate_product;

namespace {

void require_gate(const std::string& what, const Report& gate) {
  if (!gate.ok()) throw GateError(what, gate);
}

Report hom_poisson_gate(const GradedAlgebra& p) {
  Report gate = check_hom_poisson(p);
  require_gate("input is not a Hom-Poisson color algebra", gate);
  return gate;
}

Report operator_gate(const GradedAlgebra& p, const EvenLinearMap& m, OperatorParams params, const std::string& what) {
  Report gate = check_operator(p, OperatorClaim{m, std::move(params)});
  require_gate(what, gate);
  return gate;
}

// New products from a rule evaluated on sparse basis vectors.
template <class F>
BilinearProduct derive(const GradedAlgebra& a, F&& f) {
  return tabulate_product(a.dim(), [&](std::size_t i, std::size_t j) { return f(basis_vector(i), basis_vector(j)); });
}

ConstructionResult finish(GradedAlgebra out, Report gate) {
  Report cert = check_hom_poisson(out);
  return ConstructionResult{std::move(out), std::move(gate), std::move(cert), Report{}, false};
}

ConstructionResult finish_with_morphism(GradedAlgebra out, Report gate, const EvenLinearMap& f,
                                        const GradedAlgebra& target, bool binding) {
  ConstructionResult r = finish(std::move(out), std::move(gate));
  r.morphism = check_morphism(f, r.algebra, target);
  r.morphism_binding = binding;
  return r;
}

BilinearProduct rescale(const GradedAlgebra& a, const BilinearProduct& p, const PairTable& sigma) {
  BilinearProduct out(a.dim());
  for (const auto& sc : p.constants()) {
    out.set(sc.i, sc.j, sc.k, sc.c * sigma.at(a.basis().degree_index(sc.i), a.basis().degree_index(sc.j)));
  }
  return out;
}

}  // namespace

ConstructionResult xi_twist(const GradedAlgebra& a, const Vector& xi) {
  if (xi.size() != a.dim()) throw Error(ErrorKind::shape, "xi has the wrong length");
  const auto zero = a.group().index_of(a.group().zero());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] != 0 && a.basis().degree_index(i) != zero) {
      throw Error(ErrorKind::hypothesis, "xi must be homogeneous of degree 0 (component " + std::to_string(i) + ")");
    }
  }
  Report gate = check_associative(a);
  gate.append(check_hom_associative(a));
  require_gate("xi twist needs an associative and Hom-associative product", gate);

  const Sparse x = detail::sparsify(xi);
  const auto& m = a.mu();
  GradedAlgebra out = a.with_mu(derive(a, [&](const Sparse& u, const Sparse& v) { return mul(m, mul(m, u, x), v); }))
                          .with_bracket(std::nullopt);
  Report cert = check_hom_associative(out);
  return ConstructionResult{std::move(out), std::move(gate), std::move(cert), Report{}, false};
}

ConstructionResult multiplier_twist_symmetric(const GradedAlgebra& p, const MultiplierTable& sigma) {
  Report gate = validate_multiplier(p.group(), sigma, true);
  require_gate("sigma is not a symmetric multiplier with the cyclic property", gate);
  gate.append(hom_poisson_gate(p));
  GradedAlgebra out = p.with_mu(rescale(p, p.mu(), sigma)).with_bracket(rescale(p, p.bracket(), sigma));
  return finish(std::move(out), std::move(gate));
}

ConstructionResult multiplier_twist_delta(const GradedAlgebra& p, const MultiplierTable& sigma,
                                          std::span<const NamedMap> endomorphisms) {
  Report gate = validate_multiplier(p.group(), sigma, false);
  require_gate("sigma is not a multiplier", gate);
  gate.append(hom_poisson_gate(p));

  const PairTable delta = delta_from_multiplier(p.group(), sigma);
  GradedAlgebra out = GradedAlgebra(p.basis(), CommutationFactor(twist_epsilon(p.epsilon().table(), delta)),
                                    rescale(p, p.mu(), sigma), rescale(p, p.bracket(), sigma), p.alpha());
  ConstructionResult r = finish(std::move(out), std::move(gate));
  r.morphism_binding = true;

  std::vector<NamedMap> candidates{{"alpha", p.alpha()}};
  candidates.insert(candidates.end(), endomorphisms.begin(), endomorphisms.end());
  for (const auto& [name, f] : candidates) {
    if (f.dim() != p.dim()) continue;
    bool is_endo = false;
    try {
      is_endo = check_morphism(f, p, p).ok();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::evenness) throw;
    }
    if (!is_endo) continue;
    const Report endo = check_morphism(f, r.algebra, r.algebra);
    for (auto section : endo.axioms()) {
      section.axiom = "endomorphism[" + name + "]." + section.axiom;
      r.morphism.add(std::move(section));
    }
  }
  return r;
}

ConstructionResult transport_along_bijection(const GradedAlgebra& target, const EvenLinearMap& f) {
  if (f.dim() != target.dim()) throw Error(ErrorKind::shape, "transport map has the wrong dimension");
  const auto inv = f.matrix().inverse();
  if (!inv) throw Error(ErrorKind::inversion, "transport map is singular");
  Report gate = hom_poisson_gate(target);

  const Matrix& fm = f.matrix();
  auto pull = [&](const BilinearProduct& p) {
    return derive(target, [&](const Sparse& u, const Sparse& v) { return map(*inv, mul(p, map(fm, u), map(fm, v))); });
  };
  GradedAlgebra out(target.basis(), target.epsilon(), pull(target.mu()), pull(target.bracket()),
                    EvenLinearMap(target.basis(), *inv * target.alpha().matrix() * fm));
  return finish_with_morphism(std::move(out), std::move(gate), f, target, true);
}

ConstructionResult centroid_twist(const GradedAlgebra& p, const EvenLinearMap& beta) {
  Report gate = hom_poisson_gate(p);
  gate.append(operator_gate(p, beta, OperatorParams{OperatorKind::centroid, 0, 0}, "beta is not an alpha^0-centroid element"));
  const auto& br = p.bracket();
  GradedAlgebra out = p.with_bracket(derive(p, [&](const Sparse& x, const Sparse& y) { return mul(br, map(beta, x), y); }));
  return finish_with_morphism(std::move(out), std::move(gate), beta, p, false);
}

ConstructionResult averaging_twist_pairwise(const GradedAlgebra& p, const EvenLinearMap& beta) {
  Report gate = hom_poisson_gate(p);
  gate.append(operator_gate(p, beta, OperatorParams{OperatorKind::averaging, 0, 0}, "beta is not an alpha^0-averaging operator"));
  auto twist = [&](const BilinearProduct& m) {
    return derive(p, [&](const Sparse& x, const Sparse& y) { return mul(m, map(beta, x), map(beta, y)); });
  };
  GradedAlgebra out = p.with_mu(twist(p.mu())).with_bracket(twist(p.bracket()));
  return finish(std::move(out), std::move(gate));
}

ConstructionResult averaging_twist_untwisted(const GradedAlgebra& p, const EvenLinearMap& beta) {
  if (!p.alpha().matrix().is_identity()) {
    throw Error(ErrorKind::hypothesis, "this averaging twist starts from an untwisted algebra (alpha = id)");
  }
  Report gate = hom_poisson_gate(p);
  gate.append(operator_gate(p, beta, OperatorParams{OperatorKind::averaging, 0, 0}, "beta is not an averaging operator"));
  auto twist = [&](const BilinearProduct& m) {
    return derive(p, [&](const Sparse& x, const Sparse& y) { return mul(m, map(beta, x), y); });
  };
  GradedAlgebra out = p.with_mu(twist(p.mu())).with_bracket(twist(p.bracket())).with_alpha(beta);
  return finish(std::move(out), std::move(gate));
}

ConstructionResult averaging_twist_power(const GradedAlgebra& p, const EvenLinearMap& beta, unsigned power) {
  if (beta.dim() != p.dim()) throw Error(ErrorKind::shape, "beta has the wrong dimension");
  if (!beta.matrix().inverse()) throw Error(ErrorKind::inversion, "beta must be bijective");
  Report gate = hom_poisson_gate(p);
  gate.append(operator_gate(p, beta, OperatorParams{OperatorKind::averaging, power, 0},
                            "beta is not an alpha^" + std::to_string(power) + "-averaging operator"));
  const Matrix alpha_k = p.alpha().matrix().power(power);
  auto twist = [&](const BilinearProduct& m) {
    return derive(p, [&](const Sparse& x, const Sparse& y) { return mul(m, map(beta, x), map(alpha_k, y)); });
  };
  GradedAlgebra out = p.with_mu(twist(p.mu())).with_bracket(twist(p.bracket()));
  return finish_with_morphism(std::move(out), std::move(gate), beta, p, true);
}

ConstructionResult nijenhuis_twist(const GradedAlgebra& p, const EvenLinearMap& n) {
  Report gate = hom_poisson_gate(p);
  gate.append(operator_gate(p, n, OperatorParams{OperatorKind::nijenhuis, 0, 0}, "N is not a Nijenhuis operator"));
  auto deform = [&](const BilinearProduct& m) {
    return derive(p, [&](const Sparse& x, const Sparse& y) {
      return mul(m, map(n, x), y) + mul(m, x, map(n, y)) - map(n, mul(m, x, y));
    });
  };
  GradedAlgebra out = p.with_mu(deform(p.mu())).with_bracket(deform(p.bracket()));
  return finish_with_morphism(std::move(out), std::move(gate), n, p, true);
}

ConstructionResult rota_baxter_twist(const GradedAlgebra& p, const EvenLinearMap& r, const Scalar& weight) {
  Report gate = hom_poisson_gate(p);
  gate.append(operator_gate(p, r, OperatorParams{OperatorKind::rota_baxter, 0, weight},
                            "R is not a Rota-Baxter operator of weight " + to_string(weight)));
  auto deform = [&](const BilinearProduct& m) {
    return derive(p, [&](const Sparse& x, const Sparse& y) {
      Sparse v = mul(m, map(r, x), y) + mul(m, x, map(r, y));
      return axpy(v, weight, mul(m, x, y));
    });
  };
  GradedAlgebra out = p.with_mu(deform(p.mu())).with_bracket(deform(p.bracket()));
  return finish_with_morphism(std::move(out), std::move(gate), r, p, true);
}

ConstructionResult tensor_with_commutative(const GradedAlgebra& a, const GradedAlgebra& p) {
  if (!(a.group() == p.group())) throw Error(ErrorKind::incompatible, "tensor factors are graded by different groups");
  if (!(a.epsilon() == p.epsilon())) {
    throw Error(ErrorKind::incompatible, "tensor factors use different commutation factors");
  }
  Report gate = check_hom_associative(a);
  gate.append(check_epsilon_commutative(a));
  require_gate("left factor is not a commutative Hom-associative color algebra", gate);
  gate.append(hom_poisson_gate(p));

  const std::size_t da = a.dim(), dp = p.dim(), n = da * dp;
  const GroupSpec& g = p.group();
  std::vector<GroupElement> degrees;
  degrees.reserve(n);
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t q = 0; q < dp; ++q) degrees.push_back(g.add(a.basis().degree(i), p.basis().degree(q)));
  }
  GradedBasis basis(g, std::move(degrees));

  const auto& ma = a.mu();
  auto combine = [&](const BilinearProduct& mp) {
    BilinearProduct out(n);
    for (std::size_t i = 0; i < da; ++i) {
      for (std::size_t x = 0; x < dp; ++x) {
        for (std::size_t j = 0; j < da; ++j) {
          // eps(|x|, |b|) with x from P and b from A.
          const Scalar& sign = p.epsilon().at(p.basis().degree_index(x), a.basis().degree_index(j));
          for (std::size_t y = 0; y < dp; ++y) {
            for (const auto& ta : ma.terms(i, j)) {
              for (const auto& tp : mp.terms(x, y)) {
                out.add(i * dp + x, j * dp + y, ta.k * dp + tp.k, sign * ta.c * tp.c);
              }
            }
          }
        }
      }
    }
    return out;
  };

  Matrix alpha(n);
  const Matrix& aa = a.alpha().matrix();
  const Matrix& ap = p.alpha().matrix();
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t x = 0; x < dp; ++x) {
      for (std::size_t j = 0; j < da; ++j) {
        for (std::size_t y = 0; y < dp; ++y) alpha(i * dp + x, j * dp + y) = aa(i, j) * ap(x, y);
      }
    }
  }

  GradedAlgebra out(basis, p.epsilon(), combine(p.mu()), combine(p.bracket()), EvenLinearMap(basis, alpha));
  return finish(std::move(out), std::move(gate));
}

}  // namespace algcheck
