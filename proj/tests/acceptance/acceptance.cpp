// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "algcheck/axioms.hpp"
#include "algcheck/constructions.hpp"
#include "algcheck/document.hpp"
#include "algcheck/fixtures.hpp"
#include "algcheck/operators.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace algcheck {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome&)>;

// 1. corrected example certifies, as-printed verdict matches the committed regression.
void fixture_certification(Outcome& o) {
  int runs = 0;
  for (const char* a : {"1", "2", "-3"}) {
    for (int e : {0, 1}) {
      ++runs;
      o.require(check_hom_poisson(example3_algebra(parse_scalar(a), e)).ok(),
                std::string("example a=") + a + " E=" + std::to_string(e));
    }
  }
  const Report printed = check_hom_poisson(example3_algebra(2, 1, false));
  o.require(!printed.ok(), "as-printed table should fail");
  const auto r = testing::cli({"report", testing::fixture_path("example3_as_printed").string(), "--json"});
  o.require(r.code == 1, "report exit code");
  o.require(r.out == testing::read_file(testing::source_dir() / "fixtures/regressions/example3_as_printed.json"),
            "regression file differs");
  o.detail << runs << " corrected variants certified; as-printed fails " << printed.violation_count()
           << " tuples (first " << printed.first_failure()->axiom << ")";
}

// 2. two-dimensional Rota-Baxter fixture.
void rota_baxter_fixtures(Outcome& o) {
  const GradedAlgebra a = fixture("rb2").algebra;
  o.require(check_hom_associative(a).ok(), "rb2 Hom-associative");
  for (const char* w : {"0", "1", "1/2"}) {
    const Scalar lambda = parse_scalar(w);
    const Matrix r = Matrix::scalar(2, -lambda);
    o.require(check_operator(a, OperatorClaim{EvenLinearMap(a.basis(), r), OperatorParams{OperatorKind::rota_baxter, 0,
                                                                                           lambda}})
                  .ok(),
              std::string("rota-baxter weight ") + w);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const Vector xy = apply_product(a.mu(), unit_vector(2, i), unit_vector(2, j));
        const Vector lhs = apply_product(a.mu(), r.apply(unit_vector(2, i)), r.apply(unit_vector(2, j)));
        Vector sq = xy, inner = xy;
        for (auto& c : sq) c *= lambda * lambda;
        for (auto& c : inner) c *= -lambda;
        o.require(lhs == sq && r.apply(inner) == sq, std::string("closure at weight ") + w);
      }
    }
  }
  o.detail << "weights 0, 1, 1/2 with R = -lambda id";
}

// 3. commutator polarization.
void commutator_polarization(Outcome& o) {
  int count = 0;
  for (const auto& name : fixture_names()) {
    const GradedAlgebra a = fixture(name).algebra;
    if (!a.has_mu() || !check_hom_associative(a).ok()) continue;
    ++count;
    o.require(check_hom_poisson(commutator_bracket(a)).ok(), name);
  }
  o.detail << count << " Hom-associative fixtures polarized";
}

// 4. every construction re-certifies on neutral and nontrivial parameters.
void recertification(Outcome& o) {
  struct Run {
    std::string label;
    std::function<ConstructionResult()> make;
  };
  const auto op = [](const std::string& fx, const std::string& name) {
    const AlgebraDocument d = fixture(fx);
    return EvenLinearMap(d.algebra.basis(), d.operators.at(name));
  };
  const auto alg = [](const std::string& fx) { return fixture(fx).algebra; };
  const AlgebraDocument z2sq = fixture("z2sq");
  const PairTable one = PairTable::constant(z2sq.algebra.group(), 1);
  const std::vector<Run> runs{
      {"xi unit1 e", [&] { return xi_twist(alg("unit1"), Vector{1}); }},
      {"xi pair4", [&] { return xi_twist(alg("pair4"), Vector{1, 0, 2, 0}); }},
      {"xi heis3", [&] { return xi_twist(alg("heis3"), Vector{0, 0, 5}); }},
      {"multiplier-sym 1", [&] { return multiplier_twist_symmetric(z2sq.algebra, one); }},
      {"multiplier-sym sigma_sym", [&] { return multiplier_twist_symmetric(z2sq.algebra, z2sq.multipliers.at("sigma_sym")); }},
      {"multiplier-delta 1", [&] { return multiplier_twist_delta(z2sq.algebra, one); }},
      {"multiplier-delta sigma_asym",
       [&] { return multiplier_twist_delta(z2sq.algebra, z2sq.multipliers.at("sigma_asym")); }},
      {"transport Id", [&] { return transport_along_bijection(alg("example3"), op("example3", "Id")); }},
      {"transport Swap12", [&] { return transport_along_bijection(alg("example3"), op("example3", "Swap12")); }},
      {"transport C2", [&] { return transport_along_bijection(alg("example3"), op("example3", "C2")); }},
      {"centroid Id", [&] { return centroid_twist(alg("example3"), op("example3", "Id")); }},
      {"centroid C2", [&] { return centroid_twist(alg("example3"), op("example3", "C2")); }},
      {"averaging-pair Id", [&] { return averaging_twist_pairwise(alg("yau4"), EvenLinearMap::identity(alg("yau4").basis())); }},
      {"averaging-pair Alpha", [&] { return averaging_twist_pairwise(alg("yau4"), op("yau4", "Alpha")); }},
      {"averaging-untwisted Id", [&] { return averaging_twist_untwisted(alg("pair4"), op("pair4", "Id")); }},
      {"averaging-untwisted Proj1", [&] { return averaging_twist_untwisted(alg("pair4"), op("pair4", "Proj1")); }},
      {"averaging-untwisted E", [&] { return averaging_twist_untwisted(alg("group_algebra_z2"), op("group_algebra_z2", "E")); }},
      {"averaging-power Id", [&] { return averaging_twist_power(alg("example3"), op("example3", "Id"), 0); }},
      {"averaging-power Alpha", [&] { return averaging_twist_power(alg("heis3"), op("heis3", "Alpha"), 1); }},
      {"nijenhuis Id", [&] { return nijenhuis_twist(alg("pair4"), op("pair4", "Id")); }},
      {"nijenhuis Nij", [&] { return nijenhuis_twist(alg("pair4"), op("pair4", "Nij")); }},
      {"rota-baxter 0", [&] { return rota_baxter_twist(alg("example3"), EvenLinearMap::zero(alg("example3").basis()), 1); }},
      {"rota-baxter R", [&] { return rota_baxter_twist(alg("rb2_polarized"), op("rb2_polarized", "R"), 1); }},
      {"rota-baxter R_half",
       [&] { return rota_baxter_twist(alg("example3"), op("example3", "R_half"), parse_scalar("1/2")); }},
      {"tensor unit1", [&] { return tensor_with_commutative(alg("unit1"), alg("example3")); }},
      {"tensor dual2", [&] { return tensor_with_commutative(alg("dual2"), alg("example3")); }},
  };
  std::vector<std::string> findings;
  for (const auto& run : runs) {
    try {
      const ConstructionResult r = run.make();
      const GradedAlgebra& out = r.algebra;
      // xi outputs carry mu only and are certified for Hom-associativity.
      const bool sweep = out.has_bracket() ? check_hom_poisson(out).ok() : check_hom_associative(out).ok();
      o.require(sweep && r.certification.ok(), run.label + " certification");
      if (r.morphism_binding) {
        o.require(r.morphism.ok(), run.label + " morphism");
      } else if (!r.morphism.ok()) {
        findings.push_back(run.label + " morphism clause fails at " + r.morphism.first_failure()->axiom);
      }
      const ConstructionResult again = run.make();
      o.require(again.algebra == out && again.morphism.violation_count() == r.morphism.violation_count(),
                run.label + " reproducible");
    } catch (const std::exception& e) {
      o.require(false, run.label + ": " + e.what());
    }
  }
  o.detail << runs.size() << " runs";
  for (const auto& f : findings) o.detail << "; finding: " << f;
}

// 5. multiplier machinery on Z2^2.
void multipliers(Outcome& o) {
  const AlgebraDocument z2sq = fixture("z2sq");
  const GroupSpec& g = z2sq.algebra.group();
  const MultiplierTable& asym = z2sq.multipliers.at("sigma_asym");
  const Report cocycle = validate_multiplier(g, asym, false);
  o.require(cocycle.ok() && cocycle.find("multiplier.cocycle")->checked == 64, "cocycle on 64 triples");
  o.require(!validate_multiplier(g, asym, true).ok(), "symmetry gate rejects sigma_asym");
  const PairTable delta = delta_from_multiplier(g, asym);
  int pairs = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      const auto x = g.element(a).coords, y = g.element(b).coords;
      const Scalar expected = ((x[0] * y[1] - x[1] * y[0]) % 2 == 0) ? 1 : -1;
      o.require(delta.at(a, b) == expected, "delta closed form");
      ++pairs;
    }
  }
  const MultiplierTable& sym = z2sq.multipliers.at("sigma_sym");
  o.require(validate_multiplier(g, sym, true).ok(), "sigma_sym symmetric gates");
  try {
    o.require(multiplier_twist_symmetric(z2sq.algebra, sym).certified(), "symmetric twist certifies");
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  o.detail << "cocycle 64/64, delta " << pairs << "/16 pairs";
}

// 6. structure-constant evaluation against the dense oracle.
void oracle_equivalence(Outcome& o) {
  std::mt19937 rng(2026);
  std::size_t tables = 0;
  for (const auto& name : fixture_names()) {
    const GradedAlgebra a = fixture(name).algebra;
    const oracle::Context ctx = oracle::context(a);
    std::vector<IdentityTable> ts;
    if (a.has_mu()) {
      ts.push_back(associativity_table(a));
      ts.push_back(hom_associativity_table(a));
      ts.push_back(epsilon_commutativity_table(a));
    }
    if (a.has_bracket()) {
      ts.push_back(skew_symmetry_table(a));
      ts.push_back(hom_jacobi_table(a));
    }
    if (a.has_mu() && a.has_bracket()) ts.push_back(hom_leibniz_table(a));
    for (const auto& t : ts) {
      ++tables;
      bool all_hold = true, agree = true;
      for (int s = 0; s < 100; ++s) {
        std::vector<Vector> args;
        for (std::size_t i = 0; i < t.arity; ++i) args.push_back(testing::random_vector(rng, a.dim()));
        const auto [l, r] = oracle::sides(t.axiom, ctx, args);
        agree = agree && t.contract_lhs(args) == l && t.contract_rhs(args) == r;
        all_hold = all_hold && l == r;
      }
      o.require(agree, name + " " + t.axiom + " evaluation");
      o.require(t.report().holds() == all_hold, name + " " + t.axiom + " verdict");
    }
  }
  o.detail << tables << " axiom tables x 100 samples";
}

// 7. CLI round trip.
void cli_round_trip(Outcome& o) {
  for (const auto& name : fixture_names()) {
    const std::string text = serialize_document(fixture(name));
    const AlgebraDocument back = parse_document(text);
    o.require(back == fixture(name) && serialize_document(back) == text, name + " fixpoint");
  }
  const auto dir = testing::scratch_dir("acceptance");
  const auto fx = [](const std::string& n) { return testing::fixture_path(n).string(); };
  const std::vector<std::vector<std::string>> twists{
      {fx("pair4"), "--construction", "xi", "--xi", "1,0,2,0"},
      {fx("z2sq"), "--construction", "multiplier-sym", "--multiplier", "sigma_sym"},
      {fx("z2sq"), "--construction", "multiplier-delta", "--multiplier", "sigma_asym"},
      {fx("example3"), "--construction", "transport", "--operator", "Swap12"},
      {fx("example3"), "--construction", "centroid", "--operator", "C2"},
      {fx("yau4"), "--construction", "averaging-pair", "--operator", "Alpha"},
      {fx("pair4"), "--construction", "averaging-untwisted", "--operator", "Proj1"},
      {fx("heis3"), "--construction", "averaging-power", "--operator", "Alpha", "--power", "1"},
      {fx("pair4"), "--construction", "nijenhuis", "--operator", "Nij"},
      {fx("rb2_polarized"), "--construction", "rota-baxter", "--operator", "R"},
      {fx("rb2"), "--construction", "xi", "--xi", "1,0"},
  };
  int written = 0;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    const std::string out = (dir / ("twist" + std::to_string(i) + ".json")).string();
    std::vector<std::string> args{"twist"};
    args.insert(args.end(), twists[i].begin(), twists[i].end());
    args.insert(args.end(), {"-o", out});
    if (testing::cli(args).code != 0) continue;
    ++written;
    o.require(testing::cli({"validate", out}).code == 0, "revalidate " + twists[i][2]);
  }
  const std::string t = (dir / "tensor.json").string();
  if (testing::cli({"tensor", fx("dual2"), fx("example3"), "-o", t}).code == 0) {
    ++written;
    o.require(testing::cli({"validate", t}).code == 0, "revalidate tensor");
  }
  o.require(written == 11, "expected 11 exit-0 outputs");
  o.detail << fixture_names().size() << " fixtures round-trip; " << written << " exit-0 outputs revalidated";
}

}  // namespace
}  // namespace algcheck

int main() {
  using namespace algcheck;
  const std::vector<std::pair<std::string, Criterion>> criteria{
      {"1 fixture certification", fixture_certification},
      {"2 rota-baxter fixtures", rota_baxter_fixtures},
      {"3 commutator polarization", commutator_polarization},
      {"4 construction re-certification", recertification},
      {"5 multiplier machinery", multipliers},
      {"6 oracle equivalence", oracle_equivalence},
      {"7 cli round trip", cli_round_trip},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail.str() << "\n";
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
