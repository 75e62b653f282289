// Copyright 2026 The algcheck Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <functional>

#include "algcheck/axioms.hpp"
#include "algcheck/constructions.hpp"
#include "algcheck/document.hpp"
#include "algcheck/fixtures.hpp"
#include "test_util.hpp"

namespace algcheck {
namespace {

using nlohmann::json;

json fixture_json(const std::string& name) { return json::parse(serialize_document(fixture(name))); }

struct Diagnostic {
  std::string code;
  std::string location;
};

Diagnostic diagnose(std::string_view text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::parse);
    return {e.code(), e.location()};
  }
  ADD_FAILURE() << "document parsed";
  return {};
}

Diagnostic diagnose_mutation(const std::string& name, const std::function<void(json&)>& mutate) {
  json j = fixture_json(name);
  mutate(j);
  return diagnose(j.dump());
}

#define EXPECT_DIAGNOSTIC(d, c, loc) \
  do {                               \
    const Diagnostic got = (d);      \
    EXPECT_EQ(got.code, c);          \
    EXPECT_EQ(got.location, loc);    \
  } while (0)

TEST(DocumentRoundTrip, EveryFixture) {
  for (const auto& name : fixture_names()) {
    const AlgebraDocument d = fixture(name);
    const std::string text = serialize_document(d);
    const AlgebraDocument back = parse_document(text);
    EXPECT_EQ(back, d) << name;
    EXPECT_EQ(serialize_document(back), text) << name;
  }
}

TEST(DocumentRoundTrip, ConstructionOutputs) {
  const AlgebraDocument z2sq = fixture("z2sq");
  AlgebraDocument d{"delta", multiplier_twist_delta(z2sq.algebra, z2sq.multipliers.at("sigma_asym")).algebra, {}, {},
                    json::object()};
  EXPECT_EQ(parse_document(serialize_document(d)), d);
  d.algebra = tensor_with_commutative(fixture("dual2").algebra, fixture("example3").algebra).algebra;
  EXPECT_EQ(parse_document(serialize_document(d)), d);
}

TEST(DocumentRoundTrip, CommittedFixturesAreCurrent) {
  for (const auto& name : fixture_names()) {
    EXPECT_EQ(testing::read_file(testing::fixture_path(name)), serialize_document(fixture(name))) << name;
    EXPECT_EQ(load_document(testing::fixture_path(name)), fixture(name)) << name;
  }
}

TEST(DocumentFormat, RationalsAreStringsAndIndicesIntegers) {
  const AlgebraDocument p = fixture("rb2_polarized");
  AlgebraDocument d{"rb", rota_baxter_twist(p.algebra, EvenLinearMap(p.algebra.basis(), p.operators.at("R")), 1).algebra,
                    {}, {}, json::object()};
  const json j = json::parse(serialize_document(d));
  EXPECT_EQ(j["products"]["mu"][0], json::parse(R"([0, 0, 0, "1"])"));
  EXPECT_EQ(j["alpha"][0][0], "1");
  EXPECT_FALSE(j.contains("operators"));
  EXPECT_FALSE(j.contains("multipliers"));
}

TEST(DocumentFormat, OptionalFieldsAndIntegerScalars) {
  json j = fixture_json("rb2");
  j.erase("alpha");
  j.erase("name");
  j["products"]["mu"][0][3] = -1;
  const AlgebraDocument d = parse_document(j.dump());
  EXPECT_TRUE(d.algebra.alpha().matrix().is_identity());
  EXPECT_EQ(d.algebra.mu(), fixture("rb2").algebra.mu());
}

TEST(DocumentFormat, TableEpsilonRoundTrips) {
  json j = fixture_json("z2sq");
  const json table = json::parse(R"([["1","1","1","1"],["1","-1","1","-1"],["1","1","-1","-1"],["1","-1","-1","1"]])");
  j["epsilon"] = json{{"table", table}};
  const AlgebraDocument d = parse_document(j.dump());
  EXPECT_EQ(d.algebra.epsilon().sign_form(), nullptr);
  EXPECT_EQ(json::parse(serialize_document(d))["epsilon"]["table"], table);
}

TEST(DocumentDiagnostics, Json) {
  EXPECT_DIAGNOSTIC(diagnose("{\n  \"group\": {\"moduli\": [2]},\n  \"degrees\": [[0]\n"), "E-JSON", "line 4, column 1");
  EXPECT_EQ(diagnose("").code, "E-JSON");
  EXPECT_EQ(diagnose("[1, 2]").code, "E-SCHEMA");
}

TEST(DocumentDiagnostics, Schema) {
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j.erase("degrees"); }), "E-SCHEMA", "/degrees");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["extra"] = 1; }), "E-SCHEMA", "/extra");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["pi"] = json::array(); }), "E-SCHEMA",
                    "/products/pi");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["mu"].push_back(j["products"]["mu"][1]); }),
                    "E-SCHEMA", "/products/mu/4");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["mu"][2] = json::parse("[1, 0, 1]"); }),
                    "E-SCHEMA", "/products/mu/2");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["degrees"] = 3; }), "E-SCHEMA", "/degrees");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["degrees"][1][0] = "1"; }), "E-SCHEMA", "/degrees/1/0");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["epsilon"]["table"] = json::array(); }), "E-SCHEMA",
                    "/epsilon");
}

TEST(DocumentDiagnostics, Rational) {
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["mu"][0][3] = 0.5; }), "E-RATIONAL",
                    "/products/mu/0/3");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["alpha"][1][1] = "one"; }), "E-RATIONAL", "/alpha/1/1");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["mu"][0][3] = "1/0"; }),
                    "E-ZERO-DENOMINATOR", "/products/mu/0/3");
}

TEST(DocumentDiagnostics, DegreesAndShapes) {
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["degrees"][1][0] = 2; }), "E-DEGREE", "/degrees/1/0");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["degrees"][1] = json::parse("[0, 1]"); }), "E-SHAPE",
                    "/degrees/1");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["degrees"] = json::array(); }), "E-SHAPE", "/degrees");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["mu"][3][2] = 2; }), "E-SHAPE",
                    "/products/mu/3/2");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["alpha"].erase(1); }), "E-SHAPE", "/alpha");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"] = json::object(); }), "E-SHAPE", "/products");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["operators"]["R"][0].erase(0); }), "E-SHAPE",
                    "/operators/R/0");
}

TEST(DocumentDiagnostics, Evenness) {
  // e1 e1 = e2 would land in degree 1 while deg e1 + deg e1 = 0.
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["products"]["mu"][0] = json::parse(R"([0, 0, 1, "1"])"); }),
                    "E-EVENNESS", "/products/mu/0");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["alpha"][0][1] = "1"; }), "E-EVENNESS", "/alpha/0/1");
}

TEST(DocumentDiagnostics, GroupBicharacterMultiplier) {
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["group"]["moduli"][0] = 0; }), "E-GROUP",
                    "/group/moduli/0");
  EXPECT_DIAGNOSTIC(diagnose_mutation("rb2", [](json& j) { j["group"]["moduli"][0] = 3; }), "E-BICHARACTER",
                    "/epsilon/matrix");
  EXPECT_DIAGNOSTIC(diagnose_mutation("z2sq", [](json& j) { j["multipliers"]["sigma_sym"][1][2] = "0"; }),
                    "E-MULTIPLIER", "/multipliers/sigma_sym/1/2");
}

TEST(DocumentDiagnostics, MissingFile) {
  try {
    load_document(testing::scratch_dir("doc") / "absent.json");
    FAIL();
  } catch (const DocumentError& e) {
    EXPECT_EQ(e.code(), "E-IO");
  }
}

TEST(ReportJson, Shape) {
  const Report r = check_hom_leibniz(example3_algebra(2, 1, false));
  const json j = to_json(r);
  EXPECT_FALSE(j["ok"].get<bool>());
  ASSERT_EQ(j["axioms"].size(), 1u);
  const json& s = j["axioms"][0];
  EXPECT_EQ(s["axiom"], "hom_leibniz");
  EXPECT_EQ(s["arity"], 3);
  EXPECT_EQ(s["checked"], 27);
  EXPECT_FALSE(s["holds"].get<bool>());
  EXPECT_EQ(s["violations"][0]["indices"], json::parse("[2, 1, 1]"));
  EXPECT_EQ(s["violations"][0]["lhs"], json::parse(R"(["0", "0", "0"])"));
  EXPECT_EQ(s["violations"][0]["rhs"], json::parse(R"(["0", "0", "-1"])"));
}

}  // namespace
}  // namespace algcheck
