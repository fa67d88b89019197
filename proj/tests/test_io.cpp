#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "soliton_forge/analysis.hpp"
#include "soliton_forge/io.hpp"

using namespace sforge;

TEST_CASE("algebra files parse with 1-based indices and i < j", "[io]") {
  const json j = json::parse(R"({
    "dim": 4,
    "name": "g3.1+g1",
    "brackets": [ {"i": 2, "j": 3, "coeffs": {"1": "1"}} ]
  })");
  const LieAlgebra g = algebra_from_json(j, "test");
  CHECK(g.dim() == 4);
  CHECK(g.name() == "g3.1+g1");
  std::vector<Rational> e1(4);
  e1[0] = 1;
  CHECK(g.bracket_basis(1, 2) == e1);

  // round trip
  const LieAlgebra g2 = algebra_from_json(algebra_to_json(g), "roundtrip");
  CHECK(g2.stored() == g.stored());
}

TEST_CASE("algebra files reject structural mistakes", "[io]") {
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"brackets": []})"), "t"), ParseError);
  CHECK_THROWS_AS(
      algebra_from_json(
          json::parse(R"({"dim": 4, "brackets": [{"i": 3, "j": 2, "coeffs": {}}]})"), "t"),
      ParseError);  // i >= j
  CHECK_THROWS_AS(
      algebra_from_json(
          json::parse(R"({"dim": 4, "brackets": [{"i": 1, "j": 5, "coeffs": {}}]})"), "t"),
      ParseError);  // out of range
  CHECK_THROWS_AS(
      algebra_from_json(
          json::parse(R"({"dim": 4, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": "x"}}]})"),
          "t"),
      ParseError);  // bad rational
  CHECK_THROWS_AS(
      algebra_from_json(
          json::parse(R"({"dim": 4, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": 0.5}}]})"),
          "t"),
      ParseError);  // floats are not rationals
}

TEST_CASE("metric files are validated symmetric on load", "[io]") {
  const json good = json::parse(R"({"g": [["1","0"],["0","-1"]]})");
  const Matrix m = metric_from_json(good, "test");
  CHECK(m(1, 1) == -1);

  const json skew = json::parse(R"({"g": [["1","2"],["3","1"]]})");
  CHECK_THROWS_AS(metric_from_json(skew, "test"), ValidationError);
  CHECK_THROWS_AS(metric_from_json(json::parse(R"({"g": [["1","0"]]})"), "test"),
                  ValidationError);
  CHECK_THROWS_AS(metric_from_json(json::parse(R"({})"), "test"), ParseError);
}

TEST_CASE("matrix json round-trips rationals as strings", "[io]") {
  Matrix m(2, 2);
  m(0, 0) = make_rational(-3, 2);
  m(1, 0) = 7;
  const json j = matrix_to_json(m);
  CHECK(j[0][0] == "-3/2");
  CHECK(matrix_from_json(j, "t") == m);
}

TEST_CASE("cross-validation reports serialize with the documented schema", "[io]") {
  const CatalogId id{Family::G45AlphaBeta, make_rational(1, 2), Rational(1)};
  CrossValidationReport report;
  report.id = id;
  report.samples = 3;
  report.agreements = 2;
  Discrepancy d;
  d.sample_index = 1;
  d.r = Matrix::identity(4);
  d.predicate = true;
  d.solver = SolitonResult::Verdict::NotSoliton;
  report.discrepancies.push_back(d);

  const json j = report_to_json(report);
  CHECK(j["algebra"] == "g4.5^a,b");
  CHECK(j["params"]["alpha"] == "1/2");
  CHECK(j["params"]["beta"] == "1");
  CHECK(j["samples"] == 3);
  CHECK(j["agreements"] == 2);
  REQUIRE(j["discrepancies"].size() == 1);
  CHECK(j["discrepancies"][0]["predicate"] == true);
  CHECK(j["discrepancies"][0]["solver"] == "NotSoliton");
  CHECK(j["discrepancies"][0]["R"][0][0] == "1");
}

TEST_CASE("analysis report text is deterministic and float-free", "[io]") {
  const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
  const InnerProduct ip(Matrix::from_rows(
      {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
  const CatalogId id{Family::G31PlusG1, {}, {}};
  std::ostringstream out1, out2;
  render_text(analyze(g, ip, id), out1);
  render_text(analyze(g, ip, id), out2);
  CHECK(out1.str() == out2.str());
  CHECK(out1.str().find("eta = 3/2") != std::string::npos);
  CHECK(out1.str().find("signature: (2,2)") != std::string::npos);
  // exact rational formatting, never decimal
  CHECK(out1.str().find("-1/2") != std::string::npos);
  CHECK(out1.str().find("0.5") == std::string::npos);
  CHECK(out1.str().find("1.5") == std::string::npos);
}

TEST_CASE("the pipeline is dimension-generic", "[io]") {
  // 3-dimensional Heisenberg algebra through the same code paths
  const json j = json::parse(R"({
    "dim": 3, "name": "heis3",
    "brackets": [ {"i": 1, "j": 2, "coeffs": {"3": "1"}} ]
  })");
  const LieAlgebra g = algebra_from_json(j, "t");
  const InnerProduct ip(Matrix::diagonal({1, 1, -1}));
  const AnalysisReport rep = analyze(g, ip);
  CHECK(rep.dim == 3);
  CHECK(rep.signature == Signature{2, 1});
  CHECK_FALSE(rep.flat);
  CHECK(rep.self_adjoint.self_adjoint);
  CHECK(rep.ric == ip.gram() * rep.ricci_op);
  // nilpotent, so a soliton verdict either way must decompose exactly
  if (rep.soliton.verdict == SolitonResult::Verdict::Soliton)
    CHECK(rep.ricci_op == *rep.soliton.eta * Matrix::identity(3) + *rep.soliton.d);
}

TEST_CASE("analyze rejects non-Lie bracket tables with the failing triples", "[io]") {
  LieAlgebra g(4, "broken");
  g.set_bracket(1, 2, {1, 0, 0, 0});
  g.set_bracket(0, 2, {0, -1, 0, 0});
  g.set_bracket(0, 1, {1, 0, 1, 0});
  const InnerProduct ip(Matrix::identity(4));
  CHECK_THROWS_WITH(analyze(g, ip),
                    Catch::Matchers::ContainsSubstring("(1,2,3)"));
}
