#include <catch2/catch_amalgamated.hpp>

#include "soliton_forge/catalog.hpp"

using namespace sforge;

namespace {

std::vector<Rational> vec4(int a, int b, int c, int d) {
  return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

}  // namespace

TEST_CASE("catalog lists exactly the 24 table rows", "[catalog]") {
  CHECK(catalog_families().size() == 24);
  // a couple of spot ids, in table order
  CHECK(catalog_families().front().id == "4g1");
  CHECK(catalog_families().back().id == "g4.10");
}

TEST_CASE("catalog brackets match the tables", "[catalog]") {
  const LieAlgebra g21 = catalog_get({Family::G21Plus2G1, {}, {}});
  CHECK(g21.bracket_basis(0, 1) == vec4(1, 0, 0, 0));  // [e1,e2] = e1
  CHECK(g21.stored().size() == 1);

  const LieAlgebra g32 = catalog_get({Family::G32PlusG1, {}, {}});
  CHECK(g32.bracket_basis(1, 2) == vec4(1, -1, 0, 0));  // [e2,e3] = e1 - e2
  CHECK(g32.bracket_basis(2, 0) == vec4(1, 0, 0, 0));   // [e3,e1] = e1

  // g4.8^alpha at alpha = 1/2: [e1,e4] = (3/2)e1, [e3,e4] = (1/2)e3
  const LieAlgebra g48 = catalog_get({Family::G48Alpha, make_rational(1, 2), {}});
  std::vector<Rational> e1_scaled(4);
  e1_scaled[0] = make_rational(3, 2);
  CHECK(g48.bracket_basis(0, 3) == e1_scaled);
  CHECK(g48.bracket_basis(1, 3) == vec4(0, 1, 0, 0));
  std::vector<Rational> e3_half(4);
  e3_half[2] = make_rational(1, 2);
  CHECK(g48.bracket_basis(2, 3) == e3_half);
  CHECK(g48.bracket_basis(1, 2) == vec4(1, 0, 0, 0));

  // g4.8^-1 has no [e1,e4] bracket, unlike the alpha family
  const LieAlgebra g48m = catalog_get({Family::G48MinusOne, {}, {}});
  CHECK(g48m.bracket_basis(0, 3) == vec4(0, 0, 0, 0));
  CHECK(g48m.bracket_basis(2, 3) == vec4(0, 0, -1, 0));
}

TEST_CASE("parameter ranges are enforced exactly as the tables state", "[catalog]") {
  // g4.5 needs alpha*beta != 0 on the main branch
  CHECK_THROWS_AS(catalog_get({Family::G45AlphaBeta, Rational(0), Rational(1)}),
                  ParamOutOfRangeError);
  CHECK_THROWS_WITH(catalog_get({Family::G46AlphaBeta, Rational(0), Rational(1)}),
                    Catch::Matchers::ContainsSubstring("alpha > 0"));

  CHECK_THROWS_AS(catalog_get({Family::G34AlphaPlusG1, Rational(1), {}}), ParamOutOfRangeError);
  CHECK_THROWS_AS(catalog_get({Family::G34AlphaPlusG1, Rational(-2), {}}), ParamOutOfRangeError);
  CHECK_THROWS_AS(catalog_get({Family::G42Alpha, Rational(0), {}}), ParamOutOfRangeError);
  CHECK_THROWS_AS(catalog_get({Family::G48Alpha, Rational(-1), {}}), ParamOutOfRangeError);
  CHECK_THROWS_AS(catalog_get({Family::G48Alpha, Rational(2), {}}), ParamOutOfRangeError);
  CHECK_THROWS_AS(catalog_get({Family::G49Alpha, Rational(0), {}}), ParamOutOfRangeError);

  // missing / surplus parameters
  CHECK_THROWS_AS(catalog_get({Family::G42Alpha, {}, {}}), ParamOutOfRangeError);
  CHECK_THROWS_AS(catalog_get({Family::G47, Rational(1), {}}), ParamOutOfRangeError);

  // valid boundary points
  CHECK_NOTHROW(catalog_get({Family::G48Alpha, Rational(1), {}}));
  CHECK_NOTHROW(catalog_get({Family::G45AlphaBeta, Rational(-1), make_rational(1, 2)}));
  CHECK_NOTHROW(catalog_get({Family::G45AlphaBeta, make_rational(-1, 2), Rational(1)}));
  CHECK_NOTHROW(catalog_get({Family::G46AlphaBeta, Rational(3), Rational(0)}));
  CHECK_NOTHROW(catalog_get({Family::G46AlphaBeta, Rational(3), Rational(-7)}));
}

TEST_CASE("family ids parse in ASCII and unicode spellings", "[catalog]") {
  CHECK(family_from_string("g3.1+g1") == Family::G31PlusG1);
  CHECK(family_from_string("g3.1⊕g1") == Family::G31PlusG1);
  CHECK(family_from_string("g4.5^α,β") == Family::G45AlphaBeta);
  CHECK(family_from_string("g4.8^-1") == Family::G48MinusOne);
  CHECK(family_from_string("4g1") == Family::FourG1);
  CHECK_THROWS_AS(family_from_string("g9.9"), UnknownFamilyError);
}

TEST_CASE("catalog labels carry the parameters", "[catalog]") {
  CHECK(catalog_label({Family::G45AlphaBeta, make_rational(1, 2), Rational(1)}) ==
        "g4.5^a,b a=1/2 b=1");
  CHECK(catalog_label({Family::G47, {}, {}}) == "g4.7");
}
