#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "soliton_forge/catalog.hpp"
#include "soliton_forge/geometry.hpp"
#include "soliton_forge/rng.hpp"

using namespace sforge;

namespace {

const Matrix kExample1Metric = Matrix::from_rows(
    {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}});
const Matrix kExample2Metric = Matrix::from_rows(
    {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});

// g3.1+g1 in the orthonormalized basis of the soliton example:
// the only bracket is [v2, v3] = -v1, with Gram matrix diag(1,1,-1,-1)
LieAlgebra example1_orthonormal_algebra() {
  LieAlgebra g(4, "g3.1+g1 (orthonormal basis)");
  g.set_bracket(1, 2, {-1, 0, 0, 0});
  return g;
}

const Matrix kRicciGolden = Matrix::diagonal(
    {make_rational(-1, 2), make_rational(1, 2), make_rational(1, 2), 0});

void check_connection_axioms(const LieAlgebra& g, const InnerProduct& ip, const Connection& c) {
  const std::size_t n = g.dim();
  // torsion-free: Gamma_ij^k - Gamma_ji^k = c_ij^k
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::vector<Rational> br = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        CHECK(c.gamma(i, j, k) - c.gamma(j, i, k) == br[k]);
    }
  // metric compatibility: <nabla_i e_j, e_k> + <e_j, nabla_i e_k> = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s;
        for (std::size_t m = 0; m < n; ++m)
          s += c.gamma(i, j, m) * ip.gram()(m, k) + c.gamma(i, k, m) * ip.gram()(j, m);
        CHECK(s == 0);
      }
}

void check_curvature_identities(const LieAlgebra& g, const CurvatureTensor& ct) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) CHECK(ct.at(i, j) == -ct.at(j, i));
  // first Bianchi identity on basis triples
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Matrix sum(n, 1);
        for (std::size_t m = 0; m < n; ++m)
          sum(m, 0) = ct.at(i, j)(m, k) + ct.at(j, k)(m, i) + ct.at(k, i)(m, j);
        CHECK(sum.is_zero());
      }
}

// Characteristic polynomial by the Faddeev-LeVerrier recurrence; exact in
// rationals and independent of the conjugation code under test.
std::vector<Rational> char_poly(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> coeffs(n + 1);
  coeffs[0] = 1;
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational ck = -mk.trace() / Rational(static_cast<long>(k));
    coeffs[k] = ck;
    if (k < n) mk = m * (mk + ck * Matrix::identity(n));
  }
  return coeffs;
}

}  // namespace

TEST_CASE("abelian algebra has a vanishing connection for any metric", "[geometry]") {
  const LieAlgebra g = catalog_get({Family::FourG1, {}, {}});
  SplitMix64 rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const InnerProduct ip(random_symmetric_nondegenerate(rng, 4));
    const Connection c = levi_civita(g, ip);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c.nabla(i).is_zero());
    CHECK(is_flat(curvature(g, c)));
    CHECK(ricci(g, ip, curvature(g, c)).ricci_op.is_zero());
  }
}

TEST_CASE("soliton example connection in the orthonormal basis", "[geometry]") {
  const LieAlgebra g = example1_orthonormal_algebra();
  const InnerProduct ip(Matrix::diagonal({1, 1, -1, -1}));
  const Connection c = levi_civita(g, ip);

  const Rational neg_half = make_rational(-1, 2);
  CHECK(c.gamma(0, 1, 2) == neg_half);  // nabla_{v1} v2 = -1/2 v3
  CHECK(c.gamma(1, 2, 0) == neg_half);  // nabla_{v2} v3 = -1/2 v1
  CHECK(c.gamma(0, 2, 1) == neg_half);  // nabla_{v1} v3 = -1/2 v2
  CHECK(c.gamma(2, 1, 0) == make_rational(1, 2));
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(c.gamma(0, 3, k) == 0);  // nabla_{v1} v4 = 0
    CHECK(c.gamma(3, 3, k) == 0);
  }
  check_connection_axioms(g, ip, c);

  const CurvatureTensor ct = curvature(g, c);
  CHECK_FALSE(is_flat(ct));
  CHECK(ricci(g, ip, ct).ricci_op == kRicciGolden);
}

TEST_CASE("soliton example in the original basis", "[geometry]") {
  const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
  const InnerProduct ip(kExample1Metric);
  CHECK(ip.signature() == Signature{2, 2});
  const Connection c = levi_civita(g, ip);
  check_connection_axioms(g, ip, c);
  const CurvatureTensor ct = curvature(g, c);
  check_curvature_identities(g, ct);
  const RicciData rd = ricci(g, ip, ct);
  CHECK(rd.ricci_op == kRicciGolden);
  CHECK(rd.ric == ip.gram() * rd.ricci_op);
  CHECK(rd.ric.is_symmetric());
}

TEST_CASE("flat example: curvature vanishes identically", "[geometry]") {
  const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
  const InnerProduct ip(kExample2Metric);
  CHECK(ip.signature() == Signature{2, 2});
  const Connection c = levi_civita(g, ip);
  check_connection_axioms(g, ip, c);
  const CurvatureTensor ct = curvature(g, c);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(ct.at(i, j).is_zero());
  CHECK(is_flat(ct));
  CHECK(ricci(g, ip, ct).ricci_op.is_zero());
}

TEST_CASE("orthonormal fast paths agree with the Koszul route", "[geometry]") {
  const std::array metrics = {Matrix::diagonal({1, 1, 1, 1}), Matrix::diagonal({1, 1, 1, -1}),
                              Matrix::diagonal({1, 1, -1, -1})};
  for (const auto& info : catalog_families()) {
    CatalogId id{info.family, {}, {}};
    if (info.has_alpha) id.alpha = make_rational(1, 2);
    if (info.has_beta) id.beta = 1;
    const LieAlgebra g = catalog_get(id);
    for (const Matrix& gm : metrics) {
      const InnerProduct ip(gm);
      const Connection general = levi_civita(g, ip);
      const Connection fast = levi_civita_orthonormal(g, ip);
      CHECK(general == fast);
      const CurvatureTensor ct = curvature(g, general);
      CHECK(ricci_orthonormal(g, ip, ct).ricci_op == ricci(g, ip, ct).ricci_op);
    }
  }
}

TEST_CASE("orthonormal fast paths reject non-unit metrics", "[geometry]") {
  const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
  const InnerProduct ip(kExample1Metric);  // signature (2,2) but not diagonal
  CHECK_THROWS_AS(levi_civita_orthonormal(g, ip), NotOrthonormalError);
  const InnerProduct scaled(Matrix::diagonal({2, 1, 1, 1}));
  CHECK_THROWS_AS(levi_civita_orthonormal(g, scaled), NotOrthonormalError);
  const CurvatureTensor ct = curvature(g, levi_civita(g, ip));
  CHECK_THROWS_AS(ricci_orthonormal(g, ip, ct), NotOrthonormalError);
}

TEST_CASE("example 1 fast path equals the general path exactly", "[geometry]") {
  const LieAlgebra g = example1_orthonormal_algebra();
  const InnerProduct ip(Matrix::diagonal({1, 1, -1, -1}));
  const Connection fast = levi_civita_orthonormal(g, ip);
  CHECK(fast == levi_civita(g, ip));
  const CurvatureTensor ct = curvature(g, fast);
  CHECK(ricci_orthonormal(g, ip, ct).ricci_op == kRicciGolden);
}

TEST_CASE("connection axioms hold on random metrics across the catalog", "[geometry]") {
  SplitMix64 rng(23);
  for (Family f : {Family::TwoG21, Family::G36PlusG1, Family::G44, Family::G410}) {
    const LieAlgebra g = catalog_get({f, {}, {}});
    for (int trial = 0; trial < 3; ++trial) {
      const InnerProduct ip(random_symmetric_nondegenerate(rng, 4));
      const Connection c = levi_civita(g, ip);
      check_connection_axioms(g, ip, c);
      const CurvatureTensor ct = curvature(g, c);
      check_curvature_identities(g, ct);
      const RicciData rd = ricci(g, ip, ct);
      CHECK(rd.ric.is_symmetric());
      CHECK(rd.ricci_op.transpose() * ip.gram() == ip.gram() * rd.ricci_op);
      CHECK(rd.ric == ip.gram() * rd.ricci_op);
    }
  }
}

TEST_CASE("self-adjointness shape check", "[geometry]") {
  // diagonal Ricci operators satisfy the displayed patterns trivially
  const InnerProduct g22(Matrix::diagonal({1, 1, -1, -1}));
  CHECK(self_adjoint_shape_check(kRicciGolden, g22).ok());

  SplitMix64 rng(29);
  const Matrix sym = [&] {
    Matrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i; j < 4; ++j) m(i, j) = m(j, i) = random_rational(rng);
    return m;
  }();
  CHECK(self_adjoint_shape_check(sym, InnerProduct(Matrix::identity(4))).ok());

  // (3,1) pattern forces R41 = -R14
  Matrix bad(4, 4);
  bad(0, 3) = 1;
  bad(3, 0) = 1;
  const auto report = self_adjoint_shape_check(bad, InnerProduct(Matrix::diagonal({1, 1, 1, -1})));
  CHECK_FALSE(report.self_adjoint);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].row == 3);
  CHECK(report.violations[0].col == 0);
  CHECK(report.violations[0].relation == "R41 = -R14");
}

TEST_CASE("conjugate_ricci preserves the eigenstructure", "[geometry]") {
  CHECK(conjugate_ricci(kRicciGolden, Matrix::identity(4)) == kRicciGolden);

  // rational form of the transition matrix from the soliton example
  const Matrix a = Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, -1, 0}, {0, 0, 0, 1}});
  CHECK(conjugate_ricci(kRicciGolden, a) == kRicciGolden);

  SplitMix64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_matrix(rng, 4, 4);
    const Matrix p = random_invertible(rng, 4);
    const Matrix conj = conjugate_ricci(m, p);
    CHECK(conj.trace() == m.trace());
    CHECK(determinant(conj) == determinant(m));
    CHECK(char_poly(conj) == char_poly(m));
  }
  CHECK_THROWS_AS(conjugate_ricci(kRicciGolden, Matrix(4, 4)), SingularMatrixError);
}

TEST_CASE("Ricci computation is basis-covariant", "[geometry]") {
  SplitMix64 rng(37);
  const LieAlgebra g = catalog_get({Family::G47, {}, {}});
  const InnerProduct ip(Matrix::diagonal({1, 1, 1, -1}));
  const RicciData base = ricci(g, ip, curvature(g, levi_civita(g, ip)));
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_invertible(rng, 4);
    const LieAlgebra h = g.change_basis(a);
    const InnerProduct ip2(a.transpose() * ip.gram() * a);
    const RicciData moved = ricci(h, ip2, curvature(h, levi_civita(h, ip2)));
    CHECK(moved.ricci_op == conjugate_ricci(base.ricci_op, a));
  }
}

TEST_CASE("flatness is basis-invariant", "[geometry]") {
  SplitMix64 rng(41);
  const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
  for (const Matrix& gm : {kExample1Metric, kExample2Metric}) {
    const InnerProduct ip(gm);
    const bool flat = is_flat(curvature(g, levi_civita(g, ip)));
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = random_invertible(rng, 4);
      const LieAlgebra h = g.change_basis(a);
      const InnerProduct ip2(a.transpose() * gm * a);
      CHECK(is_flat(curvature(h, levi_civita(h, ip2))) == flat);
    }
  }
}

TEST_CASE("degenerate metrics are rejected at construction", "[geometry]") {
  Matrix degenerate(4, 4);
  degenerate(0, 0) = 1;
  degenerate(1, 1) = 1;
  degenerate(2, 2) = 1;
  CHECK_THROWS_AS(InnerProduct(degenerate), DegenerateFormError);
  Matrix asym = Matrix::identity(4);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(InnerProduct(asym), NotSymmetricError);
}
