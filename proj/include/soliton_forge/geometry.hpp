#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "soliton_forge/errors.hpp"
#include "soliton_forge/lie_algebra.hpp"
#include "soliton_forge/linalg.hpp"
#include "soliton_forge/matrix.hpp"
#include "soliton_forge/rational.hpp"

namespace sforge {

/// A nondegenerate symmetric bilinear form. Degeneracy and asymmetry are
/// rejected here, at construction, so downstream solves never see them.
class InnerProduct {
 public:
  explicit InnerProduct(Matrix gram) : g_(std::move(gram)) {
    if (!g_.is_square()) throw DimensionMismatchError("inner product matrix must be square");
    if (!g_.is_symmetric()) throw NotSymmetricError("inner product matrix is not symmetric");
    sig_ = signature_of(g_);  // throws DegenerateFormError on rank < n
  }

  std::size_t dim() const { return g_.rows(); }
  const Matrix& gram() const { return g_; }
  Signature signature() const { return sig_; }

  Rational pair(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    Rational s;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        if (g_(i, j) != 0 && y[j] != 0) s += x[i] * g_(i, j) * y[j];
    }
    return s;
  }

  bool is_unit_diagonal() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        if (i == j && g_(i, i) != 1 && g_(i, i) != -1) return false;
        if (i != j && g_(i, j) != 0) return false;
      }
    return true;
  }

 private:
  Matrix g_;
  Signature sig_;
};

/// Christoffel data Gamma_ij^k with nabla_{e_i} e_j = sum_k Gamma_ij^k e_k.
class Connection {
 public:
  explicit Connection(std::size_t dim) : dim_(dim), gamma_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Rational& gamma(std::size_t i, std::size_t j, std::size_t k) {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }

  /// nabla_{e_i} as a matrix acting on basis coordinates (column j holds
  /// the coordinates of nabla_{e_i} e_j).
  Matrix nabla(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m(k, j) = gamma(i, j, k);
    return m;
  }

  friend bool operator==(const Connection& x, const Connection& y) {
    return x.dim_ == y.dim_ && x.gamma_ == y.gamma_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> gamma_;
};

/// Levi-Civita connection from the Koszul formula in an arbitrary basis:
/// for each pair (i,j) solve 2 G Gamma_ij = K_ij with
/// (K_ij)_k = <[e_i,e_j],e_k> + <[e_k,e_i],e_j> + <[e_k,e_j],e_i>.
inline Connection levi_civita(const LieAlgebra& g, const InnerProduct& ip) {
  const std::size_t n = g.dim();
  if (ip.dim() != n) throw DimensionMismatchError("levi_civita: metric/algebra dimension mismatch");
  const Matrix half_g_inv = mat_inverse(Rational(2) * ip.gram());
  Connection conn(n);
  const auto basis = [&](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix k_vec(n, 1);
      for (std::size_t k = 0; k < n; ++k)
        k_vec(k, 0) = ip.pair(g.bracket_basis(i, j), basis(k)) +
                      ip.pair(g.bracket_basis(k, i), basis(j)) +
                      ip.pair(g.bracket_basis(k, j), basis(i));
      const Matrix sol = half_g_inv * k_vec;
      for (std::size_t k = 0; k < n; ++k) conn.gamma(i, j, k) = sol(k, 0);
    }
  return conn;
}

/// Orthonormal-basis fast path:
/// nabla_{v_i} v_j = sum_k <v_k,v_k> (xi_ijk - xi_jki + xi_kij)/2 v_k
/// with xi_ijk = <[v_i,v_j],v_k>. Requires a +-1 diagonal Gram matrix; used
/// as an independent cross-check of the general route.
inline Connection levi_civita_orthonormal(const LieAlgebra& g, const InnerProduct& ip) {
  const std::size_t n = g.dim();
  if (ip.dim() != n) throw DimensionMismatchError("levi_civita_orthonormal: dimension mismatch");
  if (!ip.is_unit_diagonal())
    throw NotOrthonormalError("levi_civita_orthonormal: metric is not +-1 diagonal");
  // xi_ijk = <[e_i,e_j], e_k> = c_ij^k * eps_k for diagonal metrics
  const auto xi = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational {
    return g.bracket_basis(i, j)[k] * ip.gram()(k, k);
  };
  Connection conn(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        conn.gamma(i, j, k) =
            ip.gram()(k, k) * (xi(i, j, k) - xi(j, k, i) + xi(k, i, j)) / 2;
  return conn;
}

/// The endomorphisms R_{e_i e_j} = nabla_{[e_i,e_j]} - [nabla_{e_i}, nabla_{e_j}],
/// stored for i < j; the rest follow by antisymmetry.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(std::size_t dim) : dim_(dim), r_(dim * dim) {}

  std::size_t dim() const { return dim_; }

  void set(std::size_t i, std::size_t j, Matrix m) {
    if (i >= j) throw Error("curvature stored for i < j only");
    r_[i * dim_ + j] = std::move(m);
  }

  Matrix at(std::size_t i, std::size_t j) const {
    if (i == j) return Matrix(dim_, dim_);
    if (i < j) return r_[i * dim_ + j];
    return -r_[j * dim_ + i];
  }

  bool all_zero() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!r_[i * dim_ + j].is_zero()) return false;
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<Matrix> r_;
};

inline CurvatureTensor curvature(const LieAlgebra& g, const Connection& conn) {
  const std::size_t n = g.dim();
  std::vector<Matrix> nab(n);
  for (std::size_t i = 0; i < n; ++i) nab[i] = conn.nabla(i);
  CurvatureTensor ct(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix m(n, n);
      const std::vector<Rational> c = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (c[k] != 0) m = m + c[k] * nab[k];
      ct.set(i, j, m - (nab[i] * nab[j] - nab[j] * nab[i]));
    }
  return ct;
}

inline bool is_flat(const CurvatureTensor& ct) { return ct.all_zero(); }

struct RicciData {
  Matrix ric;       // ric(e_i, e_j) = tr(w -> R_{e_i w} e_j), symmetric
  Matrix ricci_op;  // G^{-1} ric; satisfies <Ric(u), v> = ric(u, v)
};

inline RicciData ricci(const LieAlgebra& g, const InnerProduct& ip, const CurvatureTensor& ct) {
  const std::size_t n = g.dim();
  if (ip.dim() != n || ct.dim() != n) throw DimensionMismatchError("ricci: dimension mismatch");
  RicciData out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational t;
      for (std::size_t m = 0; m < n; ++m) t += ct.at(i, m)(m, j);
      out.ric(i, j) = t;
    }
  out.ricci_op = mat_inverse(ip.gram()) * out.ric;
  return out;
}

/// Orthonormal fast path: Ric(u) = sum_i <v_i,v_i> R_{v_i u} v_i.
inline RicciData ricci_orthonormal(const LieAlgebra& g, const InnerProduct& ip,
                                   const CurvatureTensor& ct) {
  const std::size_t n = g.dim();
  if (ip.dim() != n || ct.dim() != n)
    throw DimensionMismatchError("ricci_orthonormal: dimension mismatch");
  if (!ip.is_unit_diagonal())
    throw NotOrthonormalError("ricci_orthonormal: metric is not +-1 diagonal");
  RicciData out{Matrix(n, n), Matrix(n, n)};
  for (std::size_t u = 0; u < n; ++u) {
    // column u of the operator: sum_i eps_i * (R_{v_i v_u} applied to v_i)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == u) continue;
      const Matrix r = ct.at(i, u);
      for (std::size_t k = 0; k < n; ++k)
        out.ricci_op(k, u) += ip.gram()(i, i) * r(k, i);
    }
  }
  out.ric = ip.gram() * out.ricci_op;
  return out;
}

/// Self-adjointness report: R^T G = G R always, plus the entrywise sign
/// patterns R_ji = eps_i eps_j R_ij that +-1 diagonal metrics impose
/// (e.g. R41 = -R14 for diag(1,1,1,-1)).
struct ShapeViolation {
  std::size_t row, col;  // 0-based entry where the relation fails
  std::string relation;
};

struct ShapeCheckReport {
  bool self_adjoint = false;
  std::vector<ShapeViolation> violations;
  bool ok() const { return self_adjoint && violations.empty(); }
};

inline ShapeCheckReport self_adjoint_shape_check(const Matrix& ricci_op, const InnerProduct& ip) {
  ShapeCheckReport report;
  const Matrix& g = ip.gram();
  report.self_adjoint = ricci_op.transpose() * g == g * ricci_op;
  if (!ip.is_unit_diagonal()) return report;
  const std::size_t n = ip.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational expected = g(i, i) * g(j, j) * ricci_op(i, j);
      if (ricci_op(j, i) != expected) {
        const bool same_sign = g(i, i) == g(j, j);
        report.violations.push_back(
            {j, i,
             "R" + std::to_string(j + 1) + std::to_string(i + 1) + " = " +
                 (same_sign ? "" : "-") + "R" + std::to_string(i + 1) + std::to_string(j + 1)});
      }
    }
  return report;
}

/// Basis change for the Ricci operator: A^{-1} R A.
inline Matrix conjugate_ricci(const Matrix& ricci_op, const Matrix& a) {
  return mat_inverse(a) * ricci_op * a;
}

}  // namespace sforge
