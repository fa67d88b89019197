#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "soliton_forge/errors.hpp"
#include "soliton_forge/linalg.hpp"
#include "soliton_forge/matrix.hpp"
#include "soliton_forge/rational.hpp"

namespace sforge {

/// A finite-dimensional Lie algebra given by structure constants c_ij^k with
/// [e_i, e_j] = sum_k c_ij^k e_k. Constants are stored for i < j only;
/// antisymmetry holds by construction rather than by validation. The Jacobi
/// identity is a separate report-style check (jacobi_check), hard-asserted
/// for catalog entries and surfaced as a diagnostic for user input.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim, std::string name = "")
      : dim_(dim), name_(std::move(name)) {}

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // 0-based indices, i < j required
  void set_bracket(std::size_t i, std::size_t j, std::vector<Rational> coeffs) {
    if (i >= j || j >= dim_) throw Error("set_bracket: need i < j < dim");
    if (coeffs.size() != dim_) throw DimensionMismatchError("set_bracket: bad coefficient count");
    bool all_zero = true;
    for (const auto& c : coeffs)
      if (c != 0) all_zero = false;
    if (all_zero)
      c_.erase({i, j});
    else
      c_[{i, j}] = std::move(coeffs);
  }

  /// [e_i, e_j] for any i, j; the i >= j cases are derived by antisymmetry.
  std::vector<Rational> bracket_basis(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(dim_);
    if (i == j) return out;
    const bool flip = i > j;
    const auto it = c_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == c_.end()) return out;
    for (std::size_t k = 0; k < dim_; ++k) out[k] = flip ? -it->second[k] : it->second[k];
    return out;
  }

  /// Bilinear antisymmetric extension to arbitrary coordinate vectors.
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const {
    if (x.size() != dim_ || y.size() != dim_)
      throw DimensionMismatchError("bracket: vector length != dim");
    std::vector<Rational> out(dim_);
    for (const auto& [ij, coeffs] : c_) {
      const auto [i, j] = ij;
      const Rational w = x[i] * y[j] - x[j] * y[i];
      if (w == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) out[k] += w * coeffs[k];
    }
    return out;
  }

  bool is_abelian() const { return c_.empty(); }

  const std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>& stored() const {
    return c_;
  }

  /// Structure constants of the same algebra in the basis whose vectors are
  /// the columns of a (expressed in the current basis).
  LieAlgebra change_basis(const Matrix& a) const {
    if (!a.is_square() || a.rows() != dim_)
      throw DimensionMismatchError("change_basis: matrix must be dim x dim");
    const Matrix a_inv = mat_inverse(a);
    LieAlgebra out(dim_, name_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        const std::vector<Rational> br = bracket(a.col(i), a.col(j));
        const Matrix coords = a_inv * Matrix::column(br);
        out.set_bracket(i, j, coords.col(0));
      }
    return out;
  }

 private:
  std::size_t dim_;
  std::string name_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> c_;
};

struct JacobiFailure {
  std::size_t i, j, k;             // 0-based triple
  std::vector<Rational> residual;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

struct JacobiReport {
  std::vector<JacobiFailure> failures;
  bool ok() const { return failures.empty(); }
};

inline JacobiReport jacobi_check(const LieAlgebra& g) {
  JacobiReport report;
  const std::size_t n = g.dim();
  const auto basis = [&](std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto t1 = g.bracket(g.bracket(basis(i), basis(j)), basis(k));
        const auto t2 = g.bracket(g.bracket(basis(j), basis(k)), basis(i));
        const auto t3 = g.bracket(g.bracket(basis(k), basis(i)), basis(j));
        std::vector<Rational> sum(n);
        bool zero = true;
        for (std::size_t m = 0; m < n; ++m) {
          sum[m] = t1[m] + t2[m] + t3[m];
          if (sum[m] != 0) zero = false;
        }
        if (!zero) report.failures.push_back({i, j, k, std::move(sum)});
      }
  return report;
}

struct DerivationSpace {
  std::vector<Matrix> basis;  // n x n matrices
  std::size_t dim() const { return basis.size(); }
};

/// Leibniz rule on all basis pairs: D[e_i,e_j] = [De_i,e_j] + [e_i,De_j].
inline bool is_derivation(const LieAlgebra& g, const Matrix& d) {
  const std::size_t n = g.dim();
  if (!d.is_square() || d.rows() != n) throw DimensionMismatchError("is_derivation: bad shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::vector<Rational> br = g.bracket_basis(i, j);
      const Matrix lhs = d * Matrix::column(br);
      std::vector<Rational> di = d.col(i), dj = d.col(j), ej(n), ei(n);
      ei[i] = 1;
      ej[j] = 1;
      const auto r1 = g.bracket(di, ej);
      const auto r2 = g.bracket(ei, dj);
      for (std::size_t k = 0; k < n; ++k)
        if (lhs(k, 0) != r1[k] + r2[k]) return false;
    }
  return true;
}

/// Der(g) as the kernel of D |-> (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_{i<j},
/// an (n * n(n-1)/2) x n^2 linear map over the rationals. Unknown D is
/// flattened row-major: column vector entry 4*r + c is D_rc.
inline DerivationSpace derivation_basis(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix constraints(n * pairs, n * n);
  std::size_t block = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++block) {
      const std::vector<Rational> br = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = block * n + k;
        // D[e_i,e_j]: (D br)_k = sum_m D_km br_m
        for (std::size_t m = 0; m < n; ++m)
          if (br[m] != 0) constraints(row, k * n + m) += br[m];
        // -[De_i, e_j]: De_i = sum_m D_mi e_m, [e_m, e_j]_k
        for (std::size_t m = 0; m < n; ++m) {
          const Rational c = g.bracket_basis(m, j)[k];
          if (c != 0) constraints(row, m * n + i) -= c;
        }
        // -[e_i, De_j]
        for (std::size_t m = 0; m < n; ++m) {
          const Rational c = g.bracket_basis(i, m)[k];
          if (c != 0) constraints(row, m * n + j) -= c;
        }
      }
    }
  DerivationSpace out;
  for (const Matrix& v : kernel_basis(constraints)) {
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v(r * n + c, 0);
    out.basis.push_back(std::move(d));
  }
  return out;
}

inline bool in_derivation_span(const DerivationSpace& der, const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Matrix> cols;
  cols.reserve(der.basis.size());
  for (const Matrix& b : der.basis) {
    Matrix v(n * n, 1);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) v(r * n + c, 0) = b(r, c);
    cols.push_back(std::move(v));
  }
  Matrix target(n * n, 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) target(r * n + c, 0) = m(r, c);
  return in_span(cols, target);
}

}  // namespace sforge
