#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "soliton_forge/errors.hpp"
#include "soliton_forge/matrix.hpp"
#include "soliton_forge/rational.hpp"

namespace sforge {

namespace detail {

// Reduced row echelon form. Pivoting is deterministic: first nonzero entry
// in column order (magnitude is irrelevant in exact arithmetic).
inline Matrix rref(Matrix m, std::vector<std::size_t>& pivot_cols) {
  pivot_cols.clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return m;
}

}  // namespace detail

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

inline Rational determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatchError("determinant of non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = Rational(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

inline Matrix mat_inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatchError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) throw SingularMatrixError("matrix is singular");
    if (p != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    const Rational s = Rational(1) / m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Full affine solution set of a·x = b: a particular solution plus a basis of
/// the kernel of a, or inconsistency.
struct SolutionSet {
  bool consistent = false;
  Matrix particular;              // rows = a.cols, cols = b.cols
  std::vector<Matrix> nullspace;  // columns spanning ker(a)

  bool unique() const { return consistent && nullspace.empty(); }
};

inline std::vector<Matrix> kernel_basis(const Matrix& a) {
  std::vector<std::size_t> pivots;
  const Matrix r = detail::rref(a, pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(a.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline SolutionSet solve_linear(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatchError("solve_linear: a has " + std::to_string(a.rows()) +
                                 " rows, b has " + std::to_string(b.rows()));
  Matrix aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  std::vector<std::size_t> pivots;
  const Matrix r = detail::rref(aug, pivots);

  SolutionSet out;
  for (std::size_t c : pivots)
    if (c >= a.cols()) return out;  // pivot in the rhs block: inconsistent
  out.consistent = true;
  out.particular = Matrix(a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      out.particular(pivots[k], j) = r(k, a.cols() + j);
  out.nullspace = kernel_basis(a);
  return out;
}

struct Signature {
  std::size_t positives = 0;  // r
  std::size_t negatives = 0;  // s

  friend bool operator==(const Signature& x, const Signature& y) {
    return x.positives == y.positives && x.negatives == y.negatives;
  }
};

/// Signature by Sylvester's law, via symmetric congruence diagonalization.
/// Stays inside the rationals: a zero diagonal pivot is repaired by the
/// congruence e_i <- e_i + e_j when some g_ij != 0 (no square roots).
inline Signature signature_of(const Matrix& g) {
  if (!g.is_square()) throw DimensionMismatchError("signature of non-square matrix");
  if (!g.is_symmetric()) throw NotSymmetricError("signature_of: matrix is not symmetric");
  Matrix m = g;
  const std::size_t n = m.rows();
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t d = k + 1;
      while (d < n && m(d, d) == 0) ++d;
      if (d < n) {
        // congruence swap of basis vectors k and d
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && m(k, j) == 0) ++j;
        if (j == n) throw DegenerateFormError("signature_of: form is degenerate (rank < n)");
        // e_k <- e_k + e_j; new pivot is 2*g_kj since all trailing diagonals vanish
        for (std::size_t c = 0; c < n; ++c) m(k, c) += m(j, c);
        for (std::size_t r = 0; r < n; ++r) m(r, k) += m(r, j);
      }
    }
    if (m(k, k) > 0)
      ++sig.positives;
    else
      ++sig.negatives;
    const Rational inv = Rational(1) / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = m(i, k) * inv;
      for (std::size_t c = 0; c < n; ++c) m(i, c) -= f * m(k, c);
      for (std::size_t r = 0; r < n; ++r) m(r, i) -= f * m(r, k);
    }
  }
  return sig;
}

/// Membership of v in the span of the given columns, by exact linear solve.
inline bool in_span(const std::vector<Matrix>& basis, const Matrix& v) {
  if (basis.empty()) return v.is_zero();
  Matrix a(basis.front().rows(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = basis[j](i, 0);
  return solve_linear(a, v).consistent;
}

}  // namespace sforge
