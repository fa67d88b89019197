#pragma once

#include <optional>
#include <string>
#include <utility>

#include "soliton_forge/errors.hpp"
#include "soliton_forge/lie_algebra.hpp"
#include "soliton_forge/linalg.hpp"
#include "soliton_forge/matrix.hpp"

namespace sforge {

/// Outcome of the algebraic Ricci soliton equation Ric = eta*I + D with
/// D a derivation. EveryEta arises exactly when I itself is a derivation,
/// i.e. only on the abelian algebra, where D = Ric - eta*I works for all eta.
struct SolitonResult {
  enum class Verdict { NotSoliton, Soliton, EveryEta };

  Verdict verdict = Verdict::NotSoliton;
  std::optional<Rational> eta;
  std::optional<Matrix> d;

  bool is_soliton() const { return verdict != Verdict::NotSoliton; }
};

inline const char* to_string(SolitonResult::Verdict v) {
  switch (v) {
    case SolitonResult::Verdict::NotSoliton: return "NotSoliton";
    case SolitonResult::Verdict::Soliton: return "Soliton";
    case SolitonResult::Verdict::EveryEta: return "EveryEta";
  }
  return "?";
}

/// Solves ricci_op = eta*I + sum_k c_k B_k over (eta, c) exactly, where the
/// B_k span Der(g). For non-abelian g a consistent system pins eta uniquely:
/// two decompositions differ by (eta - eta')*I in Der(g), and I is a
/// derivation only of the abelian algebra.
inline SolitonResult soliton_solve(const LieAlgebra& g, const Matrix& ricci_op,
                                   const DerivationSpace& der) {
  const std::size_t n = g.dim();
  if (!ricci_op.is_square() || ricci_op.rows() != n)
    throw DimensionMismatchError("soliton_solve: ricci_op must be dim x dim");

  const std::size_t m = der.dim();
  Matrix a(n * n, 1 + m);
  for (std::size_t i = 0; i < n; ++i) a(i * n + i, 0) = 1;
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r * n + c, 1 + k) = der.basis[k](r, c);
  Matrix b(n * n, 1);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r * n + c, 0) = ricci_op(r, c);

  const SolutionSet sol = solve_linear(a, b);
  SolitonResult out;
  if (!sol.consistent) return out;

  if (g.is_abelian()) {
    out.verdict = SolitonResult::Verdict::EveryEta;
    return out;
  }
  // Non-abelian: the identity is not a derivation, so eta is unique even
  // when the c_k are not pinned down.
  for (const Matrix& v : sol.nullspace)
    if (v(0, 0) != 0) throw std::logic_error("soliton_solve: non-unique eta on non-abelian algebra");
  out.verdict = SolitonResult::Verdict::Soliton;
  out.eta = sol.particular(0, 0);
  out.d = ricci_op - *out.eta * Matrix::identity(n);
  return out;
}

inline SolitonResult soliton_solve(const LieAlgebra& g, const Matrix& ricci_op) {
  return soliton_solve(g, ricci_op, derivation_basis(g));
}

}  // namespace sforge
