#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "soliton_forge/catalog.hpp"
#include "soliton_forge/geometry.hpp"
#include "soliton_forge/lie_algebra.hpp"
#include "soliton_forge/soliton.hpp"
#include "soliton_forge/theorems.hpp"

namespace sforge {

/// Everything the analyze pipeline produces for one (algebra, metric) pair.
/// All numeric fields are exact rationals; no floating point anywhere.
struct AnalysisReport {
  std::string algebra_name;
  std::size_t dim = 0;
  JacobiReport jacobi;
  Signature signature;
  Connection connection{0};
  bool flat = false;
  Matrix ric;
  Matrix ricci_op;
  ShapeCheckReport self_adjoint;
  SolitonResult soliton;
  std::optional<CatalogId> catalog_id;
  std::optional<PredicateOutcome> theorem;
};

/// jacobi -> signature -> Koszul connection -> curvature -> flatness ->
/// Ricci -> soliton solve, plus the matching theorem predicate when the
/// algebra is a recognized catalog entry. Throws ValidationError if the
/// bracket table is not a Lie algebra.
inline AnalysisReport analyze(const LieAlgebra& g, const InnerProduct& ip,
                              std::optional<CatalogId> known = {}) {
  AnalysisReport report;
  report.algebra_name = g.name().empty() ? "(unnamed)" : g.name();
  report.dim = g.dim();
  report.jacobi = jacobi_check(g);
  if (!report.jacobi.ok()) {
    std::string msg = "bracket table violates the Jacobi identity at triples:";
    for (const auto& f : report.jacobi.failures) {
      msg += " (" + std::to_string(f.i + 1) + "," + std::to_string(f.j + 1) + "," +
             std::to_string(f.k + 1) + ")";
    }
    throw ValidationError(msg);
  }
  report.signature = ip.signature();
  report.connection = levi_civita(g, ip);
  const CurvatureTensor ct = curvature(g, report.connection);
  report.flat = is_flat(ct);
  const RicciData rd = ricci(g, ip, ct);
  report.ric = rd.ric;
  report.ricci_op = rd.ricci_op;
  report.self_adjoint = self_adjoint_shape_check(report.ricci_op, ip);
  report.soliton = soliton_solve(g, report.ricci_op);
  report.catalog_id = known;
  if (known && g.dim() == 4) report.theorem = theorem_predicate(*known, report.ricci_op);
  return report;
}

inline void render_text(const AnalysisReport& r, std::ostream& os) {
  os << "algebra: " << r.algebra_name << " (dim " << r.dim << ")\n";
  os << "jacobi: ok\n";
  os << "signature: (" << r.signature.positives << "," << r.signature.negatives << ")\n";
  os << "connection (nonzero Gamma_ij^k, nabla_{e_i} e_j = sum_k Gamma_ij^k e_k):\n";
  bool any = false;
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j) {
      std::string terms;
      for (std::size_t k = 0; k < r.dim; ++k) {
        const Rational& c = r.connection.gamma(i, j, k);
        if (c == 0) continue;
        if (!terms.empty()) terms += " + ";
        terms += "(" + c.str() + ")e" + std::to_string(k + 1);
      }
      if (terms.empty()) continue;
      any = true;
      os << "  nabla_e" << i + 1 << " e" << j + 1 << " = " << terms << "\n";
    }
  if (!any) os << "  (identically zero)\n";
  os << "flat: " << (r.flat ? "yes" : "no") << "\n";
  os << "ricci operator:\n";
  for (std::size_t i = 0; i < r.dim; ++i) {
    os << "  [";
    for (std::size_t j = 0; j < r.dim; ++j) os << (j ? " " : "") << r.ricci_op(i, j).str();
    os << "]\n";
  }
  os << "self-adjoint (R^T G = G R): " << (r.self_adjoint.self_adjoint ? "yes" : "NO") << "\n";
  switch (r.soliton.verdict) {
    case SolitonResult::Verdict::NotSoliton:
      os << "algebraic Ricci soliton: no\n";
      break;
    case SolitonResult::Verdict::EveryEta:
      os << "algebraic Ricci soliton: yes, for every eta (abelian; D = Ric - eta*I)\n";
      break;
    case SolitonResult::Verdict::Soliton: {
      os << "algebraic Ricci soliton: yes, eta = " << r.soliton.eta->str() << "\n";
      os << "derivation D = Ric - eta*I:\n";
      for (std::size_t i = 0; i < r.dim; ++i) {
        os << "  [";
        for (std::size_t j = 0; j < r.dim; ++j)
          os << (j ? " " : "") << (*r.soliton.d)(i, j).str();
        os << "]\n";
      }
      break;
    }
  }
  if (r.theorem) {
    os << "catalog theorem (" << catalog_label(*r.catalog_id)
       << "): " << (r.theorem->holds ? "conditions hold" : "conditions fail");
    if (r.theorem->holds && r.theorem->eta) os << ", eta = " << r.theorem->eta->str();
    if (!r.theorem->holds) {
      os << " [";
      for (std::size_t k = 0; k < r.theorem->failed_conditions.size(); ++k)
        os << (k ? "; " : "") << r.theorem->failed_conditions[k];
      os << "]";
    }
    os << "\n";
  }
}

}  // namespace sforge
