#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "soliton_forge/catalog.hpp"
#include "soliton_forge/matrix.hpp"
#include "soliton_forge/rng.hpp"
#include "soliton_forge/soliton.hpp"
#include "soliton_forge/theorems.hpp"

namespace sforge {

/// One sample where the theorem predicate and the generic solver disagree.
/// predicate = true with solver = NotSoliton is a soundness violation;
/// the converse direction is a completeness finding.
struct Discrepancy {
  std::size_t sample_index;
  Matrix r;
  bool predicate;
  SolitonResult::Verdict solver;
};

struct CrossValidationReport {
  CatalogId id;
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::vector<Discrepancy> discrepancies;

  std::size_t soundness_violations() const {
    std::size_t n = 0;
    for (const auto& d : discrepancies)
      if (d.predicate && d.solver == SolitonResult::Verdict::NotSoliton) ++n;
    return n;
  }
};

/// Compares theorem_predicate against soliton_solve on a seeded, per-index
/// split random stream: fully random matrices, constructively built
/// predicate-satisfying ones, and predicate samples perturbed off the
/// condition set, in rotation. Disagreements are recorded, never thrown.
inline CrossValidationReport cross_validate(const CatalogId& id, std::size_t samples,
                                            std::uint64_t seed, const SampleConfig& cfg = {}) {
  CrossValidationReport report;
  report.id = id;
  report.samples = samples;
  const LieAlgebra g = catalog_get(id);
  const DerivationSpace der = derivation_basis(g);
  const TheoremSpec spec = theorem_spec(id);
  for (std::size_t s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::stream(seed, s);
    Matrix r(4, 4);
    switch (s % 3) {
      case 0:
        r = random_matrix(rng, 4, 4, cfg);
        break;
      case 1:
        r = sample_predicate_matrix(id, rng, cfg);
        break;
      default: {
        r = sample_predicate_matrix(id, rng, cfg);
        if (!spec.vacuous && !spec.conditions.empty()) {
          // bump one entry that appears in some condition
          const auto& form =
              spec.conditions[rng.range(0, static_cast<std::int64_t>(spec.conditions.size()) - 1)]
                  .form;
          for (int k = 0; k < 16; ++k)
            if (form.c[k] != 0) {
              r(k / 4, k % 4) += make_rational(rng.range(1, 5), 1);
              break;
            }
        }
        break;
      }
    }
    const bool predicate = theorem_predicate(id, r).holds;
    const SolitonResult solved = soliton_solve(g, r, der);
    if (predicate == solved.is_soliton())
      ++report.agreements;
    else
      report.discrepancies.push_back({s, r, predicate, solved.verdict});
  }
  return report;
}

struct SoundnessViolation {
  std::size_t sample_index;
  std::string what;
  Matrix r;
};

struct SoundnessReport {
  CatalogId id;
  std::size_t samples = 0;
  std::vector<SoundnessViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Hard soundness sweep over constructively generated predicate-satisfying
/// Ricci matrices: the solver must succeed, its eta must equal the theorem's
/// formula, r - eta*I must reproduce the instantiated template entrywise,
/// and the template must pass the Leibniz rule on all basis pairs.
inline SoundnessReport soundness_sweep(const CatalogId& id, std::size_t samples,
                                       std::uint64_t seed, const SampleConfig& cfg = {}) {
  SoundnessReport report;
  report.id = id;
  report.samples = samples;
  const LieAlgebra g = catalog_get(id);
  const DerivationSpace der = derivation_basis(g);
  const TheoremSpec spec = theorem_spec(id);
  for (std::size_t s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::stream(seed, s);
    const Matrix r = sample_predicate_matrix(id, rng, cfg);
    const PredicateOutcome pred = theorem_predicate(id, r);
    if (!pred.holds) {
      report.violations.push_back({s, "constructive sample fails its own predicate", r});
      continue;
    }
    const SolitonResult solved = soliton_solve(g, r, der);
    if (!solved.is_soliton()) {
      report.violations.push_back({s, "predicate holds but solver says NotSoliton", r});
      continue;
    }
    if (spec.vacuous) continue;  // abelian: any eta works, nothing to pin
    if (solved.verdict != SolitonResult::Verdict::Soliton || *solved.eta != *pred.eta) {
      report.violations.push_back({s, "solver eta differs from the theorem's formula", r});
      continue;
    }
    const Matrix expected_d = r - *pred.eta * Matrix::identity(4);
    if (*pred.d != expected_d) {
      report.violations.push_back({s, "instantiated template differs from R - eta*I", r});
      continue;
    }
    if (!is_derivation(g, *pred.d))
      report.violations.push_back({s, "instantiated template fails the Leibniz rule", r});
  }
  return report;
}

/// Fixed, documented parameter grid for the verification sweep. Covers the
/// boundary cases the theorems single out (alpha = 1, alpha = beta, the
/// alpha = -1 branch of g4.5, beta = 0 for g4.6).
inline std::vector<CatalogId> verification_grid(Family f) {
  const auto rat = [](long long p, long long q = 1) { return make_rational(p, q); };
  const FamilyInfo& info = family_info(f);
  if (!info.has_alpha) return {CatalogId{f, {}, {}}};
  std::vector<CatalogId> out;
  switch (f) {
    case Family::G34AlphaPlusG1:
      for (auto a : {rat(1, 2), rat(2)}) out.push_back({f, a, {}});
      break;
    case Family::G35AlphaPlusG1:
    case Family::G49Alpha:
      for (auto a : {rat(1, 2), rat(1), rat(2)}) out.push_back({f, a, {}});
      break;
    case Family::G42Alpha:
      for (auto a : {rat(-1), rat(1, 2), rat(1), rat(2)}) out.push_back({f, a, {}});
      break;
    case Family::G48Alpha:
      for (auto a : {rat(-1, 2), rat(0), rat(1, 2), rat(1)}) out.push_back({f, a, {}});
      break;
    case Family::G45AlphaBeta:
      out.push_back({f, rat(1, 2), rat(1, 2)});
      out.push_back({f, rat(1, 2), rat(1)});
      out.push_back({f, rat(1), rat(1)});
      out.push_back({f, rat(-1, 2), rat(1, 2)});
      out.push_back({f, rat(-1), rat(1)});
      out.push_back({f, rat(-1), rat(1, 2)});
      break;
    case Family::G46AlphaBeta:
      out.push_back({f, rat(1), rat(0)});
      out.push_back({f, rat(1, 2), rat(1)});
      out.push_back({f, rat(2), rat(-1)});
      break;
    default:
      throw std::logic_error("verification_grid: unhandled parameterized family");
  }
  return out;
}

inline std::vector<CatalogId> verification_grid() {
  std::vector<CatalogId> out;
  for (const auto& info : catalog_families())
    for (const auto& id : verification_grid(info.family)) out.push_back(id);
  return out;
}

}  // namespace sforge
