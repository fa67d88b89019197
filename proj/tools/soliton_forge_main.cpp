#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soliton_forge/analysis.hpp"
#include "soliton_forge/cross_validate.hpp"
#include "soliton_forge/io.hpp"

namespace {

using namespace sforge;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitValidation = 2;
constexpr int kExitMismatch = 3;

// Recovers the catalog identity of a user-supplied bracket table, including
// the parameters of the seven parameterized families, by reading the
// family's defining structure-constant slots and comparing tables exactly.
std::optional<CatalogId> recognize_catalog(const LieAlgebra& g) {
  if (g.dim() != 4) return std::nullopt;
  for (const auto& info : catalog_families()) {
    CatalogId id{info.family, {}, {}};
    if (info.has_alpha) {
      switch (info.family) {
        case Family::G34AlphaPlusG1:
        case Family::G35AlphaPlusG1:
          id.alpha = -g.bracket_basis(0, 2)[0];
          break;
        case Family::G42Alpha:
        case Family::G46AlphaBeta:
          id.alpha = g.bracket_basis(0, 3)[0];
          break;
        case Family::G45AlphaBeta:
          id.alpha = g.bracket_basis(2, 3)[2];
          break;
        case Family::G48Alpha:
          id.alpha = g.bracket_basis(0, 3)[0] - 1;
          break;
        case Family::G49Alpha:
          id.alpha = g.bracket_basis(0, 3)[0] / 2;
          break;
        default:
          break;
      }
    }
    if (info.has_beta) id.beta = g.bracket_basis(1, 3)[1];
    try {
      if (catalog_get(id).stored() == g.stored()) return id;
    } catch (const ParamOutOfRangeError&) {
    }
  }
  return std::nullopt;
}

json analysis_to_json(const AnalysisReport& r) {
  json out;
  out["algebra"] = r.algebra_name;
  out["dim"] = r.dim;
  out["jacobi_ok"] = r.jacobi.ok();
  out["signature"] = {r.signature.positives, r.signature.negatives};
  json gamma = json::array();
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j) {
      json coeffs = json::array();
      bool nonzero = false;
      for (std::size_t k = 0; k < r.dim; ++k) {
        coeffs.push_back(r.connection.gamma(i, j, k).str());
        if (r.connection.gamma(i, j, k) != 0) nonzero = true;
      }
      if (nonzero) gamma.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", coeffs}});
    }
  out["connection"] = std::move(gamma);
  out["flat"] = r.flat;
  out["ricci_op"] = matrix_to_json(r.ricci_op);
  out["ric"] = matrix_to_json(r.ric);
  out["self_adjoint"] = r.self_adjoint.self_adjoint;
  json soliton;
  soliton["verdict"] = to_string(r.soliton.verdict);
  if (r.soliton.eta) soliton["eta"] = r.soliton.eta->str();
  if (r.soliton.d) soliton["D"] = matrix_to_json(*r.soliton.d);
  if (r.soliton.verdict == SolitonResult::Verdict::EveryEta)
    soliton["d_of_eta"] = "Ric - eta*I for every eta (Der is all of gl(n))";
  out["soliton"] = std::move(soliton);
  if (r.theorem) {
    json th;
    th["family"] = catalog_label(*r.catalog_id);
    th["holds"] = r.theorem->holds;
    if (r.theorem->eta) th["eta"] = r.theorem->eta->str();
    if (r.theorem->d) th["D"] = matrix_to_json(*r.theorem->d);
    th["failed_conditions"] = r.theorem->failed_conditions;
    out["theorem"] = std::move(th);
  }
  return out;
}

int cmd_analyze(const std::string& algebra_path, const std::string& metric_path, bool as_json) {
  const LieAlgebra g = load_algebra(algebra_path);
  const JacobiReport jac = jacobi_check(g);
  if (!jac.ok()) {
    std::cerr << "error: " << algebra_path << ": bracket table violates the Jacobi identity\n";
    for (const auto& f : jac.failures) {
      std::cerr << "  triple (e" << f.i + 1 << ", e" << f.j + 1 << ", e" << f.k + 1
                << "): cyclic sum = [";
      for (std::size_t m = 0; m < f.residual.size(); ++m)
        std::cerr << (m ? " " : "") << f.residual[m].str();
      std::cerr << "]\n";
    }
    return kExitValidation;
  }
  const InnerProduct ip{load_metric(metric_path)};
  if (ip.dim() != g.dim())
    throw ValidationError(metric_path + ": metric is " + std::to_string(ip.dim()) +
                          "-dimensional but the algebra has dim " + std::to_string(g.dim()));
  const AnalysisReport report = analyze(g, ip, recognize_catalog(g));
  if (as_json)
    std::cout << analysis_to_json(report).dump(2) << "\n";
  else
    render_text(report, std::cout);
  return kExitOk;
}

int cmd_catalog_list(bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const auto& info : catalog_families())
      out.push_back({{"id", std::string(info.id)},
                     {"has_alpha", info.has_alpha},
                     {"has_beta", info.has_beta},
                     {"constraint", std::string(info.constraint)},
                     {"brackets", std::string(info.brackets)}});
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& info : catalog_families()) {
    std::cout << info.id;
    if (info.has_alpha) std::cout << "   (" << info.constraint << ")";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_catalog_show(const std::string& raw_id, std::optional<std::string> alpha,
                     std::optional<std::string> beta, bool as_json) {
  const Family f = family_from_string(raw_id);
  const FamilyInfo& info = family_info(f);
  CatalogId id{f, {}, {}};
  if (alpha) id.alpha = parse_rational(*alpha);
  if (beta) id.beta = parse_rational(*beta);

  const bool instantiable = (!info.has_alpha || id.alpha) && (!info.has_beta || id.beta);
  std::optional<LieAlgebra> g;
  if (instantiable) g = catalog_get(id);  // throws ParamOutOfRange citing the range

  if (as_json) {
    json out;
    out["id"] = std::string(info.id);
    out["brackets"] = std::string(info.brackets);
    if (!info.constraint.empty()) out["constraint"] = std::string(info.constraint);
    if (g) {
      out["label"] = catalog_label(id);
      out["structure"] = algebra_to_json(*g)["brackets"];
      out["derivation_dim"] = derivation_basis(*g).dim();
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << info.id << "\n";
  std::cout << "nonzero commutators: " << info.brackets << "\n";
  if (!info.constraint.empty()) std::cout << "parameter range: " << info.constraint << "\n";
  if (g) {
    if (info.has_alpha) std::cout << "instantiated at " << catalog_label(id) << ":\n";
    for (const auto& [ij, coeffs] : g->stored()) {
      std::cout << "  [e" << ij.first + 1 << ",e" << ij.second + 1 << "] =";
      bool first = true;
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        std::cout << (first ? " " : " + ") << "(" << coeffs[k].str() << ")e" << k + 1;
        first = false;
      }
      std::cout << "\n";
    }
    std::cout << "derivation algebra dimension: " << derivation_basis(*g).dim() << "\n";
  }
  return kExitOk;
}

std::string report_filename(const CatalogId& id) {
  std::string s = catalog_label(id);
  for (char& c : s) {
    if (c == ' ') c = '_';
    if (c == '/') c = '-';
  }
  return s + ".json";
}

int cmd_verify(std::size_t samples, std::uint64_t seed, const std::string& id_filter,
               bool strict, const std::string& out_dir, bool as_json) {
  std::vector<CatalogId> grid;
  for (const CatalogId& id : verification_grid()) {
    if (!id_filter.empty()) {
      const std::string fid = family_id(id.family);
      const std::string base = fid.substr(0, fid.find('^'));
      std::string want;
      try {
        want = family_id(family_from_string(id_filter));
      } catch (const UnknownFamilyError&) {
        want = id_filter;
      }
      if (fid != want && base != want) continue;
    }
    grid.push_back(id);
  }
  if (grid.empty()) throw UnknownFamilyError("verify: no catalog family matches --id " + id_filter);

  std::filesystem::create_directories(out_dir);
  std::size_t soundness_violations = 0, completeness_discrepancies = 0;
  json summary = json::array();
  for (const CatalogId& id : grid) {
    const SoundnessReport sound = soundness_sweep(id, samples, seed);
    const CrossValidationReport cv = cross_validate(id, samples, seed);
    soundness_violations += sound.violations.size() + cv.soundness_violations();
    completeness_discrepancies += cv.discrepancies.size() - cv.soundness_violations();

    json file_report = report_to_json(cv);
    file_report["soundness_samples"] = sound.samples;
    json violations = json::array();
    for (const auto& v : sound.violations)
      violations.push_back({{"sample", v.sample_index}, {"what", v.what}, {"R", matrix_to_json(v.r)}});
    file_report["soundness_violations"] = std::move(violations);
    const std::string path = out_dir + "/" + report_filename(id);
    std::ofstream out(path);
    out << file_report.dump(2) << "\n";

    json line;
    line["algebra"] = catalog_label(id);
    line["samples"] = samples;
    line["soundness_violations"] = sound.violations.size();
    line["agreements"] = cv.agreements;
    line["discrepancies"] = cv.discrepancies.size();
    line["report"] = path;
    summary.push_back(line);
    if (!as_json) {
      std::cout << catalog_label(id) << ": soundness "
                << (sound.ok() ? "ok" : std::to_string(sound.violations.size()) + " VIOLATIONS")
                << ", cross-validation " << cv.agreements << "/" << cv.samples << " agree";
      if (!cv.discrepancies.empty())
        std::cout << " (" << cv.discrepancies.size() << " discrepancies -> " << path << ")";
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << summary.dump(2) << "\n";
  if (!as_json) {
    std::cout << "total: " << grid.size() << " grid points, " << soundness_violations
              << " soundness violations, " << completeness_discrepancies
              << " completeness discrepancies\n";
  }
  if (soundness_violations > 0) return kExitMismatch;
  if (strict && completeness_discrepancies > 0) return kExitMismatch;
  return kExitOk;
}

struct GoldenChecker {
  bool as_json;
  bool corrupt;  // negative control: flip one expectation to prove detection
  json results = json::array();
  int failures = 0;

  void check(const std::string& what, bool pass) {
    if (!as_json)
      std::cout << (pass ? "ok" : "MISMATCH") << ": " << what << "\n";
    results.push_back({{"assertion", what}, {"pass", pass}});
    if (!pass) ++failures;
  }
};

int cmd_examples(bool as_json, bool corrupt) {
  GoldenChecker t{as_json, corrupt};
  const Matrix ricci_golden = Matrix::diagonal(
      {make_rational(-1, 2), make_rational(1, 2), make_rational(1, 2), Rational(0)});
  const Rational eta_golden = corrupt ? Rational(2) : make_rational(3, 2);

  {
    // soliton example on g3.1+g1
    const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
    const InnerProduct ip(Matrix::from_rows(
        {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}));
    t.check("example 1: signature (2,2)", ip.signature() == Signature{2, 2});
    const Connection conn = levi_civita(g, ip);
    const CurvatureTensor ct = curvature(g, conn);
    const RicciData rd = ricci(g, ip, ct);
    t.check("example 1: Ric = diag(-1/2, 1/2, 1/2, 0)", rd.ricci_op == ricci_golden);
    const SolitonResult sol = soliton_solve(g, rd.ricci_op);
    t.check("example 1: algebraic Ricci soliton", sol.verdict == SolitonResult::Verdict::Soliton);
    t.check("example 1: eta = 3/2", sol.eta && *sol.eta == eta_golden);
    const Matrix d_golden =
        Matrix::diagonal({Rational(-2), Rational(-1), Rational(-1), make_rational(-3, 2)});
    t.check("example 1: D = diag(-2, -1, -1, -3/2)", sol.d && *sol.d == d_golden);
    t.check("example 1: D is a derivation", sol.d && is_derivation(g, *sol.d));
    const PredicateOutcome pred = theorem_predicate({Family::G31PlusG1, {}, {}}, rd.ricci_op);
    t.check("example 1: classification conditions hold", pred.holds);
    t.check("example 1: theorem eta matches the solver",
            pred.holds && pred.eta && *pred.eta == *sol.eta);

    // same example in its orthonormal basis: [v2,v3] = -v1, G = diag(1,1,-1,-1)
    LieAlgebra ortho(4, "g3.1+g1 (orthonormal basis)");
    ortho.set_bracket(1, 2, {-1, 0, 0, 0});
    const InnerProduct ip2(Matrix::diagonal({1, 1, -1, -1}));
    const Connection fast = levi_civita_orthonormal(ortho, ip2);
    t.check("example 1: nabla_{v1} v2 = -1/2 v3", fast.gamma(0, 1, 2) == make_rational(-1, 2));
    t.check("example 1: nabla_{v2} v3 = -1/2 v1", fast.gamma(1, 2, 0) == make_rational(-1, 2));
    t.check("example 1: nabla_{v1} v4 = 0", [&] {
      for (std::size_t k = 0; k < 4; ++k)
        if (fast.gamma(0, 3, k) != 0) return false;
      return true;
    }());
    t.check("example 1: orthonormal fast path equals the Koszul route",
            fast == levi_civita(ortho, ip2));
    const CurvatureTensor ct2 = curvature(ortho, fast);
    t.check("example 1: orthonormal-basis Ricci operator matches",
            ricci_orthonormal(ortho, ip2, ct2).ricci_op == ricci_golden);
  }
  {
    // flat example on g3.1+g1
    const LieAlgebra g = catalog_get({Family::G31PlusG1, {}, {}});
    const InnerProduct ip(Matrix::from_rows(
        {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
    t.check("example 2: signature (2,2)", ip.signature() == Signature{2, 2});
    const CurvatureTensor ct = curvature(g, levi_civita(g, ip));
    bool all_zero = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (!ct.at(i, j).is_zero()) all_zero = false;
    t.check("example 2: all six curvature endomorphisms vanish", all_zero);
    t.check("example 2: flat", is_flat(ct));
    const RicciData rd = ricci(g, ip, ct);
    t.check("example 2: Ric = 0", rd.ricci_op.is_zero());
    const SolitonResult sol = soliton_solve(g, rd.ricci_op);
    t.check("example 2: trivial soliton, eta = 0",
            sol.verdict == SolitonResult::Verdict::Soliton && *sol.eta == 0);
    t.check("example 2: D = 0", sol.d && sol.d->is_zero());
  }
  if (as_json) std::cout << t.results.dump(2) << "\n";
  if (t.failures > 0) {
    if (!as_json) std::cerr << "golden mismatch: " << t.failures << " assertion(s) failed\n";
    return kExitMismatch;
  }
  if (!as_json) std::cout << "all golden assertions hold\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic algebraic Ricci soliton analyzer for four-dimensional "
               "pseudo-Riemannian Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_path, metric_path;
  bool analyze_json = false;
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "run the full pipeline on an algebra file and a metric file");
  analyze_cmd->add_option("algebra", algebra_path, "Lie algebra JSON file")->required();
  analyze_cmd->add_option("metric", metric_path, "metric JSON file")->required();
  analyze_cmd->add_flag("--json", analyze_json, "machine-readable output");

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "inspect the built-in catalog");
  catalog_cmd->require_subcommand(1);
  bool list_json = false;
  CLI::App* list_cmd = catalog_cmd->add_subcommand("list", "list the 24 families");
  list_cmd->add_flag("--json", list_json, "machine-readable output");
  std::string show_id;
  std::optional<std::string> show_alpha, show_beta;
  bool show_json = false;
  CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "print one family");
  show_cmd->add_option("id", show_id, "family identifier, e.g. g4.8^a")->required();
  show_cmd->add_option("--alpha", show_alpha, "alpha as p/q");
  show_cmd->add_option("--beta", show_beta, "beta as p/q");
  show_cmd->add_flag("--json", show_json, "machine-readable output");

  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::string verify_id, out_dir = "verify-reports";
  bool strict = false, verify_json = false;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "sweep the catalog: theorem soundness plus solver cross-validation");
  verify_cmd->add_option("--samples", samples, "samples per grid point")->check(CLI::PositiveNumber);
  CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--id", verify_id, "restrict to one family (prefix form allowed)");
  verify_cmd->add_flag("--strict", strict, "fail on completeness discrepancies too");
  verify_cmd->add_option("--out", out_dir, "directory for per-family JSON reports");
  verify_cmd->add_flag("--json", verify_json, "machine-readable summary");

  bool examples_json = false, examples_corrupt = false;
  CLI::App* examples_cmd =
      app.add_subcommand("examples", "reproduce the built-in worked examples and check goldens");
  examples_cmd->add_flag("--json", examples_json, "machine-readable output");
  examples_cmd
      ->add_flag("--selftest-corrupt", examples_corrupt,
                 "negative control: corrupt one golden value to prove mismatch detection")
      ->group("");  // hidden

  try {
    app.parse(argc, argv);

    if (*analyze_cmd) return cmd_analyze(algebra_path, metric_path, analyze_json);
    if (*list_cmd) return cmd_catalog_list(list_json);
    if (*show_cmd) return cmd_catalog_show(show_id, show_alpha, show_beta, show_json);
    if (*verify_cmd) {
      if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("SOLITON_FORGE_SEED")) seed = std::strtoull(env, nullptr, 10);
      }
      return cmd_verify(samples, seed, verify_id, strict, out_dir, verify_json);
    }
    if (*examples_cmd) return cmd_examples(examples_json, examples_corrupt);
    return kExitInternal;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnknownFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ParamOutOfRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const GoldenMismatchError& e) {
    std::cerr << "golden mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
