#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soliton_forge/errors.hpp"
#include "soliton_forge/lie_algebra.hpp"
#include "soliton_forge/rational.hpp"

namespace sforge {

/// The 24 four-dimensional Lie algebra families, in table order:
/// the 12 decomposable ones followed by the 12 indecomposable ones.
enum class Family {
  FourG1,          // 4g1
  G21Plus2G1,      // g2.1+2g1
  TwoG21,          // 2g2.1
  G31PlusG1,       // g3.1+g1
  G32PlusG1,       // g3.2+g1
  G33PlusG1,       // g3.3+g1
  G34ZeroPlusG1,   // g3.4^0+g1
  G34AlphaPlusG1,  // g3.4^a+g1
  G35ZeroPlusG1,   // g3.5^0+g1
  G35AlphaPlusG1,  // g3.5^a+g1
  G36PlusG1,       // g3.6+g1
  G37PlusG1,       // g3.7+g1
  G41,             // g4.1
  G42Alpha,        // g4.2^a
  G43,             // g4.3
  G44,             // g4.4
  G45AlphaBeta,    // g4.5^a,b
  G46AlphaBeta,    // g4.6^a,b
  G47,             // g4.7
  G48MinusOne,     // g4.8^-1
  G48Alpha,        // g4.8^a
  G49Zero,         // g4.9^0
  G49Alpha,        // g4.9^a
  G410,            // g4.10
};

struct FamilyInfo {
  Family family;
  std::string_view id;          // canonical ASCII identifier
  bool has_alpha;
  bool has_beta;
  std::string_view constraint;  // parameter range condition
  std::string_view brackets;    // nonzero commutators, display form
};

inline const std::vector<FamilyInfo>& catalog_families() {
  static const std::vector<FamilyInfo> table = {
      {Family::FourG1, "4g1", false, false, "", "none (abelian)"},
      {Family::G21Plus2G1, "g2.1+2g1", false, false, "", "[e1,e2] = e1"},
      {Family::TwoG21, "2g2.1", false, false, "", "[e1,e2] = e1, [e3,e4] = e3"},
      {Family::G31PlusG1, "g3.1+g1", false, false, "", "[e2,e3] = e1"},
      {Family::G32PlusG1, "g3.2+g1", false, false, "", "[e2,e3] = e1 - e2, [e3,e1] = e1"},
      {Family::G33PlusG1, "g3.3+g1", false, false, "", "[e2,e3] = -e2, [e3,e1] = e1"},
      {Family::G34ZeroPlusG1, "g3.4^0+g1", false, false, "", "[e2,e3] = e1, [e3,e1] = -e2"},
      {Family::G34AlphaPlusG1, "g3.4^a+g1", true, false, "alpha > 0, alpha != 1",
       "[e2,e3] = e1 - a*e2, [e3,e1] = a*e1 - e2"},
      {Family::G35ZeroPlusG1, "g3.5^0+g1", false, false, "", "[e2,e3] = e1, [e3,e1] = e2"},
      {Family::G35AlphaPlusG1, "g3.5^a+g1", true, false, "alpha > 0",
       "[e2,e3] = e1 - a*e2, [e3,e1] = a*e1 + e2"},
      {Family::G36PlusG1, "g3.6+g1", false, false, "",
       "[e2,e3] = e1, [e3,e1] = e2, [e1,e2] = -e3"},
      {Family::G37PlusG1, "g3.7+g1", false, false, "",
       "[e2,e3] = e1, [e3,e1] = e2, [e1,e2] = e3"},
      {Family::G41, "g4.1", false, false, "", "[e2,e4] = e1, [e3,e4] = e2"},
      {Family::G42Alpha, "g4.2^a", true, false, "alpha != 0",
       "[e1,e4] = a*e1, [e2,e4] = e2, [e3,e4] = e2 + e3"},
      {Family::G43, "g4.3", false, false, "", "[e1,e4] = e1, [e3,e4] = e2"},
      {Family::G44, "g4.4", false, false, "",
       "[e1,e4] = e1, [e2,e4] = e1 + e2, [e3,e4] = e2 + e3"},
      {Family::G45AlphaBeta, "g4.5^a,b", true, true,
       "-1 < alpha <= beta <= 1 with alpha*beta != 0, or alpha = -1 with 0 < beta <= 1",
       "[e1,e4] = e1, [e2,e4] = b*e2, [e3,e4] = a*e3"},
      {Family::G46AlphaBeta, "g4.6^a,b", true, true, "alpha > 0, beta in R",
       "[e1,e4] = a*e1, [e2,e4] = b*e2 - e3, [e3,e4] = e2 + b*e3"},
      {Family::G47, "g4.7", false, false, "",
       "[e1,e4] = 2*e1, [e2,e4] = e2, [e3,e4] = e2 + e3, [e2,e3] = e1"},
      {Family::G48MinusOne, "g4.8^-1", false, false, "",
       "[e2,e3] = e1, [e2,e4] = e2, [e3,e4] = -e3"},
      {Family::G48Alpha, "g4.8^a", true, false, "-1 < alpha <= 1",
       "[e1,e4] = (1+a)*e1, [e2,e4] = e2, [e3,e4] = a*e3, [e2,e3] = e1"},
      {Family::G49Zero, "g4.9^0", false, false, "",
       "[e2,e3] = e1, [e2,e4] = -e3, [e3,e4] = e2"},
      {Family::G49Alpha, "g4.9^a", true, false, "alpha > 0",
       "[e1,e4] = 2a*e1, [e2,e4] = a*e2 - e3, [e3,e4] = e2 + a*e3, [e2,e3] = e1"},
      {Family::G410, "g4.10", false, false, "",
       "[e1,e3] = e1, [e2,e3] = e2, [e1,e4] = -e2, [e2,e4] = e1"},
  };
  return table;
}

inline const FamilyInfo& family_info(Family f) {
  for (const auto& info : catalog_families())
    if (info.family == f) return info;
  throw UnknownFamilyError("unknown family enum value");
}

inline std::string family_id(Family f) { return std::string(family_info(f).id); }

/// Accepts the canonical ASCII id and the unicode spelling used in print
/// (⊕ for +, α/β for a/b, − for -).
inline Family family_from_string(std::string_view raw) {
  std::string s;
  for (std::size_t i = 0; i < raw.size();) {
    if (raw.compare(i, 3, "⊕") == 0) {  // ⊕
      s += '+';
      i += 3;
    } else if (raw.compare(i, 2, "α") == 0) {  // α
      s += 'a';
      i += 2;
    } else if (raw.compare(i, 2, "β") == 0) {  // β
      s += 'b';
      i += 2;
    } else if (raw.compare(i, 3, "−") == 0) {  // −
      s += '-';
      i += 3;
    } else {
      s += raw[i];
      ++i;
    }
  }
  for (const auto& info : catalog_families())
    if (info.id == s) return info.family;
  throw UnknownFamilyError("unknown Lie algebra family '" + std::string(raw) +
                           "' (try `catalog list`)");
}

struct CatalogId {
  Family family;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

inline void check_params(const CatalogId& id) {
  const FamilyInfo& info = family_info(id.family);
  const auto reject = [&](const std::string& what) {
    throw ParamOutOfRangeError(std::string(info.id) + ": " + what + " (family requires " +
                               std::string(info.constraint) + ")");
  };
  if (info.has_alpha && !id.alpha) reject("missing parameter alpha");
  if (!info.has_alpha && id.alpha) throw ParamOutOfRangeError(std::string(info.id) + ": family takes no alpha parameter");
  if (info.has_beta && !id.beta) reject("missing parameter beta");
  if (!info.has_beta && id.beta) throw ParamOutOfRangeError(std::string(info.id) + ": family takes no beta parameter");
  if (!info.has_alpha) return;
  const Rational& a = *id.alpha;
  switch (id.family) {
    case Family::G34AlphaPlusG1:
      if (!(a > 0) || a == 1) reject("alpha = " + a.str() + " out of range");
      break;
    case Family::G35AlphaPlusG1:
    case Family::G49Alpha:
      if (!(a > 0)) reject("alpha = " + a.str() + " out of range");
      break;
    case Family::G42Alpha:
      if (a == 0) reject("alpha = 0 out of range");
      break;
    case Family::G48Alpha:
      if (!(a > -1 && a <= 1)) reject("alpha = " + a.str() + " out of range");
      break;
    case Family::G46AlphaBeta:
      if (!(a > 0)) reject("alpha = " + a.str() + " out of range");
      break;
    case Family::G45AlphaBeta: {
      const Rational& b = *id.beta;
      const bool main_branch = a > -1 && a <= b && b <= 1 && a * b != 0;
      const bool edge_branch = a == -1 && b > 0 && b <= 1;
      if (!main_branch && !edge_branch)
        reject("(alpha, beta) = (" + a.str() + ", " + b.str() + ") out of range");
      break;
    }
    default:
      break;
  }
}

inline std::string catalog_label(const CatalogId& id) {
  std::string s = family_id(id.family);
  if (id.alpha) s += " a=" + id.alpha->str();
  if (id.beta) s += " b=" + id.beta->str();
  return s;
}

inline LieAlgebra catalog_get(const CatalogId& id) {
  check_params(id);
  LieAlgebra g(4, catalog_label(id));
  const Rational zero(0), one(1);
  const Rational a = id.alpha.value_or(zero);
  const Rational b = id.beta.value_or(zero);
  switch (id.family) {
    case Family::FourG1:
      break;
    case Family::G21Plus2G1:
      g.set_bracket(0, 1, {1, 0, 0, 0});
      break;
    case Family::TwoG21:
      g.set_bracket(0, 1, {1, 0, 0, 0});
      g.set_bracket(2, 3, {0, 0, 1, 0});
      break;
    case Family::G31PlusG1:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      break;
    case Family::G32PlusG1:
      g.set_bracket(1, 2, {1, -1, 0, 0});
      g.set_bracket(0, 2, {-1, 0, 0, 0});  // [e3,e1] = e1
      break;
    case Family::G33PlusG1:
      g.set_bracket(1, 2, {0, -1, 0, 0});
      g.set_bracket(0, 2, {-1, 0, 0, 0});
      break;
    case Family::G34ZeroPlusG1:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      g.set_bracket(0, 2, {0, 1, 0, 0});  // [e3,e1] = -e2
      break;
    case Family::G34AlphaPlusG1:
      g.set_bracket(1, 2, {1, -a, 0, 0});
      g.set_bracket(0, 2, {-a, 1, 0, 0});  // [e3,e1] = a*e1 - e2
      break;
    case Family::G35ZeroPlusG1:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      g.set_bracket(0, 2, {0, -1, 0, 0});  // [e3,e1] = e2
      break;
    case Family::G35AlphaPlusG1:
      g.set_bracket(1, 2, {1, -a, 0, 0});
      g.set_bracket(0, 2, {-a, -1, 0, 0});  // [e3,e1] = a*e1 + e2
      break;
    case Family::G36PlusG1:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      g.set_bracket(0, 2, {0, -1, 0, 0});
      g.set_bracket(0, 1, {0, 0, -1, 0});
      break;
    case Family::G37PlusG1:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      g.set_bracket(0, 2, {0, -1, 0, 0});
      g.set_bracket(0, 1, {0, 0, 1, 0});
      break;
    case Family::G41:
      g.set_bracket(1, 3, {1, 0, 0, 0});
      g.set_bracket(2, 3, {0, 1, 0, 0});
      break;
    case Family::G42Alpha:
      g.set_bracket(0, 3, {a, 0, 0, 0});
      g.set_bracket(1, 3, {0, 1, 0, 0});
      g.set_bracket(2, 3, {0, 1, 1, 0});
      break;
    case Family::G43:
      g.set_bracket(0, 3, {1, 0, 0, 0});
      g.set_bracket(2, 3, {0, 1, 0, 0});
      break;
    case Family::G44:
      g.set_bracket(0, 3, {1, 0, 0, 0});
      g.set_bracket(1, 3, {1, 1, 0, 0});
      g.set_bracket(2, 3, {0, 1, 1, 0});
      break;
    case Family::G45AlphaBeta:
      g.set_bracket(0, 3, {1, 0, 0, 0});
      g.set_bracket(1, 3, {0, b, 0, 0});
      g.set_bracket(2, 3, {0, 0, a, 0});
      break;
    case Family::G46AlphaBeta:
      g.set_bracket(0, 3, {a, 0, 0, 0});
      g.set_bracket(1, 3, {0, b, -1, 0});
      g.set_bracket(2, 3, {0, 1, b, 0});
      break;
    case Family::G47:
      g.set_bracket(0, 3, {2, 0, 0, 0});
      g.set_bracket(1, 3, {0, 1, 0, 0});
      g.set_bracket(2, 3, {0, 1, 1, 0});
      g.set_bracket(1, 2, {1, 0, 0, 0});
      break;
    case Family::G48MinusOne:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      g.set_bracket(1, 3, {0, 1, 0, 0});
      g.set_bracket(2, 3, {0, 0, -1, 0});
      break;
    case Family::G48Alpha:
      g.set_bracket(0, 3, {one + a, 0, 0, 0});
      g.set_bracket(1, 3, {0, 1, 0, 0});
      g.set_bracket(2, 3, {0, 0, a, 0});
      g.set_bracket(1, 2, {1, 0, 0, 0});
      break;
    case Family::G49Zero:
      g.set_bracket(1, 2, {1, 0, 0, 0});
      g.set_bracket(1, 3, {0, 0, -1, 0});
      g.set_bracket(2, 3, {0, 1, 0, 0});
      break;
    case Family::G49Alpha:
      g.set_bracket(0, 3, {2 * a, 0, 0, 0});
      g.set_bracket(1, 3, {0, a, -1, 0});
      g.set_bracket(2, 3, {0, 1, a, 0});
      g.set_bracket(1, 2, {1, 0, 0, 0});
      break;
    case Family::G410:
      g.set_bracket(0, 2, {1, 0, 0, 0});
      g.set_bracket(1, 2, {0, 1, 0, 0});
      g.set_bracket(0, 3, {0, -1, 0, 0});
      g.set_bracket(1, 3, {1, 0, 0, 0});
      break;
  }
  if (!jacobi_check(g).ok())
    throw std::logic_error("catalog entry " + catalog_label(id) + " violates Jacobi");
  return g;
}

}  // namespace sforge
