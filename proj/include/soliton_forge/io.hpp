#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "soliton_forge/cross_validate.hpp"
#include "soliton_forge/errors.hpp"
#include "soliton_forge/lie_algebra.hpp"
#include "soliton_forge/matrix.hpp"
#include "soliton_forge/rational.hpp"

namespace sforge {

using nlohmann::json;

inline json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (!j.is_string())
    throw ParseError(where + ": rationals are JSON strings \"p\" or \"p/q\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw ParseError(where + ": rows must be non-empty arrays");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(where + ": row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = rational_from_json(j[i][c], where + "[" + std::to_string(i + 1) + "][" +
                                                std::to_string(c + 1) + "]");
  }
  return m;
}

/// Lie algebra file:
/// { "dim": n, "name": str,
///   "brackets": [ {"i": int, "j": int, "coeffs": {"k": "p/q", ...}}, ... ] }
/// Indices are 1-based and i < j is required.
inline LieAlgebra algebra_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_unsigned())
    throw ParseError(where + ": missing or bad \"dim\"");
  const std::size_t n = j["dim"].get<std::size_t>();
  if (n == 0) throw ParseError(where + ": dim must be positive");
  LieAlgebra g(n, j.value("name", std::string{}));
  if (!j.contains("brackets")) return g;
  if (!j["brackets"].is_array()) throw ParseError(where + ": \"brackets\" must be an array");
  std::size_t idx = 0;
  for (const json& entry : j["brackets"]) {
    ++idx;
    const std::string ctx = where + ": brackets[" + std::to_string(idx) + "]";
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs"))
      throw ParseError(ctx + ": need fields i, j, coeffs");
    const long long i = entry["i"].get<long long>();
    const long long jj = entry["j"].get<long long>();
    if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(jj) > n)
      throw ParseError(ctx + ": indices must lie in 1.." + std::to_string(n));
    if (i >= jj) throw ParseError(ctx + ": i < j required (antisymmetry is structural)");
    std::vector<Rational> coeffs(n);
    if (!entry["coeffs"].is_object()) throw ParseError(ctx + ": coeffs must be an object");
    for (const auto& [key, value] : entry["coeffs"].items()) {
      long long k = 0;
      try {
        k = std::stoll(key);
      } catch (...) {
        throw ParseError(ctx + ": coefficient key '" + key + "' is not an index");
      }
      if (k < 1 || static_cast<std::size_t>(k) > n)
        throw ParseError(ctx + ": coefficient index " + key + " out of range");
      coeffs[static_cast<std::size_t>(k - 1)] = rational_from_json(value, ctx + ".coeffs[" + key + "]");
    }
    g.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1),
                  std::move(coeffs));
  }
  return g;
}

inline json algebra_to_json(const LieAlgebra& g) {
  json out;
  out["dim"] = g.dim();
  out["name"] = g.name();
  json brackets = json::array();
  for (const auto& [ij, coeffs] : g.stored()) {
    json entry;
    entry["i"] = ij.first + 1;
    entry["j"] = ij.second + 1;
    json cs = json::object();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (coeffs[k] != 0) cs[std::to_string(k + 1)] = coeffs[k].str();
    entry["coeffs"] = std::move(cs);
    brackets.push_back(std::move(entry));
  }
  out["brackets"] = std::move(brackets);
  return out;
}

/// Metric file: { "g": [[ "p/q", ... ], ...] }, full symmetric matrix.
inline Matrix metric_from_json(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("g")) throw ParseError(where + ": expected { \"g\": [[...]] }");
  const Matrix m = matrix_from_json(j["g"], where + ".g");
  if (!m.is_square()) throw ValidationError(where + ": metric matrix must be square");
  if (!m.is_symmetric()) throw ValidationError(where + ": metric matrix is not symmetric");
  return m;
}

inline json metric_to_json(const Matrix& m) { return json{{"g", matrix_to_json(m)}}; }

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline LieAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json_file(path), path);
}

inline Matrix load_metric(const std::string& path) {
  return metric_from_json(load_json_file(path), path);
}

inline json catalog_id_to_json(const CatalogId& id) {
  json out;
  out["family"] = family_id(id.family);
  json params = json::object();
  if (id.alpha) params["alpha"] = id.alpha->str();
  if (id.beta) params["beta"] = id.beta->str();
  out["params"] = std::move(params);
  return out;
}

inline json report_to_json(const CrossValidationReport& report) {
  json out;
  out["algebra"] = family_id(report.id.family);
  json params = json::object();
  if (report.id.alpha) params["alpha"] = report.id.alpha->str();
  if (report.id.beta) params["beta"] = report.id.beta->str();
  out["params"] = std::move(params);
  out["samples"] = report.samples;
  out["agreements"] = report.agreements;
  json ds = json::array();
  for (const auto& d : report.discrepancies) {
    json item;
    item["sample"] = d.sample_index;
    item["R"] = matrix_to_json(d.r);
    item["predicate"] = d.predicate;
    item["solver"] = to_string(d.solver);
    ds.push_back(std::move(item));
  }
  out["discrepancies"] = std::move(ds);
  return out;
}

}  // namespace sforge
