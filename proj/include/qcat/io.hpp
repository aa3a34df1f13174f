#pragma once

// JSON forms of categories, weights and posets. Exact values are written as
// "p/q" strings, float values as numbers.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qcat/presheaf.hpp"

namespace qcat {

using json = nlohmann::json;  // keys print sorted

inline json value_to_json(const Value& v) {
  if (v.is_exact()) return v.str();
  return v.to_double();
}

/// Strings are exact; numbers are float unless `prefer` is exact, in which
/// case their decimal text is read exactly.
inline Value value_from_json(const json& j, Mode prefer) {
  try {
    if (j.is_string()) {
      Value v = Value::parse_exact(j.get<std::string>());
      return prefer == Mode::Float ? v.in_mode(Mode::Float) : v;
    }
    if (j.is_number()) {
      if (prefer == Mode::Exact) return Value::parse_exact(j.dump());
      return Value(j.get<double>());
    }
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("expected a value, got " + j.dump());
}

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

namespace detail {
inline const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

/// Exact when a grid is given or every entry is a string.
inline Mode infer_mode(const json& j) {
  if (j.contains("grid") && !j.at("grid").is_null()) return Mode::Exact;
  for (const auto& row : member(j, "hom"))
    for (const auto& e : row)
      if (!e.is_string()) return Mode::Float;
  return Mode::Exact;
}
}  // namespace detail

/// Parses the category schema without validating the axioms.
inline EnrichedCategory category_from_json(const json& j, std::optional<Mode> mode = std::nullopt) {
  try {
    const TNorm t = TNorm::parse(detail::member(j, "tnorm").get<std::string>());
    const Mode m = mode.value_or(detail::infer_mode(j));
    std::optional<ValueGrid> grid;
    if (j.contains("grid") && !j.at("grid").is_null()) {
      if (m != Mode::Exact) throw ParseError("a grid requires exact mode");
      std::vector<Value> pts;
      for (const auto& p : j.at("grid")) pts.push_back(value_from_json(p, Mode::Exact));
      grid = grid_validate(std::move(pts), t);
    }
    const json& hom = detail::member(j, "hom");
    if (!hom.is_array()) throw ParseError("'hom' must be an array of rows");
    std::vector<std::vector<Value>> rows;
    for (const auto& row : hom) {
      if (!row.is_array()) throw ParseError("'hom' rows must be arrays");
      std::vector<Value> r;
      for (const auto& e : row) r.push_back(value_from_json(e, m));
      rows.push_back(std::move(r));
    }
    std::vector<std::string> names;
    if (j.contains("names") && !j.at("names").is_null())
      for (const auto& n : j.at("names")) names.push_back(n.get<std::string>());
    Rel h = Rel::from_rows(rows);
    if (h.rows() != h.cols()) throw ParseError("'hom' must be square");
    if (!names.empty() && names.size() != h.rows()) throw ParseError("'names' does not match the hom size");
    return EnrichedCategory(t, std::move(h), std::move(grid), std::move(names));
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline json category_to_json(const EnrichedCategory& c) {
  json j;
  j["tnorm"] = c.tnorm().str();
  if (c.grid()) {
    json g = json::array();
    for (const auto& p : c.grid()->points()) g.push_back(value_to_json(p));
    j["grid"] = g;
  } else {
    j["grid"] = nullptr;
  }
  j["names"] = c.names();
  json hom = json::array();
  for (std::size_t x = 0; x < c.size(); ++x) {
    json row = json::array();
    for (std::size_t y = 0; y < c.size(); ++y) row.push_back(value_to_json(c(x, y)));
    hom.push_back(row);
  }
  j["hom"] = hom;
  return j;
}

inline std::vector<Value> values_from_json(const json& j, Mode m) {
  try {
    const json& vs = detail::member(j, "values");
    if (!vs.is_array()) throw ParseError("'values' must be an array");
    std::vector<Value> out;
    for (const auto& v : vs) out.push_back(value_from_json(v, m));
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  }
}

inline json values_to_json(const std::vector<Value>& vs, const std::string& base = "") {
  json j;
  j["base"] = base;
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(value_to_json(v));
  j["values"] = arr;
  return j;
}

inline FinitePoset poset_from_json(const json& j) {
  try {
    const auto n = detail::member(j, "n").get<std::size_t>();
    const json& leq = detail::member(j, "leq");
    std::vector<std::vector<bool>> r;
    for (const auto& row : leq) {
      std::vector<bool> b;
      for (const auto& e : row) b.push_back(e.get<bool>());
      r.push_back(std::move(b));
    }
    if (r.size() != n) throw ParseError("'leq' does not have n rows");
    return FinitePoset(std::move(r));
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline json poset_to_json(const FinitePoset& p) {
  json j;
  j["n"] = p.size();
  json leq = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < p.size(); ++k) row.push_back(p.leq(i, k));
    leq.push_back(row);
  }
  j["leq"] = leq;
  return j;
}

}  // namespace qcat
