#pragma once

// Shared fixtures for the test executables.

#include <string>

#include "qcat/io.hpp"
#include "qcat/random.hpp"

#ifndef QCAT_DATA_DIR
#define QCAT_DATA_DIR "data"
#endif

namespace fx {

using namespace qcat;

inline Value q(const char* s) { return Value::parse_exact(s); }
inline Value q(std::int64_t n, std::int64_t d) { return Value(Rational(n, d)); }

inline std::string data_path(const std::string& name) { return std::string(QCAT_DATA_DIR) + "/" + name; }

inline EnrichedCategory load(const std::string& name) { return category_from_json(read_json_file(data_path(name))); }

inline EnrichedCategory a2() { return load("a2.json"); }
inline EnrichedCategory d2() { return load("d2.json"); }
inline EnrichedCategory g5() { return load("g5.json"); }

inline ValueGrid luk_grid(unsigned n) { return grid_validate(uniform_points(n), TNorm::lukasiewicz()); }
inline ValueGrid godel_grid(unsigned n) { return grid_validate(uniform_points(n), TNorm::godel()); }

inline Weight w(std::initializer_list<const char*> vs) {
  Weight out;
  for (auto v : vs) out.values.push_back(q(v));
  return out;
}
inline Coweight cw(std::initializer_list<const char*> vs) {
  Coweight out;
  for (auto v : vs) out.values.push_back(q(v));
  return out;
}

/// Every grid-valued n×m matrix, row-major, passed to visit.
template <class F>
void for_each_grid_rel(const ValueGrid& g, std::size_t n, std::size_t m, F&& visit) {
  std::vector<std::size_t> idx(n * m, 0);
  for (;;) {
    std::vector<Value> e;
    for (auto i : idx) e.push_back(g[i]);
    visit(Rel(n, m, std::move(e)));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == g.size()) idx[k++] = 0;
    if (k == idx.size()) return;
  }
}

inline Rel random_rel(const ValueGrid& g, std::size_t n, std::size_t m, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::vector<Value> e;
  for (std::size_t i = 0; i < n * m; ++i) e.push_back(g[pick(rng)]);
  return Rel(n, m, std::move(e));
}

}  // namespace fx
