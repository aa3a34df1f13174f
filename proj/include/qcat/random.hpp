#pragma once

// Seeded random instances on a value grid.

#include <random>
#include <vector>

#include "qcat/presheaf.hpp"

namespace qcat {

using Rng = std::mt19937_64;

namespace detail {
inline const Value& random_point(const ValueGrid& g, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  return g[pick(rng)];
}

/// Least transitive relation above m (m reflexive), by iterating m ∨ m∘m.
inline Rel transitive_closure(const TNorm& t, Rel m) {
  for (;;) {
    Rel next = compose(t, m, m);
    bool changed = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(i, j) < next(i, j)) {
          m(i, j) = next(i, j);
          changed = true;
        }
    if (!changed) return m;
  }
}
}  // namespace detail

/// A random category on n elements with grid-valued homs. Each off-diagonal
/// entry is 0 with probability `sparsity`, otherwise a uniform grid point;
/// the result is the transitive closure.
inline EnrichedCategory random_category(const ValueGrid& g, std::size_t n, Rng& rng, double sparsity = 0.5) {
  std::bernoulli_distribution zero(sparsity);
  Rel m(n, n, g.bottom());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = i == j ? g.top() : (zero(rng) ? g.bottom() : detail::random_point(g, rng));
  return EnrichedCategory(g.tnorm(), detail::transitive_closure(g.tnorm(), std::move(m)), g);
}

/// A random grid weight: the closure of a random vector.
inline Weight random_weight(const EnrichedCategory& x, Rng& rng) {
  const ValueGrid& g = x.require_grid();
  std::vector<Value> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(detail::random_point(g, rng));
  return weight_closure(x, v);
}

inline Coweight random_coweight(const EnrichedCategory& x, Rng& rng) {
  const ValueGrid& g = x.require_grid();
  std::vector<Value> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(detail::random_point(g, rng));
  return coweight_closure(x, v);
}

struct RandomFunctor {
  EnrichedCategory source, target;
  FiniteMap map;
};

/// A random target Y, a random map f and a source X below the pullback
/// Y(f−,f−); with probability `full` the source is the pullback itself, which
/// makes f fully faithful.
inline RandomFunctor random_functor(const ValueGrid& g, std::size_t n_source, std::size_t n_target, Rng& rng,
                                    double full = 0.5) {
  RandomFunctor out;
  out.target = random_category(g, n_target, rng);
  std::uniform_int_distribution<std::size_t> pick(0, n_target - 1);
  for (std::size_t i = 0; i < n_source; ++i) out.map.push_back(pick(rng));
  Rel pull(n_source, n_source, g.bottom());
  for (std::size_t a = 0; a < n_source; ++a)
    for (std::size_t b = 0; b < n_source; ++b) pull(a, b) = out.target(out.map[a], out.map[b]);
  if (!std::bernoulli_distribution(full)(rng)) {
    for (std::size_t a = 0; a < n_source; ++a)
      for (std::size_t b = 0; b < n_source; ++b) {
        if (a == b) continue;
        std::vector<Value> below;
        for (const auto& p : g.points())
          if (p <= pull(a, b)) below.push_back(p);
        std::uniform_int_distribution<std::size_t> k(0, below.size() - 1);
        pull(a, b) = below[k(rng)];
      }
    pull = detail::transitive_closure(g.tnorm(), std::move(pull));
  }
  out.source = EnrichedCategory(g.tnorm(), std::move(pull), g);
  return out;
}

}  // namespace qcat
