#pragma once

// Formal balls (x, r) ordered by (x,r) ⊑ (y,s) iff r ≤ s ⊗ X(x,y), directed
// joins, the way-below distributor and enriched continuity at grid scale.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qcat/classify.hpp"

namespace qcat {

struct FormalBall {
  std::size_t center;
  Value radius;

  friend bool operator==(const FormalBall&, const FormalBall&) = default;
};

inline bool ball_leq(const EnrichedCategory& x, const FormalBall& a, const FormalBall& b) {
  return leq(a.radius, conj(x.tnorm(), b.radius, x(a.center, b.center)));
}

inline bool ball_equivalent(const EnrichedCategory& x, const FormalBall& a, const FormalBall& b) {
  return ball_leq(x, a, b) && ball_leq(x, b, a);
}

inline std::string ball_name(const EnrichedCategory& x, const FormalBall& b) {
  return x.names()[b.center] + "@" + b.radius.str();
}

/// Nonempty, and every two members have an upper bound among the members.
inline bool directed_check(const EnrichedCategory& x, const std::vector<FormalBall>& balls) {
  if (balls.empty()) return false;
  for (const auto& a : balls)
    for (const auto& b : balls) {
      bool bounded = false;
      for (const auto& c : balls)
        if (ball_leq(x, a, c) && ball_leq(x, b, c)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

/// Grid points, the input radii and every s ⊗ X(u,v) for an input radius s.
inline std::vector<Value> candidate_radii(const EnrichedCategory& x, const std::vector<FormalBall>& balls) {
  std::vector<Value> rs = {x.zero(), x.one()};
  if (x.grid()) rs.insert(rs.end(), x.grid()->points().begin(), x.grid()->points().end());
  for (const auto& b : balls) {
    rs.push_back(b.radius);
    for (const auto& h : x.hom().entries()) rs.push_back(conj(x.tnorm(), b.radius, h));
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return rs;
}

/// Every pair has an upper bound somewhere in carrier × candidate radii.
inline bool pairwise_bounded(const EnrichedCategory& x, const std::vector<FormalBall>& balls) {
  const auto rs = candidate_radii(x, balls);
  for (const auto& a : balls)
    for (const auto& b : balls) {
      bool bounded = false;
      for (std::size_t c = 0; c < x.size() && !bounded; ++c)
        for (const auto& r : rs)
          if (ball_leq(x, a, {c, r}) && ball_leq(x, b, {c, r})) {
            bounded = true;
            break;
          }
      if (!bounded) return false;
    }
  return true;
}

/// Least upper bound among carrier × candidate radii, scanning centers then
/// radii in ascending order.
inline std::optional<FormalBall> least_upper_bound(const EnrichedCategory& x, const std::vector<FormalBall>& balls) {
  const auto rs = candidate_radii(x, balls);
  std::vector<FormalBall> uppers;
  for (std::size_t c = 0; c < x.size(); ++c)
    for (const auto& r : rs) {
      FormalBall u{c, r};
      if (std::all_of(balls.begin(), balls.end(), [&](const FormalBall& b) { return ball_leq(x, b, u); }))
        uppers.push_back(u);
    }
  for (const auto& u : uppers)
    if (std::all_of(uppers.begin(), uppers.end(), [&](const FormalBall& v) { return ball_leq(x, u, v); })) return u;
  return std::nullopt;
}

/// The join formula for a finite directed set: a greatest member's center with
/// the largest radius.
inline std::optional<FormalBall> lemma_join(const EnrichedCategory& x, const std::vector<FormalBall>& balls) {
  for (const auto& m : balls)
    if (std::all_of(balls.begin(), balls.end(), [&](const FormalBall& b) { return ball_leq(x, b, m); })) {
      Value r = x.zero();
      for (const auto& b : balls) r = vmax(r, b.radius);
      return FormalBall{m.center, r};
    }
  return std::nullopt;
}

/// Join of a directed family by brute force, cross-checked against the
/// formula; none if the family is not directed.
inline std::optional<FormalBall> directed_join(const EnrichedCategory& x, const std::vector<FormalBall>& balls) {
  if (!directed_check(x, balls)) return std::nullopt;
  auto lub = least_upper_bound(x, balls);
  auto formula = lemma_join(x, balls);
  if (!lub || !formula || !ball_equivalent(x, *lub, *formula))
    throw Error("directed join disagrees with the greatest-member formula");
  return lub;
}

// --- way-below distributor -----------------------------------------------------

/// 𝔴(y,x) = inf over grid ideals φ with a colimit of X(x, colim φ) → φ(y).
inline Rel way_below_distributor(const EnrichedCategory& x, std::size_t bound = kDefaultEnumerationBound) {
  if (x.mode() != Mode::Exact) throw ExactUnsupported("the way-below distributor enumerates grid ideals");
  Rel w(x.size(), x.size(), x.one());
  for (const auto& phi : enumerate_grid_weights(x, bound)) {
    if (!is_ideal(x, phi).ideal) continue;
    auto c = colim(x, phi);
    if (!c) continue;
    for (std::size_t y = 0; y < x.size(); ++y)
      for (std::size_t a = 0; a < x.size(); ++a) w(y, a) = vmin(w(y, a), imp(x.tnorm(), x(a, *c), phi[y]));
  }
  return w;
}

/// 𝔴(−,a) = y(a).
inline bool is_compact(const EnrichedCategory& x, const Rel& w, std::size_t a) {
  for (std::size_t y = 0; y < x.size(); ++y)
    if (!approx_equal(w(y, a), x(y, a))) return false;
  return true;
}

inline Weight way_below_weight(const Rel& w, std::size_t a) {
  Weight out;
  for (std::size_t y = 0; y < w.rows(); ++y) out.values.push_back(w(y, a));
  return out;
}

/// Every 𝔴(−,x) is an ideal with colimit x (up to isomorphism).
inline bool is_continuous_enriched(const EnrichedCategory& x, const Rel& w) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    const Weight wa = way_below_weight(w, a);
    if (!is_ideal(x, wa).ideal) return false;
    auto c = colim(x, wa);
    if (!c || !isomorphic_elements(x, *c, a)) return false;
  }
  return true;
}

struct BallWayBelow {
  bool holds;
  bool heuristic;  // the criterion is only asserted for Archimedean t-norms
};

/// (x,r) ≪ (y,s) iff r < s ⊗ 𝔴(x,y), for s > 0; a radius-0 ball is the bottom.
inline BallWayBelow ball_way_below(const EnrichedCategory& x, const Rel& w, const FormalBall& a, const FormalBall& b) {
  if (b.radius.is_zero()) throw InvalidArgument("ball_way_below needs a positive radius on the upper ball");
  const bool heuristic = !is_archimedean(x.tnorm());
  if (a.radius.is_zero()) return {true, heuristic};
  return {strictly_less(a.radius, conj(x.tnorm(), b.radius, w(a.center, b.center))), heuristic};
}

struct EnrichedCdResult {
  bool holds = false;
  std::optional<std::size_t> witness;  // an x whose 𝔱(−,x) does not have colimit x
  Rel totally_below;                   // 𝔱(y,x)
};

/// 𝔱(y,x) = inf over grid weights φ with a colimit of X(x, colim φ) → φ(y);
/// completely distributive iff colim 𝔱(−,x) ≅ x for every x.
inline EnrichedCdResult is_completely_distributive_enriched(const EnrichedCategory& x,
                                                            std::size_t bound = kDefaultEnumerationBound) {
  if (!is_cocomplete_over_grid(x)) throw InvalidArgument("complete distributivity is decided for grid-cocomplete categories");
  EnrichedCdResult r;
  r.totally_below = Rel(x.size(), x.size(), x.one());
  for (const auto& phi : enumerate_grid_weights(x, bound)) {
    auto c = colim(x, phi);
    if (!c) continue;
    for (std::size_t y = 0; y < x.size(); ++y)
      for (std::size_t a = 0; a < x.size(); ++a)
        r.totally_below(y, a) = vmin(r.totally_below(y, a), imp(x.tnorm(), x(a, *c), phi[y]));
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    auto c = colim(x, way_below_weight(r.totally_below, a));
    if (!c || !isomorphic_elements(x, *c, a)) {
      r.witness = a;
      return r;
    }
  }
  r.holds = true;
  return r;
}

/// The grid-radius ball preorder as DOT, one edge per covering pair.
inline std::string balls_dot(const EnrichedCategory& x) {
  const ValueGrid& g = x.require_grid();
  std::vector<FormalBall> nodes;
  for (std::size_t c = 0; c < x.size(); ++c)
    for (const auto& r : g.points()) nodes.push_back({c, r});
  auto strictly_below = [&](const FormalBall& a, const FormalBall& b) { return ball_leq(x, a, b) && !ball_leq(x, b, a); };
  std::ostringstream os;
  os << "digraph {\n";
  for (const auto& n : nodes) os << "  \"" << ball_name(x, n) << "\";\n";
  for (const auto& a : nodes)
    for (const auto& b : nodes) {
      if (!strictly_below(a, b)) continue;
      const bool covered = std::none_of(nodes.begin(), nodes.end(),
                                        [&](const FormalBall& c) { return strictly_below(a, c) && strictly_below(c, b); });
      if (covered) os << "  \"" << ball_name(x, a) << "\" -> \"" << ball_name(x, b) << "\";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace qcat
