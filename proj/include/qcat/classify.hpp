#pragma once

// Weight classes: representable, Cauchy, ideal, conically flat, flat.
// Also Cauchy completion and Smyth completeness at grid scale.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcat/presheaf.hpp"

namespace qcat {

/// Least-index a with φ = y(a).
inline std::optional<std::size_t> is_representable(const EnrichedCategory& x, const Weight& phi) {
  detail::require_base(x, phi.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    if (vec_equal(yoneda(x, a), phi)) return a;
  return std::nullopt;
}

/// The left adjoint ψ = X↙φ when φ is Cauchy: φ∘ψ ≥ 1 and ψ(y) ⊗ φ(x) ≤ X(x,y).
inline std::optional<Coweight> is_cauchy(const EnrichedCategory& x, const Weight& phi) {
  Coweight psi = isbell_ub(x, phi);
  if (!approx_equal(pairing(x, phi, psi), x.one())) return std::nullopt;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!leq(conj(x.tnorm(), psi[b], phi[a]), x(a, b))) return std::nullopt;
  return psi;
}

inline bool is_inhabited(const EnrichedCategory& x, const Weight& phi) {
  return std::any_of(phi.values.begin(), phi.values.end(), [&](const Value& v) { return approx_equal(v, x.one()); });
}

struct IdealResult {
  bool ideal = false;
  bool inhabited = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // the pair (x1,x2) lacking a common bound
};

/// Finite form of the ideal criterion: φ is inhabited and every x1, x2 have
/// an x with φ(x) = 1 and X(xi,x) ≥ φ(xi).
inline IdealResult is_ideal(const EnrichedCategory& x, const Weight& phi) {
  detail::require_base(x, phi.size());
  IdealResult r;
  r.inhabited = is_inhabited(x, phi);
  if (!r.inhabited) return r;
  for (std::size_t x1 = 0; x1 < x.size(); ++x1)
    for (std::size_t x2 = 0; x2 < x.size(); ++x2) {
      bool found = false;
      for (std::size_t c = 0; c < x.size() && !found; ++c)
        found = approx_equal(phi[c], x.one()) && leq(phi[x1], x(x1, c)) && leq(phi[x2], x(x2, c));
      if (!found) {
        r.witness = {x1, x2};
        return r;
      }
    }
  r.ideal = true;
  return r;
}

/// The strict-threshold form: for r < 1, s1 < φ(x1), s2 < φ(x2) there is an
/// x with r < φ(x), s1 < X(x1,x), s2 < X(x2,x). Between consecutive values
/// of φ and hom the strict conditions do not change, so thresholds sweep over
/// those values only.
inline bool is_ideal_sweep(const EnrichedCategory& x, const Weight& phi) {
  detail::require_base(x, phi.size());
  std::vector<Value> levels = {x.zero(), x.one()};
  levels.insert(levels.end(), phi.values.begin(), phi.values.end());
  levels.insert(levels.end(), x.hom().entries().begin(), x.hom().entries().end());
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end(), [](const Value& a, const Value& b) { return approx_equal(a, b); }),
               levels.end());
  Value sup = x.zero();
  for (const auto& v : phi.values) sup = vmax(sup, v);
  if (!approx_equal(sup, x.one())) return false;
  for (std::size_t x1 = 0; x1 < x.size(); ++x1)
    for (std::size_t x2 = 0; x2 < x.size(); ++x2)
      for (const auto& r : levels) {
        if (!strictly_less(r, x.one())) continue;
        for (const auto& s1 : levels) {
          if (!strictly_less(s1, phi[x1])) continue;
          for (const auto& s2 : levels) {
            if (!strictly_less(s2, phi[x2])) continue;
            bool found = false;
            for (std::size_t c = 0; c < x.size() && !found; ++c)
              found = strictly_less(r, phi[c]) && strictly_less(s1, x(x1, c)) && strictly_less(s2, x(x2, c));
            if (!found) return false;
          }
        }
      }
  return true;
}

struct GhkWitness {
  std::size_t x1, x2;
  Value p1, p2;
  Value lhs, rhs;
};

struct ConicalFlatResult {
  bool holds = false;
  bool inhabited = false;
  bool approximate = false;  // float mode: breakpoints sampled
  std::optional<GhkWitness> witness;
};

namespace detail {
inline std::vector<Value> breakpoints(const EnrichedCategory& x) {
  if (x.grid()) return x.grid()->points();
  if (x.mode() == Mode::Exact) throw InvalidArgument("exact flatness checks need a category with a value grid");
  std::vector<Value> ps;
  for (int i = 0; i <= 40; ++i) ps.emplace_back(i / 40.0);
  return ps;
}
}  // namespace detail

/// Inhabited, and (p1⊗φ(x1)) ∧ (p2⊗φ(x2)) = sup_x ((p1⊗X(x1,x)) ∧ (p2⊗X(x2,x))) ⊗ φ(x)
/// for all x1, x2 and all grid p1, p2.
inline ConicalFlatResult is_conically_flat(const EnrichedCategory& x, const Weight& phi) {
  detail::require_base(x, phi.size());
  ConicalFlatResult r;
  r.approximate = x.mode() == Mode::Float;
  r.inhabited = is_inhabited(x, phi);
  if (!r.inhabited) return r;
  const TNorm& t = x.tnorm();
  const auto ps = detail::breakpoints(x);
  for (std::size_t x1 = 0; x1 < x.size(); ++x1)
    for (std::size_t x2 = 0; x2 < x.size(); ++x2)
      for (const auto& p1 : ps)
        for (const auto& p2 : ps) {
          const Value lhs = vmin(conj(t, p1, phi[x1]), conj(t, p2, phi[x2]));
          Value rhs = x.zero();
          for (std::size_t c = 0; c < x.size(); ++c)
            rhs = vmax(rhs, conj(t, vmin(conj(t, p1, x(x1, c)), conj(t, p2, x(x2, c))), phi[c]));
          if (!approx_equal(lhs, rhs)) {
            r.witness = GhkWitness{x1, x2, p1, p2, lhs, rhs};
            return r;
          }
        }
  r.holds = true;
  return r;
}

struct FlatWitness {
  Value r;
  Coweight psi;
  Value lhs, rhs;  // φ∘(r→ψ) and r → φ∘ψ
};

struct FlatResult {
  bool holds = false;
  ConicalFlatResult conical;
  bool exhaustive = false;  // the verdict does not rest on sampled coweights
  std::size_t coweights_tested = 0;
  std::optional<FlatWitness> witness;
};

struct FlatOptions {
  std::size_t bound = kDefaultEnumerationBound;
  std::size_t random_samples = 1000;
  std::uint64_t seed = 0;
};

namespace detail {
inline std::optional<FlatWitness> condition_c(const EnrichedCategory& x, const Weight& phi, const Coweight& psi,
                                              const std::vector<Value>& rs) {
  const TNorm& t = x.tnorm();
  const Value base = pairing(x, phi, psi);
  for (const auto& r : rs) {
    Coweight shifted;
    for (const auto& v : psi.values) shifted.values.push_back(imp(t, r, v));
    const Value lhs = pairing(x, phi, shifted);
    const Value rhs = imp(t, r, base);
    if (!approx_equal(lhs, rhs)) return FlatWitness{r, psi, lhs, rhs};
  }
  return std::nullopt;
}

/// Coweights p ⊗ y†(a), then random grid coweights.
inline std::vector<Coweight> sampled_coweights(const EnrichedCategory& x, const FlatOptions& opt) {
  const ValueGrid& g = x.require_grid();
  std::vector<Coweight> fam;
  for (const auto& p : g.points())
    for (std::size_t a = 0; a < x.size(); ++a) {
      Coweight c = coyoneda(x, a);
      for (auto& v : c.values) v = conj(x.tnorm(), p, v);
      fam.push_back(std::move(c));
    }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (std::size_t i = 0; i < opt.random_samples; ++i) {
    std::vector<Value> v;
    for (std::size_t a = 0; a < x.size(); ++a) v.push_back(g[pick(rng)]);
    fam.push_back(coweight_closure(x, v));
  }
  return fam;
}
}  // namespace detail

/// Conically flat and φ∘(r→ψ) = r → φ∘ψ for grid r and a coweight family:
/// every grid coweight when the enumeration fits the bound, else a sample.
inline FlatResult is_flat(const EnrichedCategory& x, const Weight& phi, const FlatOptions& opt = {}) {
  FlatResult r;
  r.conical = is_conically_flat(x, phi);
  if (!r.conical.holds) {
    r.exhaustive = true;
    return r;
  }
  const auto rs = detail::breakpoints(x);
  std::vector<Coweight> family;
  try {
    family = enumerate_grid_coweights(x, opt.bound);
    r.exhaustive = true;
  } catch (const BoundExceeded&) {
    family = detail::sampled_coweights(x, opt);
  }
  for (const auto& psi : family) {
    ++r.coweights_tested;
    if (auto w = detail::condition_c(x, phi, psi, rs)) {
      r.witness = std::move(w);
      return r;
    }
  }
  r.holds = true;
  return r;
}

struct WeightClassReport {
  bool representable = false, cauchy = false, ideal = false, conically_flat = false, flat = false;
  std::optional<std::size_t> representing;
  std::optional<Coweight> left_adjoint;
  IdealResult ideal_detail;
  FlatResult flat_detail;
  bool chain_ok = true;  // representable ⟹ cauchy ⟹ ideal, cauchy ⟹ flat ⟹ conically flat
};

inline WeightClassReport classify(const EnrichedCategory& x, const Weight& phi, const FlatOptions& opt = {}) {
  if (auto v = check_weight(x, phi)) throw InvalidArgument("not a weight: " + v->message);
  WeightClassReport r;
  r.representing = is_representable(x, phi);
  r.representable = r.representing.has_value();
  r.left_adjoint = is_cauchy(x, phi);
  r.cauchy = r.left_adjoint.has_value();
  r.ideal_detail = is_ideal(x, phi);
  r.ideal = r.ideal_detail.ideal;
  r.flat_detail = is_flat(x, phi, opt);
  r.conically_flat = r.flat_detail.conical.holds;
  r.flat = r.flat_detail.holds;
  r.chain_ok = (!r.representable || r.cauchy) && (!r.cauchy || r.ideal) && (!r.cauchy || r.flat) &&
               (!r.flat || r.conically_flat);
  return r;
}

// --- completions -------------------------------------------------------------

struct CauchyCompletion {
  EnrichedCategory category;
  FiniteMap embedding;          // x ↦ class of y(x)
  std::vector<Weight> weights;  // class representatives
};

/// Carrier: the distinct Cauchy grid weights, representables first in element
/// order; hom = sub.
inline CauchyCompletion cauchy_completion(const EnrichedCategory& x, std::size_t bound = kDefaultEnumerationBound) {
  if (x.mode() != Mode::Exact) throw ExactUnsupported("Cauchy completion enumerates grid weights in exact mode");
  CauchyCompletion out;
  auto index_of = [&](const Weight& w) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < out.weights.size(); ++i)
      if (out.weights[i] == w) return i;
    return std::nullopt;
  };
  for (std::size_t a = 0; a < x.size(); ++a) {
    Weight ya = yoneda(x, a);
    auto i = index_of(ya);
    if (!i) {
      i = out.weights.size();
      out.weights.push_back(std::move(ya));
    }
    out.embedding.push_back(*i);
  }
  for (auto& w : enumerate_grid_weights(x, bound))
    if (is_cauchy(x, w) && !index_of(w)) out.weights.push_back(std::move(w));
  const std::size_t k = out.weights.size();
  Rel h(k, k, x.one());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    auto rep = is_representable(x, out.weights[i]);
    names.push_back(rep ? x.names()[*rep] : "w" + std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) h(i, j) = sub(x, out.weights[i], out.weights[j]);
  }
  out.category = EnrichedCategory(x.tnorm(), std::move(h), x.grid(), std::move(names));
  return out;
}

/// Separated and every grid ideal representable.
inline bool is_smyth_complete(const EnrichedCategory& x, std::size_t bound = kDefaultEnumerationBound) {
  if (!is_separated(x)) return false;
  for (const auto& w : enumerate_grid_weights(x, bound))
    if (is_ideal(x, w).ideal && !is_representable(x, w)) return false;
  return true;
}

/// Every grid ideal is Cauchy.
inline bool is_smyth_completable(const EnrichedCategory& x, std::size_t bound = kDefaultEnumerationBound) {
  for (const auto& w : enumerate_grid_weights(x, bound))
    if (is_ideal(x, w).ideal && !is_cauchy(x, w)) return false;
  return true;
}

}  // namespace qcat
