#pragma once

// Weights (contravariant presheaves) and coweights of a finite category:
// Yoneda, sub, pairing, (co)limits, tensors, Kan extensions, Isbell.

#include <cmath>
#include <optional>
#include <vector>

#include "qcat/category.hpp"

namespace qcat {

namespace detail {
template <class Tag>
struct ValueVector {
  std::vector<Value> values;

  ValueVector() = default;
  explicit ValueVector(std::vector<Value> v) : values(std::move(v)) {}
  std::size_t size() const noexcept { return values.size(); }
  const Value& operator[](std::size_t i) const { return values[i]; }
  Value& operator[](std::size_t i) { return values[i]; }
  friend bool operator==(const ValueVector&, const ValueVector&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
    return s + ")";
  }
};
struct WeightTag {};
struct CoweightTag {};
}  // namespace detail

/// φ: X ⇸ ⋆, with φ(x2) ⊗ X(x1,x2) ≤ φ(x1).
using Weight = detail::ValueVector<detail::WeightTag>;
/// ψ: ⋆ ⇸ X, with X(y1,y2) ⊗ ψ(y1) ≤ ψ(y2).
using Coweight = detail::ValueVector<detail::CoweightTag>;

template <class V>
bool vec_equal(const V& a, const V& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!approx_equal(a[i], b[i])) return false;
  return true;
}

inline Rel as_rel(const Weight& w) { return Rel(w.size(), 1, w.values); }
inline Rel as_rel(const Coweight& c) { return Rel(1, c.size(), c.values); }
inline Weight weight_of(const Rel& r) {
  if (r.cols() != 1) throw InvalidArgument("a weight is an n×1 relation");
  return Weight(r.entries());
}
inline Coweight coweight_of(const Rel& r) {
  if (r.rows() != 1) throw InvalidArgument("a coweight is a 1×n relation");
  return Coweight(r.entries());
}

namespace detail {
inline void require_base(const EnrichedCategory& x, std::size_t n) {
  if (n != x.size()) throw InvalidArgument("vector size " + std::to_string(n) + " does not match the base category");
}
}  // namespace detail

inline std::optional<Violation> check_weight(const EnrichedCategory& x, const Weight& phi) {
  if (phi.size() != x.size()) return Violation{Violation::Kind::Shape, {}, "weight size does not match the base"};
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!leq(conj(x.tnorm(), phi[b], x(a, b)), phi[a]))
        return Violation{Violation::Kind::Functoriality, {a, b},
                         "φ(" + x.names()[b] + ") ⊗ X(" + x.names()[a] + "," + x.names()[b] + ") > φ(" + x.names()[a] + ")"};
  return std::nullopt;
}

inline std::optional<Violation> check_coweight(const EnrichedCategory& x, const Coweight& psi) {
  if (psi.size() != x.size()) return Violation{Violation::Kind::Shape, {}, "coweight size does not match the base"};
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!leq(conj(x.tnorm(), x(a, b), psi[a]), psi[b]))
        return Violation{Violation::Kind::Functoriality, {a, b},
                         "X(" + x.names()[a] + "," + x.names()[b] + ") ⊗ ψ(" + x.names()[a] + ") > ψ(" + x.names()[b] + ")"};
  return std::nullopt;
}

inline bool is_weight(const EnrichedCategory& x, const Weight& phi) { return !check_weight(x, phi); }
inline bool is_coweight(const EnrichedCategory& x, const Coweight& psi) { return !check_coweight(x, psi); }

inline Weight make_weight(const EnrichedCategory& x, std::vector<Value> values) {
  Weight w(std::move(values));
  if (auto v = check_weight(x, w)) throw InvalidArgument("not a weight: " + v->message);
  return w;
}
inline Coweight make_coweight(const EnrichedCategory& x, std::vector<Value> values) {
  Coweight c(std::move(values));
  if (auto v = check_coweight(x, c)) throw InvalidArgument("not a coweight: " + v->message);
  return c;
}

/// y(a) = X(−,a).
inline Weight yoneda(const EnrichedCategory& x, std::size_t a) {
  Weight w;
  for (std::size_t i = 0; i < x.size(); ++i) w.values.push_back(x(i, a));
  return w;
}

/// y†(a) = X(a,−).
inline Coweight coyoneda(const EnrichedCategory& x, std::size_t a) {
  Coweight c;
  for (std::size_t i = 0; i < x.size(); ++i) c.values.push_back(x(a, i));
  return c;
}

/// 𝒫X(φ1,φ2) = inf_x φ1(x) → φ2(x).
inline Value sub(const EnrichedCategory& x, const Weight& a, const Weight& b) {
  detail::require_base(x, a.size());
  detail::require_base(x, b.size());
  Value acc = x.one();
  for (std::size_t i = 0; i < a.size(); ++i) acc = vmin(acc, imp(x.tnorm(), a[i], b[i]));
  return acc;
}

/// 𝒫†X(ψ1,ψ2) = inf_x ψ2(x) → ψ1(x).
inline Value sub_dual(const EnrichedCategory& x, const Coweight& a, const Coweight& b) {
  detail::require_base(x, a.size());
  detail::require_base(x, b.size());
  Value acc = x.one();
  for (std::size_t i = 0; i < a.size(); ++i) acc = vmin(acc, imp(x.tnorm(), b[i], a[i]));
  return acc;
}

/// φ∘ψ = sup_x φ(x) ⊗ ψ(x).
inline Value pairing(const EnrichedCategory& x, const Weight& phi, const Coweight& psi) {
  detail::require_base(x, phi.size());
  detail::require_base(x, psi.size());
  Value acc = x.zero();
  for (std::size_t i = 0; i < phi.size(); ++i) acc = vmax(acc, conj(x.tnorm(), phi[i], psi[i]));
  return acc;
}

/// The pairing recovered from sub: inf over grid p of 𝒫X(φ, ψ→p) → p.
inline Value pairing_via_sub(const EnrichedCategory& x, const Weight& phi, const Coweight& psi) {
  const ValueGrid& g = x.require_grid();
  Value acc = x.one();
  for (const auto& p : g.points()) {
    Weight psi_p;
    for (std::size_t i = 0; i < psi.size(); ++i) psi_p.values.push_back(imp(x.tnorm(), psi[i], p));
    acc = vmin(acc, imp(x.tnorm(), sub(x, phi, psi_p), p));
  }
  return acc;
}

/// ub φ = X↙φ.
inline Coweight isbell_ub(const EnrichedCategory& x, const Weight& phi) {
  detail::require_base(x, phi.size());
  return coweight_of(residual_left(x.tnorm(), x.hom(), as_rel(phi)));
}

/// lb ψ = ψ↘X.
inline Weight isbell_lb(const EnrichedCategory& x, const Coweight& psi) {
  detail::require_base(x, psi.size());
  return weight_of(residual_right(x.tnorm(), as_rel(psi), x.hom()));
}

/// Least-index c with X(c,−) = X↙φ.
inline std::optional<std::size_t> colim(const EnrichedCategory& x, const Weight& phi) {
  const Coweight target = isbell_ub(x, phi);
  for (std::size_t c = 0; c < x.size(); ++c)
    if (vec_equal(coyoneda(x, c), target)) return c;
  return std::nullopt;
}

/// Least-index c with X(−,c) = ψ↘X.
inline std::optional<std::size_t> lim(const EnrichedCategory& x, const Coweight& psi) {
  const Weight target = isbell_lb(x, psi);
  for (std::size_t c = 0; c < x.size(); ++c)
    if (vec_equal(yoneda(x, c), target)) return c;
  return std::nullopt;
}

/// φ∘f^*, the weight of X induced by a weight φ of K along f: K → X.
inline Weight pushforward_weight(const EnrichedCategory& k, const EnrichedCategory& x, const FiniteMap& f,
                                 const Weight& phi) {
  detail::require_base(k, phi.size());
  return weight_of(compose(x.tnorm(), as_rel(phi), cograph(k, x, f)));
}

/// colim_φ f = colim(φ∘f^*).
inline std::optional<std::size_t> weighted_colim(const EnrichedCategory& k, const EnrichedCategory& x,
                                                 const FiniteMap& f, const Weight& phi) {
  return colim(x, pushforward_weight(k, x, f, phi));
}

/// r⊗a: an element t with X(t,y) = r → X(a,y) for all y.
inline std::optional<std::size_t> tensor(const EnrichedCategory& x, const Value& r, std::size_t a) {
  for (std::size_t t = 0; t < x.size(); ++t) {
    bool ok = true;
    for (std::size_t y = 0; y < x.size() && ok; ++y) ok = approx_equal(x(t, y), imp(x.tnorm(), r, x(a, y)));
    if (ok) return t;
  }
  return std::nullopt;
}

/// r⊸b: an element c with X(y,c) = r → X(y,b) for all y.
inline std::optional<std::size_t> cotensor(const EnrichedCategory& x, const Value& r, std::size_t b) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    bool ok = true;
    for (std::size_t y = 0; y < x.size() && ok; ++y) ok = approx_equal(x(y, c), imp(x.tnorm(), r, x(y, b)));
    if (ok) return c;
  }
  return std::nullopt;
}

/// Complete underlying order plus every grid tensor and cotensor.
inline bool is_cocomplete_over_grid(const EnrichedCategory& x) {
  if (x.mode() != Mode::Exact) throw ExactUnsupported("grid cocompleteness is decided in exact mode only");
  const ValueGrid& g = x.require_grid();
  if (!underlying_order(x).is_complete_lattice()) return false;
  for (const auto& r : g.points())
    for (std::size_t a = 0; a < x.size(); ++a)
      if (!tensor(x, r, a) || !cotensor(x, r, a)) return false;
  return true;
}

/// Underlying-order join of {φ(z) ⊗ f(z)}, if all tensors and the join exist.
inline std::optional<std::size_t> join_of_tensors(const EnrichedCategory& k, const EnrichedCategory& x,
                                                  const FiniteMap& f, const Weight& phi) {
  std::uint32_t members = 0;
  for (std::size_t z = 0; z < k.size(); ++z) {
    auto t = tensor(x, phi[z], f[z]);
    if (!t) return std::nullopt;
    members |= 1u << *t;
  }
  return underlying_order(x).join(members);
}

// --- Kan extensions along f: X → Y -------------------------------------------

/// f_∃(φ)(y) = sup_x φ(x) ⊗ Y(y, f x).
inline Weight kan_exists(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f, const Weight& phi) {
  return pushforward_weight(x, y, f, phi);
}

/// f⁻¹(γ)(x) = γ(f x).
inline Weight kan_inverse(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f, const Weight& g) {
  detail::require_functor(x, y, f);
  detail::require_base(y, g.size());
  return weight_of(compose(x.tnorm(), as_rel(g), graph(x, y, f)));
}

/// f_∀(φ)(y) = inf_x Y(f x, y) → φ(x).
inline Weight kan_forall(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f, const Weight& phi) {
  detail::require_base(x, phi.size());
  return weight_of(residual_left(x.tnorm(), as_rel(phi), graph(x, y, f)));
}

/// f†_∀(ψ)(y) = inf_x Y(y, f x) → ψ(x).
inline Coweight kan_dag_forall(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f,
                               const Coweight& psi) {
  detail::require_base(x, psi.size());
  return coweight_of(residual_right(x.tnorm(), cograph(x, y, f), as_rel(psi)));
}

/// f†_∃(ψ)(y) = sup_x ψ(x) ⊗ Y(f x, y).
inline Coweight kan_dag_exists(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f,
                               const Coweight& psi) {
  detail::require_base(x, psi.size());
  return coweight_of(compose(x.tnorm(), graph(x, y, f), as_rel(psi)));
}

/// f†⁻¹(μ)(x) = μ(f x).
inline Coweight kan_dag_inverse(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f,
                                const Coweight& mu) {
  detail::require_base(y, mu.size());
  return coweight_of(compose(x.tnorm(), cograph(x, y, f), as_rel(mu)));
}

// --- grid enumeration --------------------------------------------------------

inline constexpr std::size_t kDefaultEnumerationBound = 1000000;

namespace detail {
/// Calls visit(indices) for every vector in grid^n satisfying `accept`,
/// odometer order with the last coordinate fastest.
template <class Accept, class Visit>
void for_each_grid_vector(std::size_t n, std::size_t g, std::size_t bound, Accept&& accept, Visit&& visit) {
  double count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(g);
  if (count > static_cast<double>(bound))
    throw BoundExceeded("grid enumeration of " + std::to_string(g) + "^" + std::to_string(n) +
                        " vectors exceeds bound " + std::to_string(bound));
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    if (accept(idx)) visit(idx);
    std::size_t i = n;
    while (i > 0 && ++idx[i - 1] == g) idx[--i] = 0;
    if (i == 0) break;
  }
}

/// hom entries as grid indices.
inline std::vector<std::size_t> hom_indices(const EnrichedCategory& x, const ValueGrid& g) {
  std::vector<std::size_t> h(x.size() * x.size());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      auto i = g.index_of(x(a, b));
      if (!i) throw InvalidArgument("hom entry " + x(a, b).str() + " is not a grid point");
      h[a * x.size() + b] = *i;
    }
  return h;
}
}  // namespace detail

/// Every weight with values in the category's grid.
inline std::vector<Weight> enumerate_grid_weights(const EnrichedCategory& x,
                                                  std::size_t bound = kDefaultEnumerationBound) {
  const ValueGrid& g = x.require_grid();
  const auto h = detail::hom_indices(x, g);
  const std::size_t n = x.size();
  std::vector<Weight> out;
  detail::for_each_grid_vector(
      n, g.size(), bound,
      [&](const std::vector<std::size_t>& v) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (g.conj_index(v[b], h[a * n + b]) > v[a]) return false;
        return true;
      },
      [&](const std::vector<std::size_t>& v) {
        Weight w;
        for (auto i : v) w.values.push_back(g[i]);
        out.push_back(std::move(w));
      });
  return out;
}

/// Every coweight with values in the category's grid.
inline std::vector<Coweight> enumerate_grid_coweights(const EnrichedCategory& x,
                                                      std::size_t bound = kDefaultEnumerationBound) {
  const ValueGrid& g = x.require_grid();
  const auto h = detail::hom_indices(x, g);
  const std::size_t n = x.size();
  std::vector<Coweight> out;
  detail::for_each_grid_vector(
      n, g.size(), bound,
      [&](const std::vector<std::size_t>& v) {
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b)
            if (g.conj_index(h[a * n + b], v[a]) > v[b]) return false;
        return true;
      },
      [&](const std::vector<std::size_t>& v) {
        Coweight c;
        for (auto i : v) c.values.push_back(g[i]);
        out.push_back(std::move(c));
      });
  return out;
}

/// The least weight above v: x ↦ sup_y v(y) ⊗ X(x,y).
inline Weight weight_closure(const EnrichedCategory& x, const std::vector<Value>& v) {
  detail::require_base(x, v.size());
  Weight w;
  for (std::size_t a = 0; a < x.size(); ++a) {
    Value acc = x.zero();
    for (std::size_t b = 0; b < x.size(); ++b) acc = vmax(acc, conj(x.tnorm(), v[b], x(a, b)));
    w.values.push_back(acc);
  }
  return w;
}

/// The least coweight above v: y ↦ sup_x X(x,y) ⊗ v(x).
inline Coweight coweight_closure(const EnrichedCategory& x, const std::vector<Value>& v) {
  detail::require_base(x, v.size());
  Coweight c;
  for (std::size_t b = 0; b < x.size(); ++b) {
    Value acc = x.zero();
    for (std::size_t a = 0; a < x.size(); ++a) acc = vmax(acc, conj(x.tnorm(), x(a, b), v[a]));
    c.values.push_back(acc);
  }
  return c;
}

}  // namespace qcat
