#pragma once

// Monad- and module-level laws at grid scale: the KZ inequality of the
// presheaf monad, [0,1]-modules versus categories, negation duality, conical
// filters and Kowalsky sums.

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcat/classify.hpp"
#include "qcat/random.hpp"

namespace qcat {

// --- KZ ------------------------------------------------------------------------

/// sup_x φ(x) ⊗ sub(γ, y(x)).
inline Value kz_lhs(const EnrichedCategory& x, const Weight& phi, const Weight& gamma) {
  Value acc = x.zero();
  for (std::size_t a = 0; a < x.size(); ++a) acc = vmax(acc, conj(x.tnorm(), phi[a], sub(x, gamma, yoneda(x, a))));
  return acc;
}

struct KzReport {
  std::size_t pairs = 0;
  std::size_t violations = 0;       // lhs > sub(γ,φ)
  std::size_t inconsistencies = 0;  // equality pattern disagrees with is_cauchy
  std::optional<std::pair<Weight, Weight>> first_violation;
};

/// Checks the inequality on every (φ, γ) pair and compares "equality for all
/// sampled γ" against is_cauchy: Cauchy weights must give equality, and when
/// φ is among the γ, equality for all γ must imply Cauchy.
inline KzReport kz_check(const EnrichedCategory& x, const std::vector<Weight>& phis, const std::vector<Weight>& gammas) {
  KzReport r;
  for (const auto& phi : phis) {
    bool all_equal = true, phi_tested = false;
    for (const auto& g : gammas) {
      ++r.pairs;
      const Value lhs = kz_lhs(x, phi, g), rhs = sub(x, g, phi);
      if (!leq(lhs, rhs)) {
        ++r.violations;
        if (!r.first_violation) r.first_violation = {phi, g};
      }
      if (!approx_equal(lhs, rhs)) all_equal = false;
      if (vec_equal(g, phi)) phi_tested = true;
    }
    const bool cauchy = is_cauchy(x, phi).has_value();
    if ((cauchy && !all_equal) || (phi_tested && all_equal && !cauchy)) ++r.inconsistencies;
  }
  return r;
}

// --- modules -------------------------------------------------------------------

/// A grid acting on a finite complete lattice; act[r * |L| + x] = r ⊗ x.
struct ModuleAction {
  FiniteLattice lattice;
  ValueGrid grid;
  std::vector<std::size_t> act;

  std::size_t apply(std::size_t r, std::size_t x) const { return act[r * lattice.size() + x]; }
};

/// The first failed module axiom, if any.
inline std::optional<std::string> check_module(const ModuleAction& m) {
  const auto& l = m.lattice;
  const auto& g = m.grid;
  const std::size_t n = l.size(), top = g.size() - 1;
  if (m.act.size() != g.size() * n) return "action table has the wrong size";
  for (std::size_t x = 0; x < n; ++x)
    if (m.apply(top, x) != x) return "1 ⊗ x != x at x = " + std::to_string(x);
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t r = 0; r < g.size(); ++r)
      for (std::size_t x = 0; x < n; ++x)
        if (m.apply(s, m.apply(r, x)) != m.apply(g.conj_index(s, r), x))
          return "s ⊗ (r ⊗ x) != (s ⊗ r) ⊗ x at (" + g[s].str() + "," + g[r].str() + "," + std::to_string(x) + ")";
  for (std::size_t r = 0; r < g.size(); ++r) {
    if (m.apply(r, l.bottom()) != l.bottom()) return "r ⊗ 0 != 0 at r = " + g[r].str();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (m.apply(r, l.join(x, y)) != l.join(m.apply(r, x), m.apply(r, y)))
          return "r ⊗ − does not preserve the join of " + std::to_string(x) + "," + std::to_string(y);
  }
  // − ⊗ x preserves the joins of the grid chain: bottom and monotonicity
  for (std::size_t x = 0; x < n; ++x) {
    if (m.apply(0, x) != l.bottom()) return "0 ⊗ x != 0 at x = " + std::to_string(x);
    for (std::size_t r = 0; r + 1 < g.size(); ++r)
      if (!l.leq(m.apply(r, x), m.apply(r + 1, x))) return "− ⊗ x is not monotone at x = " + std::to_string(x);
  }
  return std::nullopt;
}

/// α(x,y) = max{r in grid : r ⊗ x ≤ y}.
inline EnrichedCategory module_to_category(const ModuleAction& m) {
  if (auto v = check_module(m)) throw InvalidArgument("not a module: " + *v);
  const std::size_t n = m.lattice.size();
  Rel h(n, n, m.grid.bottom());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t r = m.grid.size(); r-- > 0;)
        if (m.lattice.leq(m.apply(r, x), y)) {
          h(x, y) = m.grid[r];
          break;
        }
  return EnrichedCategory(m.grid.tnorm(), std::move(h), m.grid);
}

/// Underlying lattice with the tensors as action, for a separated grid-cocomplete category.
inline ModuleAction category_to_module(const EnrichedCategory& a) {
  if (!is_separated(a)) throw InvalidArgument("category_to_module needs a separated category");
  if (!is_cocomplete_over_grid(a)) throw InvalidArgument("category_to_module needs a grid-cocomplete category");
  ModuleAction m{FiniteLattice(underlying_order(a)), a.require_grid(), {}};
  for (std::size_t r = 0; r < m.grid.size(); ++r)
    for (std::size_t x = 0; x < a.size(); ++x) m.act.push_back(*tensor(a, m.grid[r], x));
  return m;
}

/// Same carrier order and action after relabelling by some bijection.
inline bool modules_isomorphic(const ModuleAction& a, const ModuleAction& b) {
  const std::size_t n = a.lattice.size();
  if (n != b.lattice.size() || a.grid.size() != b.grid.size()) return false;
  FiniteMap p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) ok = a.lattice.leq(x, y) == b.lattice.leq(p[x], p[y]);
    for (std::size_t r = 0; r < a.grid.size() && ok; ++r)
      for (std::size_t x = 0; x < n && ok; ++x) ok = p[a.apply(r, x)] == b.apply(r, p[x]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// A random module: a subset of grid^k closed under pointwise joins and the
/// scalar action, with at most `max_size` elements, in random order.
inline ModuleAction random_module(const ValueGrid& g, std::size_t k, std::size_t max_size, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  std::uniform_int_distribution<int> gens(1, 2);
  for (;;) {
    std::set<std::vector<std::size_t>> elems;
    elems.insert(std::vector<std::size_t>(k, 0));
    const int count = gens(rng);
    for (int i = 0; i < count; ++i) {
      std::vector<std::size_t> v(k);
      for (auto& c : v) c = pick(rng);
      elems.insert(v);
    }
    bool grew = true;
    while (grew && elems.size() <= max_size) {
      grew = false;
      std::vector<std::vector<std::size_t>> cur(elems.begin(), elems.end());
      for (const auto& a : cur) {
        for (const auto& b : cur) {
          std::vector<std::size_t> j(k);
          for (std::size_t c = 0; c < k; ++c) j[c] = std::max(a[c], b[c]);
          grew |= elems.insert(j).second;
        }
        for (std::size_t r = 0; r < g.size(); ++r) {
          std::vector<std::size_t> s(k);
          for (std::size_t c = 0; c < k; ++c) s[c] = g.conj_index(r, a[c]);
          grew |= elems.insert(s).second;
        }
      }
    }
    if (elems.size() > max_size) continue;
    std::vector<std::vector<std::size_t>> carrier(elems.begin(), elems.end());
    std::shuffle(carrier.begin(), carrier.end(), rng);
    const std::size_t n = carrier.size();
    auto index = [&](const std::vector<std::size_t>& v) {
      return static_cast<std::size_t>(std::find(carrier.begin(), carrier.end(), v) - carrier.begin());
    };
    std::vector<std::vector<bool>> order(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool le = true;
        for (std::size_t c = 0; c < k; ++c) le = le && carrier[i][c] <= carrier[j][c];
        order[i][j] = le;
      }
    ModuleAction m{FiniteLattice(FinitePoset(std::move(order))), g, {}};
    for (std::size_t r = 0; r < g.size(); ++r)
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> s(k);
        for (std::size_t c = 0; c < k; ++c) s[c] = g.conj_index(r, carrier[i][c]);
        m.act.push_back(index(s));
      }
    return m;
  }
}

// --- negation ------------------------------------------------------------------

/// The first point x with (x → 0) → 0 != x, if any.
inline std::optional<Value> negation_duality_check(const std::vector<Value>& points, const TNorm& t) {
  for (const auto& x : points) {
    const Value z = Value::zero(x.mode());
    if (!approx_equal(imp(t, imp(t, x, z), z), x)) return x;
  }
  return std::nullopt;
}

// --- conical filters -----------------------------------------------------------

using Fuzzy = std::vector<Value>;  // a [0,1]-valued function on a finite set

inline Value fuzzy_sub(const TNorm& t, const Fuzzy& a, const Fuzzy& b) {
  if (a.size() != b.size()) throw InvalidArgument("fuzzy sets over different carriers");
  Value acc = Value::one(a.empty() ? Mode::Exact : a[0].mode());
  for (std::size_t i = 0; i < a.size(); ++i) acc = vmin(acc, imp(t, a[i], b[i]));
  return acc;
}

inline bool fuzzy_leq(const Fuzzy& a, const Fuzzy& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!leq(a[i], b[i])) return false;
  return true;
}

/// 𝔉(λ) = max over generators ξ of sub(ξ, λ); the generators must be
/// directed: any two have a pointwise lower bound among them.
class ConicalFilter {
 public:
  ConicalFilter(TNorm t, std::size_t carrier, std::vector<Fuzzy> generators)
      : t_(std::move(t)), n_(carrier), gens_(std::move(generators)) {
    if (gens_.empty()) throw InvalidArgument("a filter needs at least one generator");
    for (const auto& g : gens_)
      if (g.size() != n_) throw InvalidArgument("generator over the wrong carrier");
    for (const auto& a : gens_)
      for (const auto& b : gens_) {
        const bool bounded = std::any_of(gens_.begin(), gens_.end(), [&](const Fuzzy& c) {
          return fuzzy_leq(c, a) && fuzzy_leq(c, b);
        });
        if (!bounded) throw InvalidArgument("filter generators are not directed");
      }
  }

  Value operator()(const Fuzzy& lambda) const {
    Value acc = Value::zero(lambda.empty() ? Mode::Exact : lambda[0].mode());
    for (const auto& g : gens_) acc = vmax(acc, fuzzy_sub(t_, g, lambda));
    return acc;
  }

  /// A generator below every other one.
  const Fuzzy& least_generator() const {
    for (const auto& c : gens_)
      if (std::all_of(gens_.begin(), gens_.end(), [&](const Fuzzy& g) { return fuzzy_leq(c, g); })) return c;
    throw Error("directed finite generators without a least element");
  }

  const TNorm& tnorm() const noexcept { return t_; }
  std::size_t carrier() const noexcept { return n_; }
  const std::vector<Fuzzy>& generators() const noexcept { return gens_; }

 private:
  TNorm t_;
  std::size_t n_;
  std::vector<Fuzzy> gens_;
};

struct CfReport {
  bool cf1 = true, cf2 = true, cf3 = true, cf4 = true;
  std::string witness;
  std::size_t pairs_checked = 0;
  bool ok() const { return cf1 && cf2 && cf3 && cf4; }
};

using FilterFn = std::function<Value(const Fuzzy&)>;

/// CF1–CF4 for an arbitrary functional on grid^n, over every λ, μ and r:
/// CF1 sub(λ,μ) ≤ 𝔉λ → 𝔉μ; CF2 𝔉(1) = 1; CF3 𝔉λ ∧ 𝔉μ = 𝔉(λ∧μ);
/// CF4 𝔉(r→λ) = 1 whenever 𝔉λ > r.
inline CfReport conical_filter_check(const FilterFn& f, std::size_t n, const std::vector<Value>& points,
                                     const TNorm& t, std::size_t bound = kDefaultEnumerationBound) {
  std::vector<Fuzzy> all;
  detail::for_each_grid_vector(
      n, points.size(), bound, [](const auto&) { return true; },
      [&](const std::vector<std::size_t>& idx) {
        Fuzzy v;
        for (auto i : idx) v.push_back(points[i]);
        all.push_back(std::move(v));
      });
  if (static_cast<double>(all.size()) * static_cast<double>(all.size()) > static_cast<double>(bound))
    throw BoundExceeded("conical filter check exceeds bound " + std::to_string(bound));
  CfReport r;
  const Mode m = points.front().mode();
  const Value one = Value::one(m);
  auto show = [](const Fuzzy& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
  };
  std::vector<Value> fv;
  for (const auto& l : all) fv.push_back(f(l));
  if (!approx_equal(f(Fuzzy(n, one)), one)) {
    r.cf2 = false;
    r.witness = "CF2: F(1) != 1";
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      ++r.pairs_checked;
      if (r.cf1 && !leq(fuzzy_sub(t, all[i], all[j]), imp(t, fv[i], fv[j]))) {
        r.cf1 = false;
        r.witness += "CF1 at " + show(all[i]) + "," + show(all[j]) + "; ";
      }
      if (r.cf3) {
        Fuzzy meet(n, one);
        for (std::size_t c = 0; c < n; ++c) meet[c] = vmin(all[i][c], all[j][c]);
        if (!approx_equal(vmin(fv[i], fv[j]), f(meet))) {
          r.cf3 = false;
          r.witness += "CF3 at " + show(all[i]) + "," + show(all[j]) + "; ";
        }
      }
    }
  for (std::size_t i = 0; i < all.size() && r.cf4; ++i)
    for (const auto& p : points) {
      if (!strictly_less(p, fv[i])) continue;
      Fuzzy shifted;
      for (const auto& v : all[i]) shifted.push_back(imp(t, p, v));
      if (!approx_equal(f(shifted), one)) {
        r.cf4 = false;
        r.witness += "CF4 at r=" + p.str() + ", lambda=" + show(all[i]) + "; ";
        break;
      }
    }
  return r;
}

inline CfReport conical_filter_check(const ConicalFilter& f, const std::vector<Value>& points,
                                     std::size_t bound = kDefaultEnumerationBound) {
  return conical_filter_check([&](const Fuzzy& l) { return f(l); }, f.carrier(), points, f.tnorm(), bound);
}

/// A finitely generated filter on a finite list of filters of the same set.
struct MetaFilter {
  std::vector<ConicalFilter> filters;
  std::vector<Fuzzy> generators;  // each indexed by `filters`
};

/// k(𝓕)(λ) = sup over generators ξ of inf over 𝔉 of ξ(𝔉) → 𝔉(λ), evaluated directly.
inline Value kowalsky_eval(const MetaFilter& m, const Fuzzy& lambda) {
  const TNorm& t = m.filters.front().tnorm();
  Value best = Value::zero(lambda.front().mode());
  for (const auto& xi : m.generators) {
    Value acc = Value::one(lambda.front().mode());
    for (std::size_t i = 0; i < m.filters.size(); ++i) acc = vmin(acc, imp(t, xi[i], m.filters[i](lambda)));
    best = vmax(best, acc);
  }
  return best;
}

/// The Kowalsky sum as a generated filter: generator ξ becomes
/// sup_i ξ(𝔉_i) ⊗ (least generator of 𝔉_i).
inline ConicalFilter kowalsky_sum(const MetaFilter& m) {
  if (m.filters.empty()) throw InvalidArgument("meta-filter over no filters");
  const TNorm& t = m.filters.front().tnorm();
  const std::size_t n = m.filters.front().carrier();
  for (const auto& xi : m.generators)
    if (xi.size() != m.filters.size()) throw InvalidArgument("meta-filter generator over the wrong carrier");
  // directedness of the meta generators is checked by constructing the meta filter itself
  ConicalFilter meta(t, m.filters.size(), m.generators);
  (void)meta;
  std::vector<Fuzzy> gens;
  for (const auto& xi : m.generators) {
    Fuzzy g(n, Value::zero(xi.front().mode()));
    for (std::size_t i = 0; i < m.filters.size(); ++i) {
      const Fuzzy& least = m.filters[i].least_generator();
      for (std::size_t c = 0; c < n; ++c) g[c] = vmax(g[c], conj(t, xi[i], least[c]));
    }
    gens.push_back(std::move(g));
  }
  return ConicalFilter(t, n, std::move(gens));
}

/// A CF4 failure of r → 𝔉 where 𝔉(μ) is the limit of μ along a sequence whose
/// λ-values increase strictly to L: 𝔉(λ) = L, and 𝔉(s → λ) is the left limit
/// of s → z as z increases to L.
struct LimitCf4Witness {
  Value t, s, limit;
  Value at_lambda;   // (t → 𝔉)(λ) = t → L
  Value at_shifted;  // (t → 𝔉)(s → λ)
};

/// Searches grid triples (t, s, L), 0 < L < 1, for (t→𝔉)(λ) > s with
/// (t→𝔉)(s→λ) < 1. Such a triple exists exactly when the residuum jumps,
/// i.e. at the bottom of a Łukasiewicz block not starting at 0.
inline std::optional<LimitCf4Witness> find_limit_cf4_witness(const std::vector<Value>& points, const TNorm& tn) {
  for (const auto& l : points) {
    if (l.is_zero() || l.is_one()) continue;
    for (const auto& t : points)
      for (const auto& s : points) {
        const Value at_lambda = imp(tn, t, l);
        if (!strictly_less(s, at_lambda)) continue;
        const Value at_shifted = imp(tn, t, imp_left_limit(tn, s, l));
        if (strictly_less(at_shifted, Value::one(l.mode()))) return LimitCf4Witness{t, s, l, at_lambda, at_shifted};
      }
  }
  return std::nullopt;
}

}  // namespace qcat
