#pragma once

// Finite real-enriched categories, [0,1]-relations and functors.
//
// A relation r: X → Y is stored as an |X|×|Y| matrix r(x,y). Composition
// follows s∘r(x,z) = sup_y s(y,z) ⊗ r(x,y), so the weight φ of X is the
// |X|×1 relation X → ⋆ and a coweight is the 1×|X| relation ⋆ → X.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qcat/error.hpp"
#include "qcat/grid.hpp"
#include "qcat/poset.hpp"
#include "qcat/tnorm.hpp"
#include "qcat/value.hpp"

namespace qcat {

class Rel {
 public:
  Rel() = default;
  Rel(std::size_t rows, std::size_t cols, Value fill) : rows_(rows), cols_(cols), m_(rows * cols, fill) {}
  Rel(std::size_t rows, std::size_t cols, std::vector<Value> entries)
      : rows_(rows), cols_(cols), m_(std::move(entries)) {
    if (m_.size() != rows * cols) throw InvalidArgument("relation entry count does not match its shape");
    for (std::size_t i = 1; i < m_.size(); ++i) Value::same_mode(m_[0], m_[i]);
  }
  static Rel from_rows(const std::vector<std::vector<Value>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    std::vector<Value> e;
    e.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw InvalidArgument("ragged relation matrix");
      e.insert(e.end(), row.begin(), row.end());
    }
    return Rel(r, c, std::move(e));
  }
  static Rel identity(std::size_t n, Mode m) {
    Rel r(n, n, Value::zero(m));
    for (std::size_t i = 0; i < n; ++i) r(i, i) = Value::one(m);
    return r;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Mode mode() const { return m_.empty() ? Mode::Exact : m_.front().mode(); }
  const Value& operator()(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }
  Value& operator()(std::size_t i, std::size_t j) { return m_[i * cols_ + j]; }
  const std::vector<Value>& entries() const noexcept { return m_; }

  Rel transpose() const {
    Rel t(cols_, rows_, Value::zero(mode()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Rel&, const Rel&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Value> m_;
};

/// Entrywise comparison, exact or within the float tolerance.
inline bool rel_equal(const Rel& a, const Rel& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!approx_equal(a.entries()[i], b.entries()[i])) return false;
  return true;
}

inline bool rel_leq(const Rel& a, const Rel& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("relation shape mismatch");
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!leq(a.entries()[i], b.entries()[i])) return false;
  return true;
}

/// s∘r for r: X → Y and s: Y → Z.
inline Rel compose(const TNorm& t, const Rel& s, const Rel& r) {
  if (r.cols() != s.rows()) throw InvalidArgument("compose: middle carriers differ");
  const Mode m = r.rows() && r.cols() ? r.mode() : s.mode();
  Rel out(r.rows(), s.cols(), Value::zero(m));
  for (std::size_t x = 0; x < r.rows(); ++x)
    for (std::size_t z = 0; z < s.cols(); ++z) {
      Value acc = Value::zero(m);
      for (std::size_t y = 0; y < r.cols(); ++y) acc = vmax(acc, conj(t, s(y, z), r(x, y)));
      out(x, z) = acc;
    }
  return out;
}

/// (t↙r)(y,z) = inf_x r(x,y) → t(x,z), for t: X → Z and r: X → Y.
inline Rel residual_left(const TNorm& tn, const Rel& t, const Rel& r) {
  if (t.rows() != r.rows()) throw InvalidArgument("residual_left: source carriers differ");
  const Mode m = t.rows() && t.cols() ? t.mode() : r.mode();
  Rel out(r.cols(), t.cols(), Value::one(m));
  for (std::size_t y = 0; y < r.cols(); ++y)
    for (std::size_t z = 0; z < t.cols(); ++z) {
      Value acc = Value::one(m);
      for (std::size_t x = 0; x < r.rows(); ++x) acc = vmin(acc, imp(tn, r(x, y), t(x, z)));
      out(y, z) = acc;
    }
  return out;
}

/// (s↘t)(x,y) = inf_z s(y,z) → t(x,z), for s: Y → Z and t: X → Z.
inline Rel residual_right(const TNorm& tn, const Rel& s, const Rel& t) {
  if (s.cols() != t.cols()) throw InvalidArgument("residual_right: target carriers differ");
  const Mode m = t.rows() && t.cols() ? t.mode() : s.mode();
  Rel out(t.rows(), s.rows(), Value::one(m));
  for (std::size_t x = 0; x < t.rows(); ++x)
    for (std::size_t y = 0; y < s.rows(); ++y) {
      Value acc = Value::one(m);
      for (std::size_t z = 0; z < s.cols(); ++z) acc = vmin(acc, imp(tn, s(y, z), t(x, z)));
      out(x, y) = acc;
    }
  return out;
}

class EnrichedCategory {
 public:
  EnrichedCategory() = default;
  EnrichedCategory(TNorm t, Rel hom, std::optional<ValueGrid> grid = std::nullopt, std::vector<std::string> names = {})
      : tnorm_(std::move(t)), grid_(std::move(grid)), names_(std::move(names)), hom_(std::move(hom)) {
    if (hom_.rows() != hom_.cols()) throw InvalidArgument("hom matrix must be square");
    if (names_.empty())
      for (std::size_t i = 0; i < hom_.rows(); ++i) names_.push_back(default_name(i));
    if (names_.size() != hom_.rows()) throw InvalidArgument("names do not match the carrier size");
  }

  std::size_t size() const noexcept { return hom_.rows(); }
  const TNorm& tnorm() const noexcept { return tnorm_; }
  const std::optional<ValueGrid>& grid() const noexcept { return grid_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const Rel& hom() const noexcept { return hom_; }
  const Value& operator()(std::size_t x, std::size_t y) const { return hom_(x, y); }
  Mode mode() const { return size() ? hom_.mode() : (grid_ ? grid_->mode() : Mode::Exact); }
  Value zero() const { return Value::zero(mode()); }
  Value one() const { return Value::one(mode()); }

  const ValueGrid& require_grid() const {
    if (!grid_) throw InvalidArgument("operation needs a category with a value grid");
    return *grid_;
  }

  static std::string default_name(std::size_t i) {
    std::string s;
    do {
      s.insert(s.begin(), static_cast<char>('a' + i % 26));
      i /= 26;
    } while (i-- > 0);
    return s;
  }

 private:
  TNorm tnorm_;
  std::optional<ValueGrid> grid_;
  std::vector<std::string> names_;
  Rel hom_;
};

struct Violation {
  enum class Kind { Shape, Grid, Reflexivity, Transitivity, Functoriality };
  Kind kind;
  std::vector<std::size_t> where;  // the offending indices
  std::string message;
};

inline const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::Shape:
      return "shape";
    case Violation::Kind::Grid:
      return "grid";
    case Violation::Kind::Reflexivity:
      return "reflexivity";
    case Violation::Kind::Transitivity:
      return "transitivity";
    case Violation::Kind::Functoriality:
      return "functoriality";
  }
  return "?";
}

/// First violated axiom, scanning x, then y, then z. Float mode grants the
/// transitivity inequality a slack of kFloatTolerance.
inline std::optional<Violation> validate(const EnrichedCategory& c) {
  const std::size_t n = c.size();
  if (c.grid()) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (c(x, y).mode() != c.grid()->mode() || !c.grid()->contains(c(x, y)))
          return Violation{Violation::Kind::Grid, {x, y},
                           "hom(" + c.names()[x] + "," + c.names()[y] + ") = " + c(x, y).str() + " is not a grid point"};
  }
  for (std::size_t x = 0; x < n; ++x)
    if (!approx_equal(c(x, x), c.one()))
      return Violation{Violation::Kind::Reflexivity, {x}, "hom(" + c.names()[x] + "," + c.names()[x] + ") != 1"};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!leq(conj(c.tnorm(), c(y, z), c(x, y)), c(x, z)))
          return Violation{Violation::Kind::Transitivity,
                           {x, y, z},
                           "hom(" + c.names()[y] + "," + c.names()[z] + ") ⊗ hom(" + c.names()[x] + "," + c.names()[y] +
                               ") > hom(" + c.names()[x] + "," + c.names()[z] + ")"};
  return std::nullopt;
}

/// Constructs and validates in one step, throwing on a violation.
inline EnrichedCategory make_category(TNorm t, Rel hom, std::optional<ValueGrid> grid = std::nullopt,
                                      std::vector<std::string> names = {}) {
  EnrichedCategory c(std::move(t), std::move(hom), std::move(grid), std::move(names));
  if (auto v = validate(c)) throw InvalidArgument("not a category: " + v->message);
  return c;
}

/// The one-object category ⋆.
inline EnrichedCategory terminal_category(const TNorm& t, Mode m, std::optional<ValueGrid> grid = std::nullopt) {
  return EnrichedCategory(t, Rel::identity(1, m), std::move(grid), {"*"});
}

/// The grid itself as a category, hom(x,y) = x → y.
inline EnrichedCategory grid_category(const ValueGrid& g) {
  const std::size_t n = g.size();
  Rel hom(n, n, Value::zero(g.mode()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(g[i].str());
    for (std::size_t j = 0; j < n; ++j) hom(i, j) = g[g.imp_index(i, j)];
  }
  return EnrichedCategory(g.tnorm(), std::move(hom), g, std::move(names));
}

// --- derived structures ------------------------------------------------------

/// x ⊑ y iff X(x,y) = 1.
inline FinitePoset underlying_order(const EnrichedCategory& c) {
  std::vector<std::vector<bool>> r(c.size(), std::vector<bool>(c.size()));
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) r[x][y] = approx_equal(c(x, y), c.one());
  return FinitePoset(std::move(r));
}

inline bool isomorphic_elements(const EnrichedCategory& c, std::size_t x, std::size_t y) {
  return approx_equal(c(x, y), c.one()) && approx_equal(c(y, x), c.one());
}

inline bool is_separated(const EnrichedCategory& c) {
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x + 1; y < c.size(); ++y)
      if (isomorphic_elements(c, x, y)) return false;
  return true;
}

inline EnrichedCategory opposite(const EnrichedCategory& c) {
  return EnrichedCategory(c.tnorm(), c.hom().transpose(), c.grid(), c.names());
}

/// S(X)(x,y) = min{X(x,y), X(y,x)}.
inline EnrichedCategory symmetrize(const EnrichedCategory& c) {
  Rel h = c.hom();
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y) h(x, y) = vmin(c(x, y), c(y, x));
  return EnrichedCategory(c.tnorm(), std::move(h), c.grid(), c.names());
}

struct Quotient {
  EnrichedCategory category;
  FiniteMap projection;            // element ↦ class index
  std::vector<std::size_t> reps;   // class index ↦ least-index representative
};

/// Merges isomorphic elements; each class is represented by its least index.
inline Quotient separated_quotient(const EnrichedCategory& c) {
  Quotient q;
  q.projection.assign(c.size(), 0);
  for (std::size_t x = 0; x < c.size(); ++x) {
    auto it = std::find_if(q.reps.begin(), q.reps.end(), [&](std::size_t r) { return isomorphic_elements(c, r, x); });
    if (it == q.reps.end()) {
      q.projection[x] = q.reps.size();
      q.reps.push_back(x);
    } else {
      q.projection[x] = static_cast<std::size_t>(it - q.reps.begin());
    }
  }
  const std::size_t k = q.reps.size();
  Rel h(k, k, c.zero());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back(c.names()[q.reps[i]]);
    for (std::size_t j = 0; j < k; ++j) h(i, j) = c(q.reps[i], q.reps[j]);
  }
  q.category = EnrichedCategory(c.tnorm(), std::move(h), c.grid(), std::move(names));
  return q;
}

// --- functors and distributors -----------------------------------------------

/// X(x,y) ≤ Y(f x, f y) for all pairs.
inline std::optional<Violation> check_functor(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f) {
  if (f.size() != x.size()) return Violation{Violation::Kind::Shape, {}, "functor map size differs from its source"};
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= y.size()) return Violation{Violation::Kind::Shape, {i}, "functor maps outside its target"};
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b)
      if (!leq(x(a, b), y(f[a], f[b])))
        return Violation{Violation::Kind::Functoriality, {a, b},
                         "X(" + x.names()[a] + "," + x.names()[b] + ") > Y(f" + x.names()[a] + ",f" + x.names()[b] + ")"};
  return std::nullopt;
}

inline bool is_functor(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f) {
  return !check_functor(x, y, f);
}

namespace detail {
inline void require_functor(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f) {
  if (auto v = check_functor(x, y, f)) throw InvalidArgument("not a functor: " + v->message);
}
}  // namespace detail

/// f_*(x,y) = Y(f x, y), a distributor X ⇸ Y.
inline Rel graph(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f) {
  detail::require_functor(x, y, f);
  Rel r(x.size(), y.size(), y.zero());
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < y.size(); ++b) r(a, b) = y(f[a], b);
  return r;
}

/// f^*(y,x) = Y(y, f x), a distributor Y ⇸ X.
inline Rel cograph(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f) {
  detail::require_functor(x, y, f);
  Rel r(y.size(), x.size(), y.zero());
  for (std::size_t b = 0; b < y.size(); ++b)
    for (std::size_t a = 0; a < x.size(); ++a) r(b, a) = y(b, f[a]);
  return r;
}

/// f^*∘f_* = X.
inline bool is_fully_faithful(const EnrichedCategory& x, const EnrichedCategory& y, const FiniteMap& f) {
  return rel_equal(compose(x.tnorm(), cograph(x, y, f), graph(x, y, f)), x.hom());
}

/// Distributor laws for φ: X ⇸ Y.
inline bool is_distributor(const EnrichedCategory& x, const EnrichedCategory& y, const Rel& phi) {
  if (phi.rows() != x.size() || phi.cols() != y.size()) return false;
  const TNorm& t = x.tnorm();
  for (std::size_t b = 0; b < y.size(); ++b)
    for (std::size_t a1 = 0; a1 < x.size(); ++a1)
      for (std::size_t a2 = 0; a2 < x.size(); ++a2)
        if (!leq(conj(t, phi(a2, b), x(a1, a2)), phi(a1, b))) return false;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b1 = 0; b1 < y.size(); ++b1)
      for (std::size_t b2 = 0; b2 < y.size(); ++b2)
        if (!leq(conj(t, y(b1, b2), phi(a, b1)), phi(a, b2))) return false;
  return true;
}

/// ψ: X ⇸ Y left adjoint to φ: Y ⇸ X, i.e. X ≤ φ∘ψ and ψ∘φ ≤ Y.
inline bool adjoint_pair_check(const EnrichedCategory& x, const EnrichedCategory& y, const Rel& psi, const Rel& phi) {
  const TNorm& t = x.tnorm();
  if (psi.rows() != x.size() || psi.cols() != y.size() || phi.rows() != y.size() || phi.cols() != x.size())
    throw InvalidArgument("adjoint_pair_check: carrier mismatch");
  return rel_leq(x.hom(), compose(t, phi, psi)) && rel_leq(compose(t, psi, phi), y.hom());
}

// --- hom-categories and isomorphism -----------------------------------------

inline constexpr std::size_t kDefaultFunctorBound = 100000;

/// Every map X → Y that is a functor, in lexicographic order of the map.
inline std::vector<FiniteMap> enumerate_functors(const EnrichedCategory& x, const EnrichedCategory& y,
                                                 std::size_t bound = kDefaultFunctorBound) {
  double count = 1;
  for (std::size_t i = 0; i < x.size(); ++i) count *= static_cast<double>(y.size());
  if (count > static_cast<double>(bound)) throw BoundExceeded("functor enumeration exceeds bound " + std::to_string(bound));
  std::vector<FiniteMap> out;
  if (y.size() == 0 && x.size() > 0) return out;
  FiniteMap f(x.size(), 0);
  for (;;) {
    if (is_functor(x, y, f)) out.push_back(f);
    std::size_t i = x.size();
    while (i > 0 && ++f[i - 1] == y.size()) f[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

struct HomCategory {
  EnrichedCategory category;
  std::vector<FiniteMap> functors;
};

/// [X,Y](f,g) = inf_x Y(f x, g x) on the set of all functors X → Y.
inline HomCategory hom_category(const EnrichedCategory& x, const EnrichedCategory& y,
                                std::size_t bound = kDefaultFunctorBound) {
  HomCategory out;
  out.functors = enumerate_functors(x, y, bound);
  const std::size_t k = out.functors.size();
  Rel h(k, k, y.one());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    std::string nm = "[";
    for (std::size_t a = 0; a < x.size(); ++a) nm += (a ? "," : "") + y.names()[out.functors[i][a]];
    names.push_back(nm + "]");
    for (std::size_t j = 0; j < k; ++j) {
      Value acc = y.one();
      for (std::size_t a = 0; a < x.size(); ++a) acc = vmin(acc, y(out.functors[i][a], out.functors[j][a]));
      h(i, j) = acc;
    }
  }
  out.category = EnrichedCategory(y.tnorm(), std::move(h), y.grid(), std::move(names));
  return out;
}

/// A bijection p with A(i,j) = B(p i, p j), found by trying all permutations.
inline std::optional<FiniteMap> find_isomorphism(const EnrichedCategory& a, const EnrichedCategory& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() > 9) throw BoundExceeded("isomorphism search limited to 9 elements");
  FiniteMap p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = approx_equal(a(i, j), b(p[i], p[j]));
    if (ok) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

}  // namespace qcat
