#pragma once

// Finite value grids closed under ⊗ and →, so that every sup/inf formula over
// grid data evaluates exactly inside the grid.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcat/error.hpp"
#include "qcat/tnorm.hpp"
#include "qcat/value.hpp"

namespace qcat {

enum class GridOp { Conj, Imp };

inline const char* to_string(GridOp op) { return op == GridOp::Conj ? "conj" : "imp"; }

/// The grid is not closed: op(x, y) falls outside it.
class NotClosed : public Error {
 public:
  NotClosed(Value x, Value y, GridOp op, Value result)
      : Error("grid not closed: " + std::string(to_string(op)) + "(" + x.str() + "," + y.str() + ") = " +
              result.str() + " is not a grid point"),
        x(std::move(x)),
        y(std::move(y)),
        op(op),
        result(std::move(result)) {}
  Value x, y;
  GridOp op;
  Value result;
};

/// Saturation did not stabilise within the cap.
class CapExceeded : public BoundExceeded {
 public:
  explicit CapExceeded(std::size_t cap)
      : BoundExceeded("grid closure exceeded cap of " + std::to_string(cap) + " points"), cap(cap) {}
  std::size_t cap;
};

inline constexpr std::size_t kDefaultGridCap = 4096;

class ValueGrid {
 public:
  const std::vector<Value>& points() const noexcept { return points_; }
  const TNorm& tnorm() const noexcept { return tnorm_; }
  std::size_t size() const noexcept { return points_.size(); }
  Mode mode() const { return points_.front().mode(); }
  const Value& operator[](std::size_t i) const { return points_[i]; }
  const Value& bottom() const { return points_.front(); }
  const Value& top() const { return points_.back(); }

  std::optional<std::size_t> index_of(const Value& v) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), v);
    if (it != points_.end() && approx_equal(*it, v)) return static_cast<std::size_t>(it - points_.begin());
    if (it != points_.begin() && approx_equal(*(it - 1), v)) return static_cast<std::size_t>(it - points_.begin() - 1);
    return std::nullopt;
  }
  bool contains(const Value& v) const { return index_of(v).has_value(); }

  /// Index of x ⊗ y / x → y for grid indices.
  std::size_t conj_index(std::size_t i, std::size_t j) const { return conj_[i * size() + j]; }
  std::size_t imp_index(std::size_t i, std::size_t j) const { return imp_[i * size() + j]; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < points_.size(); ++i) s += (i ? ", " : "") + points_[i].str();
    return s + "}";
  }

  friend ValueGrid grid_validate(std::vector<Value> points, const TNorm& t);

 private:
  std::vector<Value> points_;
  TNorm tnorm_;
  std::vector<std::size_t> conj_, imp_;
};

namespace detail {
inline std::vector<Value> normalise_points(std::vector<Value> points) {
  if (points.empty()) throw InvalidArgument("grid needs at least the points 0 and 1");
  const Mode m = points.front().mode();
  for (const auto& p : points)
    if (p.mode() != m) throw ModeMismatch();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (!points.front().is_zero() || !points.back().is_one()) throw InvalidArgument("grid must contain 0 and 1");
  return points;
}
}  // namespace detail

/// Checks closure under ⊗ and →, reporting the first violating pair in
/// lexicographic order (conj before imp for the same pair).
inline ValueGrid grid_validate(std::vector<Value> points, const TNorm& t) {
  ValueGrid g;
  g.points_ = detail::normalise_points(std::move(points));
  g.tnorm_ = t;
  const std::size_t n = g.points_.size();
  g.conj_.resize(n * n);
  g.imp_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Value c = conj(t, g.points_[i], g.points_[j]);
      auto ci = g.index_of(c);
      if (!ci) throw NotClosed(g.points_[i], g.points_[j], GridOp::Conj, c);
      const Value r = imp(t, g.points_[i], g.points_[j]);
      auto ri = g.index_of(r);
      if (!ri) throw NotClosed(g.points_[i], g.points_[j], GridOp::Imp, r);
      g.conj_[i * n + j] = *ci;
      g.imp_[i * n + j] = *ri;
    }
  }
  return g;
}

/// Least superset of `seed` (plus 0 and 1) closed under ⊗ and →.
inline ValueGrid grid_closure(std::vector<Value> seed, const TNorm& t, std::size_t cap = kDefaultGridCap) {
  if (seed.empty()) throw InvalidArgument("empty seed");
  const Mode m = seed.front().mode();
  seed.push_back(Value::zero(m));
  seed.push_back(Value::one(m));
  std::vector<Value> pts = detail::normalise_points(std::move(seed));
  if (pts.size() > cap) throw CapExceeded(cap);
  for (;;) {
    std::set<Value> fresh;
    auto known = [&](const Value& v) { return std::binary_search(pts.begin(), pts.end(), v); };
    for (const auto& x : pts) {
      for (const auto& y : pts) {
        for (const Value& v : {conj(t, x, y), imp(t, x, y)}) {
          if (!known(v)) fresh.insert(v);
          if (pts.size() + fresh.size() > cap) throw CapExceeded(cap);
        }
      }
    }
    if (fresh.empty()) break;
    pts.insert(pts.end(), fresh.begin(), fresh.end());
    std::sort(pts.begin(), pts.end());
  }
  return grid_validate(std::move(pts), t);
}

/// Grid points x with x ⊗ x = x.
inline std::vector<Value> idempotents(const ValueGrid& g) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.conj_index(i, i) == i) out.push_back(g[i]);
  return out;
}

/// {0, 1/n, ..., 1} as exact values.
inline std::vector<Value> uniform_points(unsigned n) {
  if (n == 0) throw InvalidArgument("uniform grid needs n >= 1");
  std::vector<Value> pts;
  for (unsigned k = 0; k <= n; ++k) pts.emplace_back(Rational(k, n));
  return pts;
}

/// Parses `{0, 1/3, 2/3, 1}` (braces optional) into exact values.
inline std::vector<Value> parse_grid_points(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '{' || c == '}' || c == ' '; }), s.end());
  std::vector<Value> pts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) throw ParseError("empty grid entry in '" + std::string(text) + "'");
    try {
      pts.push_back(Value::parse_exact(tok));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return pts;
}

}  // namespace qcat
