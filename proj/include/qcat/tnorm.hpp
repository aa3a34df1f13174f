#pragma once

// Continuous t-norms: Gödel (min), product, Łukasiewicz and ordinal sums of
// product/Łukasiewicz blocks. Every kind is evaluated through one block
// representation: Gödel has no blocks, product and Łukasiewicz are a single
// block spanning [0,1].

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "qcat/error.hpp"
#include "qcat/value.hpp"

namespace qcat {

enum class Archimedean { Product, Lukasiewicz };

struct Block {
  Rational lo;
  Rational hi;
  Archimedean inner;

  friend bool operator==(const Block&, const Block&) = default;
};

class TNorm {
 public:
  enum class Kind { Godel, Product, Lukasiewicz, OrdinalSum };

  TNorm() = default;  // Gödel

  static TNorm godel() { return TNorm(Kind::Godel, {}); }
  static TNorm product() { return TNorm(Kind::Product, {{Rational(0), Rational(1), Archimedean::Product}}); }
  static TNorm lukasiewicz() {
    return TNorm(Kind::Lukasiewicz, {{Rational(0), Rational(1), Archimedean::Lukasiewicz}});
  }
  /// Blocks must satisfy lo < hi, lie in [0,1], and be sorted and non-overlapping.
  static TNorm ordinal_sum(std::vector<Block> blocks);

  /// `godel`, `product`, `lukasiewicz`, or `ordinal[(lo,hi,inner),...]`.
  static TNorm parse(std::string_view text);
  std::string str() const;

  Kind kind() const noexcept { return kind_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  /// Exact arithmetic stays in the rationals for every kind; only the
  /// product generator leaves them.
  bool has_product_block() const {
    return std::any_of(blocks_.begin(), blocks_.end(), [](const Block& b) { return b.inner == Archimedean::Product; });
  }

  friend bool operator==(const TNorm&, const TNorm&) = default;

 private:
  TNorm(Kind k, std::vector<Block> b) : kind_(k), blocks_(std::move(b)) {}

  Kind kind_ = Kind::Godel;
  std::vector<Block> blocks_;
};

namespace detail {

template <class S>
S to_scalar(const Rational& r) {
  if constexpr (std::is_same_v<S, Rational>)
    return r;
  else
    return r.to_double();
}

template <class S>
S smin(const S& a, const S& b) {
  return b < a ? b : a;
}
template <class S>
S smax(const S& a, const S& b) {
  return a < b ? b : a;
}

// Index of the block whose open interior, together with its closed ends,
// hosts both arguments; shared endpoints fall to the min rule.
template <class S>
const Block* block_of(const std::vector<Block>& blocks, const S& x, const S& y) {
  for (const auto& b : blocks) {
    const S lo = to_scalar<S>(b.lo), hi = to_scalar<S>(b.hi);
    if (lo < x && x < hi && lo < y && y < hi) return &b;
  }
  return nullptr;
}

template <class S>
S conj(const std::vector<Block>& blocks, const S& x, const S& y) {
  if (const Block* b = block_of(blocks, x, y)) {
    const S lo = to_scalar<S>(b->lo), hi = to_scalar<S>(b->hi);
    if (b->inner == Archimedean::Lukasiewicz) return smax<S>(lo, x + y - hi);
    return lo + (x - lo) * (y - lo) / (hi - lo);
  }
  return smin(x, y);
}

template <class S>
S block_imp(const Block& b, const S& x, const S& y) {
  const S lo = to_scalar<S>(b.lo), hi = to_scalar<S>(b.hi);
  if (b.inner == Archimedean::Lukasiewicz) return hi - x + y;
  return lo + (hi - lo) * (y - lo) / (x - lo);
}

template <class S>
S imp(const std::vector<Block>& blocks, const S& x, const S& y) {
  if (x <= y) return S(1);
  for (const auto& b : blocks) {
    const S lo = to_scalar<S>(b.lo), hi = to_scalar<S>(b.hi);
    if (lo <= y && y < x && x <= hi) return block_imp(b, x, y);
  }
  return y;
}

// lim_{z ↑ limit} (x → z), for limit > 0.
template <class S>
S imp_left_limit(const std::vector<Block>& blocks, const S& x, const S& limit) {
  if (x < limit) return S(1);
  for (const auto& b : blocks) {
    const S lo = to_scalar<S>(b.lo), hi = to_scalar<S>(b.hi);
    if (lo < limit && x <= hi) return block_imp(b, x, limit);
  }
  return limit;
}

}  // namespace detail

inline TNorm TNorm::ordinal_sum(std::vector<Block> blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto& b = blocks[i];
    if (b.lo.sign() < 0 || Rational(1) < b.hi) throw InvalidArgument("ordinal-sum block outside [0,1]");
    if (!(b.lo < b.hi)) throw InvalidArgument("ordinal-sum block needs lo < hi");
    if (i > 0 && blocks[i - 1].hi > b.lo) throw InvalidArgument("ordinal-sum blocks must be sorted and disjoint");
  }
  return TNorm(Kind::OrdinalSum, std::move(blocks));
}

inline std::string TNorm::str() const {
  switch (kind_) {
    case Kind::Godel:
      return "godel";
    case Kind::Product:
      return "product";
    case Kind::Lukasiewicz:
      return "lukasiewicz";
    case Kind::OrdinalSum:
      break;
  }
  std::string out = "ordinal[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += ",";
    const auto& b = blocks_[i];
    out += "(" + b.lo.str() + "," + b.hi.str() + "," +
           (b.inner == Archimedean::Product ? "product" : "lukasiewicz") + ")";
  }
  return out + "]";
}

inline TNorm TNorm::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "godel" || s == "goedel" || s == "min") return godel();
  if (s == "product") return product();
  if (s == "lukasiewicz" || s == "luk") return lukasiewicz();
  if (s.rfind("ordinal[", 0) != 0 || s.back() != ']') throw ParseError("unknown t-norm '" + std::string(text) + "'");
  const std::string body = s.substr(8, s.size() - 9);
  std::vector<Block> blocks;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] == ',') {
      ++pos;
      continue;
    }
    if (body[pos] != '(') throw ParseError("expected '(' in ordinal sum '" + std::string(text) + "'");
    const auto close = body.find(')', pos);
    if (close == std::string::npos) throw ParseError("unterminated block in '" + std::string(text) + "'");
    const std::string inner = body.substr(pos + 1, close - pos - 1);
    const auto c1 = inner.find(',');
    const auto c2 = inner.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw ParseError("block needs (lo,hi,inner) in '" + std::string(text) + "'");
    const std::string kind = inner.substr(c2 + 1);
    Archimedean a;
    if (kind == "product")
      a = Archimedean::Product;
    else if (kind == "lukasiewicz" || kind == "luk")
      a = Archimedean::Lukasiewicz;
    else
      throw ParseError("block inner t-norm must be product or lukasiewicz, got '" + kind + "'");
    blocks.push_back({Rational::parse(inner.substr(0, c1)), Rational::parse(inner.substr(c1 + 1, c2 - c1 - 1)), a});
    pos = close + 1;
  }
  try {
    return ordinal_sum(std::move(blocks));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

/// x ⊗ y.
inline Value conj(const TNorm& t, const Value& x, const Value& y) {
  return lift(x, y, [&](const auto& a, const auto& b) { return detail::conj(t.blocks(), a, b); });
}

/// The residuum x → y: the largest z with x ⊗ z ≤ y.
inline Value imp(const TNorm& t, const Value& x, const Value& y) {
  return lift(x, y, [&](const auto& a, const auto& b) { return detail::imp(t.blocks(), a, b); });
}

/// lim of x → z as z increases to `limit` (limit > 0). Differs from
/// imp(x, limit) exactly where the residuum jumps, i.e. at the bottom of a
/// Łukasiewicz block that does not start at 0.
inline Value imp_left_limit(const TNorm& t, const Value& x, const Value& limit) {
  if (limit.is_zero()) throw InvalidArgument("left limit at 0 is undefined");
  return lift(x, limit, [&](const auto& a, const auto& b) { return detail::imp_left_limit(t.blocks(), a, b); });
}

/// n-fold power x ⊗ ... ⊗ x, n ≥ 1.
inline Value power(const TNorm& t, const Value& x, unsigned n) {
  if (n == 0) throw InvalidArgument("power needs n >= 1");
  Value acc = x;
  for (unsigned i = 1; i < n; ++i) acc = conj(t, acc, x);
  return acc;
}

inline bool is_idempotent(const TNorm& t, const Value& x) { return conj(t, x, x) == x; }

inline bool is_archimedean(const TNorm& t) {
  const auto& b = t.blocks();
  return b.size() == 1 && b[0].lo == Rational(0) && b[0].hi == Rational(1);
}

/// The residuum is continuous off the diagonal iff every Łukasiewicz block starts at 0.
inline bool continuous_off_diagonal(const TNorm& t) {
  return std::all_of(t.blocks().begin(), t.blocks().end(),
                     [](const Block& b) { return b.inner == Archimedean::Product || b.lo.sign() == 0; });
}

/// A value of [−∞, 0] as produced by additive generators.
struct Extended {
  bool neg_inf = false;
  std::variant<Rational, double> finite = Rational(0);

  static Extended minus_infinity() { return {true, Rational(0)}; }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.neg_inf || b.neg_inf) return minus_infinity();
    if (a.finite.index() != b.finite.index()) throw ModeMismatch();
    if (a.finite.index() == 0) return {false, std::get<0>(a.finite) + std::get<0>(b.finite)};
    return {false, std::get<1>(a.finite) + std::get<1>(b.finite)};
  }
  double to_double() const {
    if (neg_inf) return -std::numeric_limits<double>::infinity();
    return finite.index() == 0 ? std::get<0>(finite).to_double() : std::get<1>(finite);
  }
};

namespace detail {
inline Archimedean archimedean_base(const TNorm& t) {
  if (t.kind() == TNorm::Kind::Product) return Archimedean::Product;
  if (t.kind() == TNorm::Kind::Lukasiewicz) return Archimedean::Lukasiewicz;
  throw InvalidArgument("additive generators exist only for product and lukasiewicz, not " + t.str());
}
}  // namespace detail

/// Additive generator: ln x for product (float only), x − 1 for Łukasiewicz.
inline Extended generator_eval(const TNorm& t, const Value& x) {
  if (detail::archimedean_base(t) == Archimedean::Lukasiewicz) {
    if (x.is_exact()) return {false, x.rational() - Rational(1)};
    return {false, x.to_double() - 1.0};
  }
  if (x.is_exact()) throw ExactUnsupported("product generator ln x leaves the rationals; use float mode");
  if (x.is_zero()) return Extended::minus_infinity();
  return {false, std::log(x.to_double())};
}

/// Pseudo-inverse of the generator: t⁻¹(u) on [t(0), 0], 0 below.
inline Value pseudo_inverse(const TNorm& t, const Extended& u) {
  const Archimedean a = detail::archimedean_base(t);
  if (u.neg_inf) return u.finite.index() == 0 ? Value(Rational(0)) : Value(0.0);
  if (u.finite.index() == 0) {
    const Rational& r = std::get<0>(u.finite);
    if (r.sign() > 0) throw InvalidArgument("generator values lie in [-inf, 0]");
    if (a == Archimedean::Product) throw ExactUnsupported("product pseudo-inverse exp u leaves the rationals");
    const Rational v = r + Rational(1);
    return v.sign() <= 0 ? Value(Rational(0)) : Value(v);
  }
  const double d = std::get<1>(u.finite);
  if (d > kFloatTolerance) throw InvalidArgument("generator values lie in [-inf, 0]");
  if (a == Archimedean::Product) return Value::clamped(std::exp(std::min(d, 0.0)));
  return Value::clamped(d + 1.0);
}

}  // namespace qcat
