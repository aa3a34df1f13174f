#pragma once

// Truth values in [0,1], either exact rationals or binary64 floats.

#include <cmath>
#include <compare>
#include <sstream>
#include <string>
#include <variant>

#include "qcat/error.hpp"
#include "qcat/rational.hpp"

namespace qcat {

enum class Mode { Exact, Float };

/// Comparison slack for float-mode values.
inline constexpr double kFloatTolerance = 1e-12;

inline const char* to_string(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

class Value {
 public:
  Value() = default;  // exact 0
  explicit Value(Rational r) : v_(std::move(r)) { check_range(); }
  explicit Value(double d) : v_(d) { check_range(); }

  static Value zero(Mode m) { return m == Mode::Exact ? Value(Rational(0)) : Value(0.0); }
  static Value one(Mode m) { return m == Mode::Exact ? Value(Rational(1)) : Value(1.0); }

  /// Parses "p/q" or a decimal as an exact value.
  static Value parse_exact(std::string_view text) { return Value(Rational::parse(text)); }

  /// Float results of t-norm arithmetic may drift past the unit interval by rounding.
  static Value clamped(double d) { return Value(d < 0.0 ? 0.0 : (d > 1.0 ? 1.0 : d)); }

  Mode mode() const noexcept { return v_.index() == 0 ? Mode::Exact : Mode::Float; }
  bool is_exact() const noexcept { return v_.index() == 0; }

  const Rational& rational() const {
    if (!is_exact()) throw ExactUnsupported("float value has no exact payload");
    return std::get<0>(v_);
  }
  double to_double() const { return is_exact() ? std::get<0>(v_).to_double() : std::get<1>(v_); }

  /// Same number in the requested mode (exact to float rounds; float to exact is refused).
  Value in_mode(Mode m) const {
    if (m == mode()) return *this;
    if (m == Mode::Float) return Value(to_double());
    throw ExactUnsupported("cannot convert float value to exact mode");
  }

  bool is_zero() const { return is_exact() ? std::get<0>(v_).sign() == 0 : std::get<1>(v_) == 0.0; }
  bool is_one() const { return is_exact() ? std::get<0>(v_) == Rational(1) : std::get<1>(v_) == 1.0; }

  std::string str() const {
    if (is_exact()) return std::get<0>(v_).str();
    std::ostringstream os;
    os.precision(17);
    os << std::get<1>(v_);
    return os.str();
  }

  friend bool operator==(const Value& a, const Value& b) {
    same_mode(a, b);
    return a.v_ == b.v_;
  }
  friend std::partial_ordering operator<=>(const Value& a, const Value& b) {
    same_mode(a, b);
    if (a.is_exact()) return std::get<0>(a.v_) <=> std::get<0>(b.v_);
    return std::get<1>(a.v_) <=> std::get<1>(b.v_);
  }

  static void same_mode(const Value& a, const Value& b) {
    if (a.v_.index() != b.v_.index()) throw ModeMismatch();
  }

  /// Applies `f` to both payloads as Rational or as double; `f` must be generic.
  template <class F>
  friend Value lift(const Value& a, const Value& b, F&& f) {
    same_mode(a, b);
    if (a.is_exact()) return Value(f(std::get<0>(a.v_), std::get<0>(b.v_)));
    return clamped(f(std::get<1>(a.v_), std::get<1>(b.v_)));
  }

  std::size_t hash() const noexcept {
    return is_exact() ? std::get<0>(v_).hash() : std::hash<double>{}(std::get<1>(v_));
  }

 private:
  void check_range() const {
    if (is_exact()) {
      const auto& r = std::get<0>(v_);
      if (r.sign() < 0 || Rational(1) < r) throw InvalidArgument("value " + r.str() + " outside [0,1]");
    } else {
      const double d = std::get<1>(v_);
      if (!(d >= 0.0 && d <= 1.0)) throw InvalidArgument("value " + std::to_string(d) + " outside [0,1]");
    }
  }

  std::variant<Rational, double> v_;
};

inline std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

inline const Value& vmin(const Value& a, const Value& b) { return b < a ? b : a; }
inline const Value& vmax(const Value& a, const Value& b) { return a < b ? b : a; }

/// a ≤ b, exactly in exact mode and up to kFloatTolerance in float mode.
inline bool leq(const Value& a, const Value& b) {
  Value::same_mode(a, b);
  if (a.is_exact()) return a <= b;
  return a.to_double() <= b.to_double() + kFloatTolerance;
}

/// a = b, exactly in exact mode and up to kFloatTolerance in float mode.
inline bool approx_equal(const Value& a, const Value& b) {
  Value::same_mode(a, b);
  if (a.is_exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= kFloatTolerance;
}

/// Strict a < b (float mode: beyond the tolerance).
inline bool strictly_less(const Value& a, const Value& b) { return !leq(b, a); }

}  // namespace qcat

template <>
struct std::hash<qcat::Value> {
  std::size_t operator()(const qcat::Value& v) const noexcept { return v.hash(); }
};
