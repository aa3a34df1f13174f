#pragma once

// Exact rational numbers.
//
// Values whose numerator and denominator fit in 64 bits are kept inline and
// combined with overflow-checked machine arithmetic. Anything larger moves to
// boost's arbitrary-precision rational and moves back once it fits again, so
// results never lose precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "qcat/error.hpp"

namespace qcat {

class Rational {
 public:
  using Big = boost::multiprecision::cpp_rational;
  using BigInt = boost::multiprecision::cpp_int;

  Rational() noexcept = default;
  Rational(std::int64_t n) noexcept : num_(n == kMin ? 0 : n) {  // NOLINT
    if (n == kMin) assign(Big(n));
  }
  Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw InvalidArgument("rational with zero denominator");
    if (n == kMin || d == kMin) {
      assign(Big(BigInt(n), BigInt(d)));
      return;
    }
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
  }
  explicit Rational(const Big& b) { assign(b); }

  /// Accepts "p", "p/q" and finite decimals such as "0.25" or "-1.5e-3".
  static Rational parse(std::string_view text);

  bool is_big() const noexcept { return static_cast<bool>(big_); }

  Big to_big() const {
    if (big_) return *big_;
    return Big(BigInt(num_), BigInt(den_));
  }

  double to_double() const {
    if (big_) return big_->convert_to<double>();
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string str() const {
    if (big_) {
      const auto n = boost::multiprecision::numerator(*big_);
      const auto d = boost::multiprecision::denominator(*big_);
      return d == 1 ? n.str() : n.str() + "/" + d.str();
    }
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  int sign() const noexcept {
    if (big_) return big_->sign();
    return (num_ > 0) - (num_ < 0);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      std::int64_t n, d;
      if (a.den_ == b.den_) {
        if (!__builtin_add_overflow(a.num_, b.num_, &n)) return Rational(n, a.den_);
      } else {
        std::int64_t l, r;
        if (!__builtin_mul_overflow(a.num_, b.den_, &l) && !__builtin_mul_overflow(b.num_, a.den_, &r) &&
            !__builtin_add_overflow(l, r, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d))
          return Rational(n, d);
      }
    }
    return Rational(a.to_big() + b.to_big());
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      std::int64_t n, d;
      if (a.den_ == b.den_) {
        if (!__builtin_sub_overflow(a.num_, b.num_, &n)) return Rational(n, a.den_);
      } else {
        std::int64_t l, r;
        if (!__builtin_mul_overflow(a.num_, b.den_, &l) && !__builtin_mul_overflow(b.num_, a.den_, &r) &&
            !__builtin_sub_overflow(l, r, &n) && !__builtin_mul_overflow(a.den_, b.den_, &d))
          return Rational(n, d);
      }
    }
    return Rational(a.to_big() - b.to_big());
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      // cross-reduce first to keep intermediates small
      const std::int64_t g1 = std::gcd(a.num_, b.den_);
      const std::int64_t g2 = std::gcd(b.num_, a.den_);
      std::int64_t n, d;
      const std::int64_t an = g1 ? a.num_ / g1 : a.num_, bd = g1 ? b.den_ / g1 : b.den_;
      const std::int64_t bn = g2 ? b.num_ / g2 : b.num_, ad = g2 ? a.den_ / g2 : a.den_;
      if (!__builtin_mul_overflow(an, bn, &n) && !__builtin_mul_overflow(ad, bd, &d)) return Rational(n, d);
    }
    return Rational(a.to_big() * b.to_big());
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw InvalidArgument("rational division by zero");
    if (!a.big_ && !b.big_) {
      std::int64_t n, d;
      if (!__builtin_mul_overflow(a.num_, b.den_, &n) && !__builtin_mul_overflow(a.den_, b.num_, &d))
        return Rational(n, d);
    }
    return Rational(a.to_big() / b.to_big());
  }

  Rational operator-() const { return Rational(0) - *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_big() == b.to_big();
  }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      const __int128 l = static_cast<__int128>(a.num_) * b.den_;
      const __int128 r = static_cast<__int128>(b.num_) * a.den_;
      return l <=> r;
    }
    const Big l = a.to_big(), r = b.to_big();
    if (l < r) return std::strong_ordering::less;
    if (r < l) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  std::size_t hash() const noexcept {
    if (big_) return std::hash<std::string>{}(str());
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
  }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  void assign(const Big& b) {
    const BigInt n = boost::multiprecision::numerator(b);
    const BigInt d = boost::multiprecision::denominator(b);
    static const BigInt lo = BigInt(kMin) + 1;
    static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
    if (n >= lo && n <= hi && d <= hi) {
      num_ = n.convert_to<std::int64_t>();
      den_ = d.convert_to<std::int64_t>();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_shared<const Big>(b);
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

inline Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational");
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
    for (char c : s)
      if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
    // leading zeros would make boost read the digits as octal
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt n = parse_int(text.substr(0, slash));
    const BigInt d = parse_int(text.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(Big(n, d));
  }
  // decimal with optional exponent, converted exactly
  std::string_view mant = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    const auto exp_text = text.substr(e + 1);
    auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || ptr != exp_text.data() + exp_text.size())
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
  }
  std::string digits;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    digits = std::string(mant.substr(0, dot)) + std::string(mant.substr(dot + 1));
    exponent -= static_cast<long>(mant.size() - dot - 1);
    if (digits == "-" || digits == "+" || digits.empty()) throw ParseError("malformed decimal '" + std::string(text) + "'");
  } else {
    digits = std::string(mant);
  }
  if (exponent > 400 || exponent < -400) throw ParseError("exponent out of range in '" + std::string(text) + "'");
  Big v(parse_int(digits));
  const Big ten(10);
  for (long i = 0; i < exponent; ++i) v *= ten;
  for (long i = 0; i > exponent; --i) v /= ten;
  return Rational(v);
}

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace qcat

template <>
struct std::hash<qcat::Rational> {
  std::size_t operator()(const qcat::Rational& r) const noexcept { return r.hash(); }
};
