#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "lotus/error.hpp"

namespace lotus {

namespace detail {

inline std::int64_t narrow_checked(__int128 v) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN)) {
    throw Error("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

/// Exact rational number over 64-bit integers.  Always normalized:
/// gcd(num, den) = 1 and den > 0.  Intermediate products run in 128-bit
/// arithmetic and overflow raises Error instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
    __int128 d = __int128(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    __int128 n = __int128(a.num_) * b.den_ - __int128(b.num_) * a.den_;
    __int128 d = __int128(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error("rational division by zero");
    return from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// "p/q", or just "p" for integers.  The exact serialization used in JSON.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Inverse of str().  Accepts "p" and "p/q".
  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(text));
      return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
      throw Error("bad rational literal: " + text);
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = wide_gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = detail::narrow_checked(n);
    r.den_ = detail::narrow_checked(d);
    return r;
  }

  static __int128 wide_gcd(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    Rational r = from_wide(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Point of the projective rational line: p/q with (p, q) != (0, 0).
/// Infinity is 1/0.  Total arithmetic for continued-fraction tails, where
/// x -> a - 1/x must be defined even when x passes through 0 or infinity.
class ProjectiveRational {
 public:
  ProjectiveRational() : num_(0), den_(1) {}
  ProjectiveRational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }
  ProjectiveRational(const Rational& r) : num_(r.num()), den_(r.den()) {}  // NOLINT

  static ProjectiveRational infinity() { return ProjectiveRational(1, 0); }

  bool is_infinite() const { return den_ == 0; }
  bool is_zero() const { return num_ == 0 && den_ != 0; }
  bool is_finite_positive() const { return den_ != 0 && num_ > 0; }
  bool is_finite_nonnegative() const { return den_ != 0 && num_ >= 0; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational finite() const {
    if (den_ == 0) throw Error("projective value is infinite");
    return Rational(num_, den_);
  }

  /// a + 1/x in projective arithmetic (a + 1/inf = a, a + 1/0 = inf).
  ProjectiveRational plus_step(std::int64_t a) const {
    // a + den/num = (a*num + den) / num
    __int128 n = __int128(a) * num_ + den_;
    return from_wide(n, num_);
  }

  /// a - 1/x in projective arithmetic.
  ProjectiveRational minus_step(std::int64_t a) const {
    __int128 n = __int128(a) * num_ - den_;
    return from_wide(n, num_);
  }

  friend bool operator==(const ProjectiveRational& a, const ProjectiveRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const ProjectiveRational& a, const ProjectiveRational& b) {
    return !(a == b);
  }

  std::string str() const {
    if (den_ == 0) return "inf";
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  static ProjectiveRational from_wide(__int128 n, __int128 d) {
    if (n == 0 && d == 0) throw Error("projective 0/0");
    bool flip = d < 0 || (d == 0 && n < 0);
    if (flip) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    ProjectiveRational r;
    r.num_ = detail::narrow_checked(n);
    r.den_ = detail::narrow_checked(d);
    return r;
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() {
    ProjectiveRational r = from_wide(num_, den_);
    num_ = r.num_;
    den_ = r.den_;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace lotus
