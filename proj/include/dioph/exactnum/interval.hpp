#pragma once

#include <algorithm>

#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/real.hpp"

namespace dioph {

/// Closed interval with rational endpoints; degenerate for exact values.
struct RatInterval {
  Rational lo, hi;

  RatInterval() = default;
  RatInterval(const Rational& v) : lo(v), hi(v) {}
  RatInterval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  /// Enclosure of x of width at most 2^{1-bits}; exact when x is rational.
  static RatInterval of(const RealNumber& x, long bits) {
    if (x.is_rational()) return RatInterval(x.rational_value());
    auto [l, h] = x.bounds(bits);
    return {l, h};
  }

  bool exact() const { return lo == hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }

  RatInterval abs() const {
    if (lo >= 0) return *this;
    if (hi <= 0) return {-hi, -lo};
    return {Rational(0), std::max<Rational>(-lo, hi)};
  }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    if (a.exact() && b.exact()) return RatInterval(a.lo * b.lo);
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
  }
  RatInterval operator-() const { return {-hi, -lo}; }
  RatInterval& operator+=(const RatInterval& o) { return *this = *this + o; }
  RatInterval& operator*=(const RatInterval& o) { return *this = *this * o; }
};

inline RatInterval max(const RatInterval& a, const RatInterval& b) {
  return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline RatInterval eval(const RatPoly& p, const RatInterval& x) {
  RatInterval acc(Rational(0));
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + RatInterval(p[i]);
  return acc;
}

}  // namespace dioph
