#pragma once

#include <string>

#include "dioph/exactnum/rational.hpp"

namespace dioph {

/// Exact dyadic rational man * 2^exp with odd mantissa (or zero).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long v) : man_(v) { normalize(); }
  Dyadic(Integer man, long exp) : man_(std::move(man)), exp_(exp) { normalize(); }

  const Integer& mantissa() const { return man_; }
  long exponent() const { return exp_; }
  bool is_zero() const { return man_ == 0; }
  int sign() const { return sgn(man_); }

  Rational to_rational() const;
  double to_double() const;
  /// floor(log2 |x|); x != 0.
  long log2_floor() const;
  /// Bits in the mantissa.
  std::size_t bits() const;

  /// Exact conversion; q must have a power-of-two denominator.
  static Dyadic exact(const Rational& q);
  static Dyadic from_rational_down(const Rational& q, long prec);
  static Dyadic from_rational_up(const Rational& q, long prec);
  static Dyadic from_rational_nearest(const Rational& q, long prec);

  /// Keeps `prec` significant bits, rounding toward -inf / +inf.
  Dyadic round_down(long prec) const;
  Dyadic round_up(long prec) const;
  Dyadic mul_2exp(long k) const { return Dyadic(man_, exp_ + k); }
  Dyadic abs() const { return Dyadic(::abs(man_), exp_); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic operator-() const { return Dyadic(-man_, exp_); }

  friend int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.man_ == b.man_ && a.exp_ == b.exp_; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

  std::string to_string() const;

 private:
  void normalize();
  Integer man_ = 0;
  long exp_ = 0;
};

/// Upper bound on sqrt(x) (x >= 0) with about `prec` significant bits.
Dyadic sqrt_up(const Rational& x, long prec);
Dyadic sqrt_down(const Rational& x, long prec);

/// Certified real enclosure [mid - rad, mid + rad].
///
/// Addition, subtraction and multiplication keep the midpoint exact and only
/// round the radius up; inverse, division and square root round the
/// midpoint to the requested precision and account for it in the radius.
class DyadicBall {
 public:
  DyadicBall() = default;
  DyadicBall(const Dyadic& mid, const Dyadic& rad = Dyadic());
  DyadicBall(long v) : DyadicBall(Dyadic(v)) {}

  static DyadicBall from_rational(const Rational& q, long prec);
  /// Smallest ball with dyadic endpoints covering [lo, hi].
  static DyadicBall from_interval(const Rational& lo, const Rational& hi, long prec);

  const Dyadic& mid() const { return mid_; }
  const Dyadic& rad() const { return rad_; }
  Dyadic lower() const { return mid_ - rad_; }
  Dyadic upper() const { return mid_ + rad_; }

  bool contains(const Rational& q) const;
  bool contains_zero() const { return rad_ >= mid_.abs(); }
  bool certainly_positive() const { return mid_ > rad_; }
  bool certainly_negative() const { return -mid_ > rad_; }
  /// Certainly x < y / x <= y.
  friend bool certainly_lt(const DyadicBall& x, const DyadicBall& y) { return x.upper() < y.lower(); }
  friend bool certainly_le(const DyadicBall& x, const DyadicBall& y) { return x.upper() <= y.lower(); }
  friend bool overlaps(const DyadicBall& x, const DyadicBall& y) {
    return !(x.upper() < y.lower() || y.upper() < x.lower());
  }

  DyadicBall operator-() const { return DyadicBall(-mid_, rad_); }
  friend DyadicBall operator+(const DyadicBall& a, const DyadicBall& b);
  friend DyadicBall operator-(const DyadicBall& a, const DyadicBall& b);
  friend DyadicBall operator*(const DyadicBall& a, const DyadicBall& b);
  DyadicBall& operator+=(const DyadicBall& o) { return *this = *this + o; }
  DyadicBall& operator*=(const DyadicBall& o) { return *this = *this * o; }

  DyadicBall abs() const;
  /// Rounds the midpoint to `prec` significant bits.
  DyadicBall rounded(long prec) const;
  DyadicBall mul_2exp(long k) const { return DyadicBall(mid_.mul_2exp(k), rad_.mul_2exp(k)); }

  friend DyadicBall inverse(const DyadicBall& x, long prec);
  friend DyadicBall divide(const DyadicBall& a, const DyadicBall& b, long prec);
  friend DyadicBall sqrt(const DyadicBall& x, long prec);

  std::string to_string() const;

 private:
  Dyadic mid_, rad_;
};

/// Max of two balls (certified enclosure of max(x, y)).
DyadicBall max(const DyadicBall& a, const DyadicBall& b);
DyadicBall pow(const DyadicBall& x, unsigned e);

/// Rectangular complex enclosure.
struct ComplexBall {
  DyadicBall re, im;

  ComplexBall() = default;
  ComplexBall(DyadicBall r, DyadicBall i = DyadicBall()) : re(std::move(r)), im(std::move(i)) {}

  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  /// |z|^2
  DyadicBall abs2() const { return re * re + im * im; }
  DyadicBall abs(long prec) const { return sqrt(abs2(), prec); }
  ComplexBall rounded(long prec) const { return {re.rounded(prec), im.rounded(prec)}; }
};

}  // namespace dioph
