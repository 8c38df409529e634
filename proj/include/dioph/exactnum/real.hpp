#pragma once

#include <memory>
#include <string>

#include "dioph/exactnum/dyadic.hpp"
#include "dioph/exactnum/poly.hpp"

namespace dioph {

/// Largest precision (bits) used by adaptive refinement loops.
/// Defaults to 256; overridden by the DIOPH_PRECISION_CAP environment variable.
long precision_cap();

/// Exponent a_l = floor(b^{l/t}) with b = (t+1) n.
Integer liouville_exponent(unsigned long ell, unsigned long t, unsigned long n);

/// A real number that can be enclosed to any precision.
///
/// Three kinds: an exact rational, a real algebraic number given by a
/// polynomial and an isolating interval, and the lacunary series
/// sum_{i>=0} 2^{-a_{j+ti}}.
class RealNumber {
 public:
  enum class Kind { Rational, Algebraic, Liouville };

  RealNumber() : RealNumber(Rational(0)) {}
  RealNumber(const Rational& q);
  RealNumber(long v) : RealNumber(Rational(v)) {}

  /// The unique root of p in the open interval (lo, hi). Collapses to a
  /// rational when that root is rational and detected during bisection.
  /// Throws InvalidArgument unless (lo, hi] holds exactly one root.
  static RealNumber algebraic(const RatPoly& p, const Rational& lo, const Rational& hi);
  /// The index-th real root of p in increasing order (0-based).
  static RealNumber real_root(const RatPoly& p, int index);
  static RealNumber liouville(unsigned j, unsigned t, unsigned n);

  /// Accepts "p/q", "alg:[c0,c1,...]:lo:hi", "root:[c0,...]:index", "liouville:j:t:n".
  static RealNumber parse(const std::string& text);
  std::string to_string() const;

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  const Rational& rational_value() const;
  /// Squarefree defining polynomial (Algebraic only).
  const RatPoly& polynomial() const { return poly_; }

  /// Ball of radius at most 2^-bits containing the number.
  DyadicBall approx(long bits) const;
  /// Exact sign of (this - q).
  int compare(const Rational& q) const;
  /// Rational upper bound for |x|.
  Rational abs_upper() const;
  /// Rational lower and upper bounds, each within 2^-bits.
  std::pair<Rational, Rational> bounds(long bits) const;
  /// x + m for rational m (Rational and Algebraic kinds).
  RealNumber shifted(const Rational& m) const;

 private:
  struct AlgState;
  Kind kind_ = Kind::Rational;
  Rational value_;
  RatPoly poly_;
  std::shared_ptr<AlgState> alg_;
  unsigned j_ = 0, t_ = 0, n_ = 0;
};

/// Partial sum sum_{i<terms} 2^{-a_{j+ti}}.
Rational liouville_partial_sum(unsigned j, unsigned t, unsigned n, unsigned terms);

}  // namespace dioph

namespace dioph {

/// Horner evaluation on balls, rounding intermediate midpoints to prec bits.
DyadicBall eval_ball(const RatPoly& p, const DyadicBall& x, long prec);
/// Enclosure of p(x) computed from a 2^-bits enclosure of x.
DyadicBall eval_at(const RatPoly& p, const RealNumber& x, long bits);

}  // namespace dioph
