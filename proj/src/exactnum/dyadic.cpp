#include "dioph/exactnum/dyadic.hpp"

#include <cmath>
#include <sstream>

#include "dioph/error.hpp"

namespace dioph {

namespace {

constexpr long kRadiusBits = 32;

Integer shl(const Integer& z, long k) {
  Integer r;
  mpz_mul_2exp(r.get_mpz_t(), z.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
  return r;
}

// q * 2^s as a rational.
Rational scale2(const Rational& q, long s) {
  Rational r = q;
  if (s >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(s));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-s));
  return r;
}

long approx_log2(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

Dyadic radius_up(const Dyadic& d) { return d.round_up(kRadiusBits); }

}  // namespace

void Dyadic::normalize() {
  if (man_ == 0) {
    exp_ = 0;
    return;
  }
  mp_bitcnt_t t = mpz_scan1(man_.get_mpz_t(), 0);
  if (t > 0) {
    mpz_tdiv_q_2exp(man_.get_mpz_t(), man_.get_mpz_t(), t);
    exp_ += static_cast<long>(t);
  }
}

Rational Dyadic::to_rational() const { return scale2(Rational(man_), exp_); }

double Dyadic::to_double() const {
  long e;
  double m = mpz_get_d_2exp(&e, man_.get_mpz_t());
  return std::ldexp(m, static_cast<int>(e + exp_));
}

long Dyadic::log2_floor() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "log2 of zero");
  return static_cast<long>(bits()) - 1 + exp_;
}

std::size_t Dyadic::bits() const { return man_ == 0 ? 0 : mpz_sizeinbase(man_.get_mpz_t(), 2); }

Dyadic Dyadic::exact(const Rational& q) {
  const Integer& den = q.get_den();
  mp_bitcnt_t k = mpz_scan1(den.get_mpz_t(), 0);
  if (mpz_sizeinbase(den.get_mpz_t(), 2) != k + 1) fail(ErrorCode::InvalidArgument, "not a dyadic rational");
  return Dyadic(q.get_num(), -static_cast<long>(k));
}

Dyadic Dyadic::from_rational_down(const Rational& q, long prec) {
  if (q == 0) return Dyadic();
  long s = prec - approx_log2(q);
  Rational t = scale2(q, s);
  Integer m;
  mpz_fdiv_q(m.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return Dyadic(m, -s);
}

Dyadic Dyadic::from_rational_up(const Rational& q, long prec) {
  if (q == 0) return Dyadic();
  long s = prec - approx_log2(q);
  Rational t = scale2(q, s);
  Integer m;
  mpz_cdiv_q(m.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return Dyadic(m, -s);
}

Dyadic Dyadic::from_rational_nearest(const Rational& q, long prec) {
  if (q == 0) return Dyadic();
  long s = prec - approx_log2(q);
  Rational t = scale2(q, s) + Rational(1, 2);
  Integer m;
  mpz_fdiv_q(m.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return Dyadic(m, -s);
}

Dyadic Dyadic::round_down(long prec) const {
  long b = static_cast<long>(bits());
  if (b <= prec) return *this;
  long shift = b - prec;
  Integer m;
  mpz_fdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return Dyadic(m, exp_ + shift);
}

Dyadic Dyadic::round_up(long prec) const {
  long b = static_cast<long>(bits());
  if (b <= prec) return *this;
  long shift = b - prec;
  Integer m;
  mpz_cdiv_q_2exp(m.get_mpz_t(), man_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  return Dyadic(m, exp_ + shift);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long e = std::min(a.exp_, b.exp_);
  return Dyadic(shl(a.man_, a.exp_ - e) + shl(b.man_, b.exp_ - e), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) { return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_); }

int compare(const Dyadic& a, const Dyadic& b) {
  if (a.sign() != b.sign()) return a.sign() < b.sign() ? -1 : 1;
  return (a - b).sign();
}

std::string Dyadic::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << to_double();
  return os.str();
}

Dyadic sqrt_down(const Rational& x, long prec) {
  if (x < 0) fail(ErrorCode::InvalidArgument, "sqrt of a negative number");
  if (x == 0) return Dyadic();
  long s = prec - approx_log2(x) / 2 + 2;
  Rational t = scale2(x, 2 * s);
  Integer n, r;
  mpz_fdiv_q(n.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return Dyadic(r, -s);
}

Dyadic sqrt_up(const Rational& x, long prec) {
  if (x < 0) fail(ErrorCode::InvalidArgument, "sqrt of a negative number");
  if (x == 0) return Dyadic();
  long s = prec - approx_log2(x) / 2 + 2;
  Rational t = scale2(x, 2 * s);
  Integer n, r;
  mpz_fdiv_q(n.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  if (!(r * r == n && t.get_den() == 1)) r += 1;
  return Dyadic(r, -s);
}

DyadicBall::DyadicBall(const Dyadic& mid, const Dyadic& rad) : mid_(mid), rad_(radius_up(rad)) {
  if (rad.sign() < 0) fail(ErrorCode::InvalidArgument, "negative ball radius");
}

DyadicBall DyadicBall::from_rational(const Rational& q, long prec) {
  Dyadic m = Dyadic::from_rational_nearest(q, prec);
  Rational err = ::abs(Rational(q - m.to_rational()));
  return DyadicBall(m, Dyadic::from_rational_up(err, kRadiusBits));
}

DyadicBall DyadicBall::from_interval(const Rational& lo, const Rational& hi, long prec) {
  Dyadic m = Dyadic::from_rational_nearest((lo + hi) / 2, prec);
  Rational mq = m.to_rational();
  Rational r = std::max<Rational>(hi - mq, mq - lo);
  return DyadicBall(m, Dyadic::from_rational_up(r, kRadiusBits));
}

bool DyadicBall::contains(const Rational& q) const {
  return ::abs(Rational(q - mid_.to_rational())) <= rad_.to_rational();
}

DyadicBall operator+(const DyadicBall& a, const DyadicBall& b) {
  return DyadicBall(a.mid_ + b.mid_, a.rad_ + b.rad_);
}

DyadicBall operator-(const DyadicBall& a, const DyadicBall& b) {
  return DyadicBall(a.mid_ - b.mid_, a.rad_ + b.rad_);
}

DyadicBall operator*(const DyadicBall& a, const DyadicBall& b) {
  Dyadic rad = a.mid_.abs() * b.rad_ + b.mid_.abs() * a.rad_ + a.rad_ * b.rad_;
  return DyadicBall(a.mid_ * b.mid_, rad);
}

DyadicBall DyadicBall::abs() const {
  if (!contains_zero()) return mid_.sign() < 0 ? -*this : *this;
  Dyadic hi = mid_.abs() + rad_;
  Dyadic half = hi.mul_2exp(-1);
  return DyadicBall(half, half);
}

DyadicBall DyadicBall::rounded(long prec) const {
  Dyadic m = mid_.round_down(prec);
  return DyadicBall(m, rad_ + (mid_ - m));
}

DyadicBall inverse(const DyadicBall& x, long prec) {
  if (x.contains_zero()) fail(ErrorCode::PrecisionExhausted, "inverse of a ball containing zero");
  Rational m = x.mid_.to_rational(), r = x.rad_.to_rational();
  Rational inv = 1 / m;
  Dyadic c = Dyadic::from_rational_nearest(inv, prec);
  Rational am = abs(m);
  Rational err = abs(inv - c.to_rational()) + r / (am * (am - r));
  return DyadicBall(c, Dyadic::from_rational_up(err, kRadiusBits));
}

DyadicBall divide(const DyadicBall& a, const DyadicBall& b, long prec) {
  return (a * inverse(b, prec)).rounded(prec);
}

DyadicBall sqrt(const DyadicBall& x, long prec) {
  Dyadic hi = x.upper();
  if (hi.sign() < 0) fail(ErrorCode::InvalidArgument, "sqrt of a negative ball");
  Dyadic lo = x.lower();
  Rational lo_q = lo.sign() < 0 ? Rational(0) : lo.to_rational();
  Dyadic a = sqrt_down(lo_q, prec), b = sqrt_up(hi.to_rational(), prec);
  Dyadic mid = (a + b).mul_2exp(-1);
  return DyadicBall(mid, (b - a).mul_2exp(-1));
}

DyadicBall max(const DyadicBall& a, const DyadicBall& b) {
  Dyadic lo = std::max(a.lower(), b.lower());
  Dyadic hi = std::max(a.upper(), b.upper());
  return DyadicBall((lo + hi).mul_2exp(-1), (hi - lo).mul_2exp(-1));
}

DyadicBall pow(const DyadicBall& x, unsigned e) {
  DyadicBall r(1);
  for (unsigned i = 0; i < e; ++i) r *= x;
  return r;
}

std::string DyadicBall::to_string() const { return mid_.to_string() + " +/- " + rad_.to_string(); }

}  // namespace dioph
