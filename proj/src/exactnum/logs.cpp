#include "dioph/exactnum/logs.hpp"

#include <mpfr.h>

#include "dioph/error.hpp"

namespace dioph {

namespace {

using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

// f is increasing, so rounding the input and the output in the same direction bounds f(x).
std::pair<Rational, Rational> monotone_bounds(UnaryFn f, const Rational& x, long prec) {
  mpfr_t a, b;
  mpfr_init2(a, prec);
  mpfr_init2(b, prec);
  mpfr_set_q(a, x.get_mpq_t(), MPFR_RNDD);
  f(a, a, MPFR_RNDD);
  mpfr_set_q(b, x.get_mpq_t(), MPFR_RNDU);
  f(b, b, MPFR_RNDU);
  Rational lo, hi;
  mpfr_get_q(lo.get_mpq_t(), a);
  mpfr_get_q(hi.get_mpq_t(), b);
  mpfr_clear(a);
  mpfr_clear(b);
  return {lo, hi};
}

}  // namespace

std::pair<Rational, Rational> log_bounds(const Rational& x, long prec) {
  if (x <= 0) fail(ErrorCode::InvalidArgument, "log of a non-positive number");
  return monotone_bounds(mpfr_log, x, prec);
}

std::pair<Rational, Rational> exp_bounds(const Rational& x, long prec) {
  return monotone_bounds(mpfr_exp, x, prec);
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& x, long prec) {
  if (x < 0) fail(ErrorCode::InvalidArgument, "sqrt of a negative number");
  return monotone_bounds(mpfr_sqrt, x, prec);
}

}  // namespace dioph
