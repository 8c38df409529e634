#pragma once

#include <utility>

#include "dioph/exactnum/rational.hpp"

namespace dioph {

/// Rational bounds lo <= log(x) <= hi for x > 0, tight to about prec bits.
std::pair<Rational, Rational> log_bounds(const Rational& x, long prec = 128);
/// Rational bounds lo <= exp(x) <= hi.
std::pair<Rational, Rational> exp_bounds(const Rational& x, long prec = 128);
/// Rational bounds for sqrt(x), x >= 0.
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, long prec = 128);

}  // namespace dioph
