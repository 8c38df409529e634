#pragma once

#include <random>
#include <vector>

#include "dioph/exactnum/poly.hpp"

namespace dioph::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20261017);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline RatPoly random_int_poly(int deg, long bound) {
  std::vector<Rational> c(deg + 1);
  for (auto& x : c) x = uniform(-bound, bound);
  return RatPoly(c);
}

inline Rational random_rational(long num, long den) {
  return make_rational(uniform(-num, num), uniform(1, den));
}

}  // namespace dioph::testing
