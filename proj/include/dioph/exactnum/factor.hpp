#pragma once

#include <utility>
#include <vector>

#include "dioph/exactnum/poly.hpp"

namespace dioph {

struct Factorization {
  Rational leading;
  /// Monic irreducible factors with multiplicities, sorted by degree then coefficients.
  std::vector<std::pair<RatPoly, int>> factors;

  RatPoly expand() const;
};

constexpr int kFactorDegreeCap = 8;

/// Factorization over Q. Throws ZeroPolynomial, DegreeCapExceeded above degree 8.
Factorization factor_over_rationals(const RatPoly& p);

/// Irreducible over Q (degree >= 1).
bool is_irreducible(const RatPoly& p);

/// Lexicographic order on coefficient vectors (low degree first, shorter first).
bool coeff_less(const RatPoly& a, const RatPoly& b);

}  // namespace dioph
