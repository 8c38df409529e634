#pragma once

#include <vector>

#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/real.hpp"
#include "dioph/report.hpp"

namespace dioph {

/// The body |P^{(j)}(xi)| <= X_j (j = 0..n) over integer polynomials of degree <= n.
struct BodySpec {
  int n = 0;
  RealNumber xi;
  std::vector<Rational> X;

  /// Checks n >= 0, |X| = n+1 and X_j > 0.
  void validate() const;
};

constexpr int kMinimaDimensionCap = 6;

struct MinimaResult {
  /// Exact minima when `exhaustive`; otherwise certified upper bounds.
  std::vector<Rational> lambdas;
  /// Certified lower bounds (equal to `lambdas` when exhaustive).
  std::vector<Rational> lambdas_lower;
  std::vector<RatPoly> witnesses;
  bool exhaustive = true;

  Json to_json() const;
};

/// mu(P) = max_j |P^{(j)}(xi)| / X_j, exact for rational xi.
Rational mu_exact(const RatPoly& p, const BodySpec& body);
/// Certified bounds for mu(P) with xi enclosed to 2^-bits.
std::pair<Rational, Rational> mu_bounds(const RatPoly& p, const BodySpec& body, long bits = 96);

/// P in lambda C(X). Throws NonIntegerCoefficients.
bool membership(const RatPoly& p, const BodySpec& body, const Rational& lambda);

/// 2^{n+1} prod X_j / prod j!.
Rational volume(const BodySpec& body);

/// Integer point of the body with certified bounds on mu.
struct BodyPoint {
  RatPoly poly;
  Rational mu_lo, mu_hi;
};

/// Every nonzero integer P (up to sign, highest nonzero coefficient positive)
/// that can satisfy mu(P) <= bound. Exact mu for rational xi.
/// Throws CapExceeded past `limit` points.
std::vector<BodyPoint> enumerate_body(const BodySpec& body, const Rational& bound, std::size_t limit = 20000000);

/// Throws DimensionCap for n > 6.
MinimaResult successive_minima(const BodySpec& body);

/// Vol >= (2/kappa)^{n+1}; when true and xi is rational, lambda_1 <= kappa is confirmed
/// by enumeration and a violation raises HardAssertion.
bool first_minimum_condition(const BodySpec& body, const Rational& kappa);

/// 2^{n+1}/(n+1)! <= lambda_1...lambda_{n+1} Vol <= 2^{n+1}.
CheckRecord minkowski_product_check(const MinimaResult& res, const BodySpec& body);

/// Y_j = 1 / X_{n-j}.
std::vector<Rational> dual_tuple(const std::vector<Rational>& X);

/// lambda_i(X) lambda_{n-i+2}(Y) >= 1/(n+1)! for all i; records the products.
CheckRecord duality_products(const BodySpec& body);
CheckRecord duality_products(const BodySpec& body, const MinimaResult& mx, const MinimaResult& my);

}  // namespace dioph
