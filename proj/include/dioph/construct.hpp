#pragma once

#include <optional>
#include <vector>

#include "dioph/convexbody.hpp"
#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/real.hpp"
#include "dioph/exactnum/roots.hpp"
#include "dioph/report.hpp"

namespace dioph {

/// prod_{i=1}^t (T - i/(t+1)).
RatPoly base_root_poly(int t);

struct AlgebraicInteger {
  RatPoly min_poly;
  Integer eisenstein_prime;
  std::vector<ComplexDisk> roots;
  /// Indices into `roots` of the t roots nearest to xi.
  std::vector<std::size_t> selected;
  /// Parameters of the successful attempt.
  Rational epsilon, kappa, s, r, C;
  int attempts = 0;
  Json to_json() const;
};

struct LiftInput {
  std::vector<RatPoly> witnesses;
  RealNumber xi;
  Rational delta, Y;
  int t = 1;
  /// max(1, lambda_{n+1}); the witnesses lie in kappa C(Y).
  Rational kappa = 1;
};

/// Least prime not dividing the determinant of the witness coefficient matrix.
Integer least_good_prime(const std::vector<RatPoly>& witnesses);

/// Monic integer P = T^{n+1} + sum b_i P_i, Eisenstein at q, with at least t roots within delta of xi.
/// Throws PrimeDividesD, RootClusterFailed after 20 halvings of epsilon.
AlgebraicInteger eisenstein_lift(const LiftInput& in, const Integer& q);

/// True when q divides every non-leading coefficient, q^2 does not divide the
/// constant term and the polynomial is monic with integer coefficients.
bool is_eisenstein(const RatPoly& p, const Integer& q);

struct ApproxRecord {
  Rational X;
  Rational H_alpha;
  Rational C;
  Rational Y, delta;
  /// Certified bounds on max over selected conjugates of |xi - alpha_i|.
  Rational dist_lo, dist_hi;
  /// Certified enclosure of -log(dist) / log H(alpha).
  Rational exponent_lo, exponent_hi;
  bool root_within_delta = false;
  bool height_bound = false;
  /// False when a rational power of X was replaced by a dyadic approximation.
  bool exact_powers = true;
  AlgebraicInteger alpha;
  Json to_json() const;
  std::string to_tsv() const;
};

/// Approximation schedule: k = [n/4], X_j = c X^{-t/(k+1-t)} (j <= n-t), X otherwise,
/// lifted through the minima of the dual body. Throws PreconditionFailed, DimensionCap.
std::vector<ApproxRecord> theorem_A_experiment(const RealNumber& xi, int n, int t,
                                               const std::vector<Rational>& schedule, const Rational& c = 1);

/// Certifies 1 <= (2^n (n+1))^{n-1} H(P)^{2(n-1)} |xi - alpha_t|^{t(t-1)} with roots sorted by
/// distance from xi. Throws Reducible, PreconditionFailed, HardAssertion.
CheckRecord prop_10_1_check(const RatPoly& P, const RealNumber& xi, int t);

/// Same inequality from precomputed certified roots of an irreducible P; returns holds.
bool prop_10_1_holds(const RatPoly& P, const std::vector<ComplexDisk>& roots, const Rational& xi, int t);

/// Sufficient condition for every xi at once: the t-th nearest conjugate is at least half
/// the minimal root separation away.
bool prop_10_1_uniform(const RatPoly& P, const std::vector<ComplexDisk>& roots, int t);

/// xi_j = sum_i 2^{-a_{j+ti}} for j = 1..t.
std::vector<RealNumber> liouville_targets(int n, int t);

/// |alpha - r| >= gamma(n) H(alpha)^{-1} H(r)^{-n}, gamma(n) = 2^{1-n} (n+1)^{-1/2}.
/// alpha is the root `root` of its irreducible integer polynomial. Throws Equal.
CheckRecord liouville_inequality_check(const RatPoly& min_poly, const ComplexDisk& root, const Rational& r, int n);
CheckRecord liouville_inequality_check(const RealNumber& alpha, const Rational& r, int n);

/// (kappa t)^t > (t+1)^{t+1}.
bool kappa_hypothesis(const Rational& kappa, int t);

struct AdversarialRow {
  int H = 0;
  bool holds = false;
  /// Certified lower bound of max_j min_alpha |xi_j - alpha|.
  Rational distance_lower;
  /// Lower bound of log(distance) + kappa n^{1/t} log H.
  double slack = 0;
};

struct AdversarialReport {
  int n = 0, t = 0;
  Rational kappa;
  std::vector<AdversarialRow> rows;
  /// Least grid H from which every grid point passes.
  std::optional<int> H0;
  double min_slack = 0;
  std::size_t algebraic_numbers = 0;
  Json to_json() const;
};

/// Enumerates algebraic numbers of degree <= n and height <= max(grid), checking
/// max_j |xi_j - alpha_j| >= H^{-kappa n^{1/t}} at every grid H. Throws PreconditionFailed, CapExceeded.
AdversarialReport prop_10_2_adversarial(int n, int t, const Rational& kappa, const std::vector<int>& grid);

}  // namespace dioph
