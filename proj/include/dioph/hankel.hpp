#pragma once

#include <optional>
#include <vector>

#include "dioph/convexbody.hpp"
#include "dioph/exactnum/interval.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/real.hpp"
#include "dioph/report.hpp"

namespace dioph {

/// sum_{j=0}^n (-1)^j P^{(j)}(a) Q^{(n-j)}(a). Throws DegreeOverflow when deg P or deg Q exceeds n.
Rational bilinear_g(const RatPoly& p, const RatPoly& q, int n, const Rational& a = 0);
/// Enclosure of the same sum evaluated at xi.
RatInterval bilinear_g(const RatPoly& p, const RatPoly& q, int n, const RealNumber& xi, long bits = 128);

/// For P in C(X) and Q in C(Y): 1 <= (n+1)! max_j X_j Y_{n-j} whenever g(P, Q) != 0.
/// Throws PreconditionFailed when a membership fails.
CheckRecord pairing_bound_check(const RatPoly& p, const RatPoly& q, const RealNumber& xi,
                                const std::vector<Rational>& X, const std::vector<Rational>& Y);

struct HankelState {
  int n = 0;
  RatPoly Q;
  RealNumber xi;
  /// y_i = (-1)^i i! Q^{(n-i)}(0).
  std::vector<Rational> y;
  /// z_i = (-1)^i i! Q^{(n-i)}(xi); degenerate intervals for rational xi.
  std::vector<RatInterval> z;
  /// rank(M_l) for l = 0..n.
  std::vector<std::size_t> ranks;
  /// Certified lower bound on rank(N_l); equals rank(N_l) for rational xi.
  std::vector<std::size_t> ranks_N;

  RatMatrix M(int ell) const;
  /// Exact N_l; requires rational xi.
  RatMatrix N(int ell) const;
  Json to_json() const;
};

/// Builds y, z and all ranks, asserting rank(M_l) = rank(N_l) and M_{n-l} = M_l^T.
/// Throws ZeroPolynomial, DegreeOverflow, HardAssertion.
HankelState build_state(const RatPoly& Q, const RealNumber& xi, int n, long bits = 128);

struct KernelSpace {
  int ell = 0;
  /// Primitive integer basis of V_l inside E_{n-l}.
  std::vector<RatPoly> basis;
  std::size_t rank = 0;
  /// H(V_l), present when rank(M_l) = l + 1 and V_l != 0.
  std::optional<Rational> height;
};

/// V_l = {G in E_{n-l} : M_l a(G) = 0} with its dimension and height identities asserted.
KernelSpace kernel_V(const HankelState& s, int ell);

struct RankDrop {
  int h = 0;
  RatPoly P;
};

/// Least h <= k with rank M_{h-1} = h and rank M_h <= h, and the generator P of
/// V_{n-h}; asserts P E_{n-2h+1} = V_{h-1}. Throws NoRankDrop, InvalidArgument.
RankDrop rank_drop_extract(const HankelState& s, int k);

/// (|P(xi)|/|P|)^t <= C (X_{n-t-l} ... X_{n-t}) / |N_l| with C = c^t (l+1)! (n!)^{l+1}
/// and c = (deg P + 1)(1 + |xi|)^{deg P}. Throws PreconditionFailed.
CheckRecord ratio_bound_check(const HankelState& s, int ell, int t, const RatPoly& P, const std::vector<Rational>& X);

struct DivisorReport {
  /// "Dropped" or "DidNotDrop".
  std::string status;
  bool premise = false;
  int h = 0;
  RatPoly P;
  /// Irreducible factor selected by the factor split, when it exists.
  std::optional<RatPoly> factor;
  std::vector<CheckRecord> checks;
  Json constants = Json::object();
  Json to_json() const;
};

/// The rank-drop pipeline for Q in C(X) with X_0 <= ... <= X_{n-t} < 1 <= X_{n-t+1} <= ... <= X_n.
/// Throws PreconditionFailed; a missing drop under a satisfied premise is a HardAssertion.
DivisorReport construct_divisor(const BodySpec& body, const RatPoly& Q, int k, int t);

struct InclusionReport {
  std::size_t checked = 0;
  bool holds = true;
};

/// For nondecreasing X, every integer G in C(c X_n^{-1}, ..., c X_l^{-1}) (c = ((n+1)!)^{-2}) satisfies
/// g(T^m G, Q) = 0 for m <= l. Throws CounterexampleFound, CapExceeded beyond `samples` points.
InclusionReport inclusion_check_71(const HankelState& s, int ell, const std::vector<Rational>& X,
                                   std::size_t samples = 1000000);

struct AuxPolynomial {
  RatPoly G;
  Rational mu;
  Rational height;
  Rational target;  // X_{l+u}^{-1}
};

/// For nondecreasing X, a nonzero integer G in (1/n!) C(Y_0, ..., Y_{n-l}) with G^{(i)} in V_l for i <= u.
/// Throws PreconditionFailed, SearchExhausted.
AuxPolynomial aux_polynomial_G(const HankelState& s, int ell, int u, const std::vector<Rational>& X);

/// P^{u+1} divides G and deg P <= (n - l)/(u + 1).
bool corollary_73_check(const RatPoly& P, const AuxPolynomial& aux, int n, int ell, int u);

}  // namespace dioph
