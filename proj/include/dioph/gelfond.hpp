#pragma once

#include <optional>
#include <vector>

#include "dioph/exactnum/interval.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "dioph/exactnum/poly.hpp"
#include "dioph/exactnum/real.hpp"
#include "dioph/report.hpp"

namespace dioph {

/// 1 <= (2n)! max(|P(xi)|/|P|, |Q(xi)|/|Q|) H(P)^deg Q H(Q)^deg P.
/// n defaults to max(deg P, deg Q, 1). Throws NotCoprime, HardAssertion on a violation.
CheckRecord resultant_gap_check(const RatPoly& p, const RatPoly& q, const RealNumber& xi,
                                std::optional<int> n = std::nullopt);

enum class ChainStatus { Tracking, Stabilized, Inconclusive };
const char* to_string(ChainStatus s);

struct ChainStep {
  Rational X;
  RatPoly poly;
  RatPoly selected;
  bool hypothesis = false;
  bool vanishes = false;
  Json to_json() const;
};

/// Online form of the factor-chain argument over a finite stream of polynomials.
struct FactorChainState {
  RealNumber xi;
  int n = 1;
  std::vector<ChainStep> steps;
  std::optional<RatPoly> current;
  ChainStatus status = ChainStatus::Tracking;

  Json to_json() const;
};

/// Factors P_X, selects the monic irreducible factor minimising
/// (|Q(xi)|/|Q|) H(Q)^n (eY)^{deg Q} with Y = e^n X, and compares it with the
/// previous selection. Throws PreconditionFailed, FactorizationCap.
FactorChainState factor_chain_step(FactorChainState state, const Rational& X, const RatPoly& p);

/// Minor / monomial change of basis for R(k, l).
struct MinorModule {
  int k = 0, ell = 0;
  /// Rows: order-k minors; columns: degree-k monomials in x_0..x_l.
  IntMatrix minors_to_monomials;
  /// B with B A = I when the module is generated.
  IntMatrix monomials_from_minors;
  bool generated = false;
  /// max of the row absolute sums of A and B.
  Integer constant;
};

/// Builds the module data and checks generation through the Hermite normal form.
/// Throws CapExceeded unless k >= 1, l >= 0 and k + l <= 7.
MinorModule minor_module(int k, int ell);
bool minor_module_generation(int k, int ell);

struct ProductSpaceHeights {
  Rational height_product_space;
  Rational height_power;
  Rational ratio;
  Integer constant;
  bool holds = false;
  Json to_json() const;
};

/// H(P E_{k-1}) against H(P)^k within the constant of minor_module(k, deg P).
ProductSpaceHeights product_space_height_check(const RatPoly& p, int k);

}  // namespace dioph
