#include <doctest.h>

#include "dioph/construct.hpp"
#include "dioph/error.hpp"
#include "dioph/exactnum/factor.hpp"
#include "dioph/heights.hpp"
#include "support.hpp"

using namespace dioph;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::HardAssertion;
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("base root polynomial") {
    CHECK(base_root_poly(1) == RatPoly::linear_from_root(Rational(1, 2)));
    RatPoly b = base_root_poly(3);
    CHECK(b.degree() == 3);
    for (int i = 1; i <= 3; ++i) CHECK(b.eval(Rational(i, 4)) == 0);
  }

  TEST_CASE("Eisenstein test") {
    CHECK(is_eisenstein(RatPoly{3, 0, 1}, 3));
    CHECK_FALSE(is_eisenstein(RatPoly{9, 0, 1}, 3));
    CHECK_FALSE(is_eisenstein(RatPoly{3, 1, 1}, 3));
    CHECK_FALSE(is_eisenstein(RatPoly{3, 0, 2}, 3));
  }

  TEST_CASE("least good prime") {
    CHECK(least_good_prime({RatPoly{1}, RatPoly{0, 1}}) == 2);
    CHECK(least_good_prime({RatPoly{2}, RatPoly{0, 3}}) == 5);
  }

  TEST_CASE("lift over a rational point") {
    LiftInput in{{RatPoly{1}, RatPoly{0, 1}}, RealNumber(Rational(1, 2)), Rational(1, 10), 10};
    auto a = eisenstein_lift(in, 3);
    CHECK(a.min_poly.degree() == 2);
    CHECK(is_eisenstein(a.min_poly, 3));
    CHECK(is_irreducible(a.min_poly));
    REQUIRE(a.selected.size() == 1);
    const ComplexDisk& d = a.roots[a.selected[0]];
    Rational re = d.re.to_rational() - Rational(1, 2);
    Rational im = d.im.to_rational();
    CHECK(re * re + im * im <= Rational(1, 100));
    CHECK(height_poly(a.min_poly).value <= a.C * in.Y);
    CHECK(code_of([&] { eisenstein_lift(in, 1); }) != ErrorCode::HardAssertion);
  }

  TEST_CASE("approximation record and determinism") {
    RealNumber xi = RealNumber::parse("root:[-2,0,0,1]:0");
    auto r1 = theorem_A_experiment(xi, 4, 1, {10});
    auto r2 = theorem_A_experiment(xi, 4, 1, {10});
    REQUIRE(r1.size() == 1);
    const ApproxRecord& a = r1[0];
    CHECK(a.root_within_delta);
    CHECK(a.height_bound);
    CHECK(a.alpha.min_poly.degree() == 5);
    CHECK(is_eisenstein(a.alpha.min_poly, a.alpha.eisenstein_prime));
    CHECK(a.exponent_lo <= a.exponent_hi);
    CHECK(a.dist_lo <= a.delta);
    CHECK(r1[0].to_json().dump() == r2[0].to_json().dump());
    CHECK(r1[0].to_tsv() == r2[0].to_tsv());
  }

  TEST_CASE("approximation preconditions") {
    RealNumber xi = RealNumber::parse("root:[-2,0,0,1]:0");
    CHECK(code_of([&] { theorem_A_experiment(RealNumber(Rational(1, 3)), 4, 1, {10}); }) ==
          ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { theorem_A_experiment(xi, 3, 1, {10}); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { theorem_A_experiment(xi, 4, 1, {1}); }) == ErrorCode::PreconditionFailed);
    CHECK(code_of([&] { theorem_A_experiment(xi, 8, 1, {10}); }) == ErrorCode::DimensionCap);
  }

  TEST_CASE("discriminant lower bound for nearby conjugates") {
    CHECK(prop_10_1_check(RatPoly{-2, 0, 1}, RealNumber(Rational(3, 2)), 2).holds);
    CHECK(prop_10_1_check(RatPoly{-2, 0, 0, 1}, RealNumber(Rational(1, 2)), 3).holds);
    CHECK(code_of([] { prop_10_1_check(RatPoly{-1, 0, 1}, RealNumber(Rational(0)), 2); }) ==
          ErrorCode::Reducible);
    RatPoly p{-1, -1, 1};
    auto roots = certified_complex_roots(p, 32);
    CHECK(prop_10_1_uniform(p, roots, 2));
    CHECK(prop_10_1_holds(p, roots, Rational(1, 3), 2));
  }

  TEST_CASE("Liouville targets") {
    auto xs = liouville_targets(2, 2);
    REQUIRE(xs.size() == 2);
    CHECK(xs[0].compare(Rational(1, 4)) > 0);
    CHECK(xs[0].compare(Rational(1, 4) + pow(Rational(2), -13)) < 0);
    CHECK(xs[1].compare(Rational(1, 64)) > 0);
  }

  TEST_CASE("Liouville inequality") {
    CHECK(liouville_inequality_check(RealNumber::parse("root:[-2,0,1]:1"), Rational(7, 5), 2).holds);
    CHECK(liouville_inequality_check(RealNumber(Rational(1, 3)), Rational(1, 2), 1).holds);
    CHECK(code_of([] { liouville_inequality_check(RealNumber(Rational(1, 2)), Rational(1, 2), 1); }) ==
          ErrorCode::Equal);
  }

  TEST_CASE("kappa hypothesis") {
    CHECK(kappa_hypothesis(3, 2));
    CHECK_FALSE(kappa_hypothesis(Rational(5, 2), 2));
    CHECK(kappa_hypothesis(5, 1));
    CHECK_FALSE(kappa_hypothesis(4, 1));
  }

  TEST_CASE("small adversarial search") {
    auto r = prop_10_2_adversarial(1, 1, 5, {5, 10});
    REQUIRE(r.rows.size() == 2);
    for (const auto& row : r.rows) CHECK(row.holds);
    REQUIRE(r.H0.has_value());
    CHECK(*r.H0 == 5);
    CHECK(r.min_slack > 0);
    CHECK(r.algebraic_numbers > 0);
    CHECK(r.to_json()["rows"].size() == 2);
  }
}
