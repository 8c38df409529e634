#include <doctest.h>

#include "dioph/error.hpp"
#include "dioph/hankel.hpp"
#include "support.hpp"

using namespace dioph;
using dioph::testing::random_int_poly;
using dioph::testing::random_rational;
using dioph::testing::uniform;

TEST_SUITE("hankel") {
  TEST_CASE("bilinear form values") {
    CHECK(bilinear_g(RatPoly{1}, RatPoly{0, 0, 0, 1}, 3) == 6);
    CHECK(bilinear_g(RatPoly{0, 0, 0, 1}, RatPoly{1}, 3) == -6);
    CHECK_THROWS_AS(bilinear_g(RatPoly{0, 0, 1}, RatPoly{1}, 1), Error);
  }

  TEST_CASE("bilinear form is translation invariant and (-1)^n symmetric") {
    for (int i = 0; i < 200; ++i) {
      int n = static_cast<int>(uniform(1, 4));
      RatPoly p = random_int_poly(n, 20), q = random_int_poly(n, 20);
      Rational a = random_rational(50, 50);
      Rational g0 = bilinear_g(p, q, n);
      CHECK(bilinear_g(p, q, n, a) == g0);
      CHECK(bilinear_g(q, p, n) == (n % 2 == 0 ? g0 : -g0));
      RatInterval gi = bilinear_g(p, q, n, RealNumber::parse("root:[-2,0,1]:1"));
      CHECK(gi.lo <= g0);
      CHECK(gi.hi >= g0);
    }
  }

  TEST_CASE("pairing bound") {
    auto r = pairing_bound_check(RatPoly{1}, RatPoly{0, 1}, RealNumber(Rational(0)), {1, 1}, {1, 1});
    CHECK(r.holds);
    CHECK_THROWS_AS(
        pairing_bound_check(RatPoly{5}, RatPoly{0, 1}, RealNumber(Rational(0)), {1, 1}, {1, 1}), Error);
  }

  TEST_CASE("state for a double root") {
    HankelState s = build_state(RatPoly{1, -2, 1}, RealNumber(Rational(0)), 2);
    CHECK(s.ranks.size() == 3);
    CHECK(s.ranks == s.ranks_N);
    auto d = rank_drop_extract(s, 1);
    CHECK(d.h == 1);
    CHECK(d.P == RatPoly({-1, 1}));
    auto v0 = kernel_V(s, 0);
    REQUIRE(v0.basis.size() == 2);
    RatMatrix got(2, 3), want(2, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) got(i, j) = v0.basis[i][j];
    want = RatMatrix::from_rows({{-1, 1, 0}, {0, -1, 1}});
    CHECK(rank(got) == 2);
    RatMatrix both(4, 3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 3; ++j) {
        both(i, j) = got(i, j);
        both(i + 2, j) = want(i, j);
      }
    CHECK(rank(both) == 2);
  }

  TEST_CASE("random states satisfy the rank and transpose identities") {
    for (int i = 0; i < 60; ++i) {
      int n = static_cast<int>(uniform(1, 4));
      RatPoly Q = random_int_poly(n, 10);
      if (Q.is_zero()) continue;
      Rational xi = random_rational(10, 10);
      HankelState s = build_state(Q, RealNumber(xi), n);
      for (int l = 0; l <= n; ++l) {
        CHECK(s.ranks[l] == s.ranks_N[l]);
        CHECK(rank(s.N(l)) == s.ranks[l]);
        RatMatrix a = s.M(l), b = s.M(n - l);
        REQUIRE(a.rows() == b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t c = 0; c < a.cols(); ++c) CHECK(a(r, c) == b(c, r));
        CHECK(kernel_V(s, l).basis.size() == static_cast<std::size_t>(n - l + 1) - s.ranks[l]);
      }
    }
  }

  TEST_CASE("state validation") {
    CHECK_THROWS_AS(build_state(RatPoly{}, RealNumber(Rational(0)), 2), Error);
    CHECK_THROWS_AS(build_state(RatPoly{0, 0, 0, 1}, RealNumber(Rational(0)), 2), Error);
  }

  TEST_CASE("divisor construction") {
    BodySpec b{2, RealNumber(Rational(1)), {Rational(1, 100), Rational(1, 100), 2}};
    auto r = construct_divisor(b, RatPoly{1, -2, 1}, 1, 1);
    CHECK(r.status == "Dropped");
    CHECK(r.P == RatPoly({-1, 1}));
    for (const auto& c : r.checks) CHECK(c.holds);
  }

  TEST_CASE("inclusion of small integer points") {
    HankelState s = build_state(RatPoly{0, 0, 1}, RealNumber(Rational(0)), 3);
    std::vector<Rational> X{Rational(1, 1000000), Rational(1, 1000000), 2, 2};
    auto ir = inclusion_check_71(s, 1, X);
    CHECK(ir.holds);
    CHECK(ir.checked > 100);
  }

  TEST_CASE("auxiliary polynomial is divisible by the drop generator") {
    HankelState s = build_state(RatPoly{1, -2, 1}, RealNumber(Rational(1)), 2);
    std::vector<Rational> X{Rational(1, 100), Rational(1, 100), 2};
    auto aux = aux_polynomial_G(s, 0, 0, X);
    CHECK_FALSE(aux.G.is_zero());
    CHECK(corollary_73_check(RatPoly{-1, 1}, aux, 2, 0, 0));
    CHECK(inclusion_check_71(s, 0, X).holds);
  }
}
