#include <doctest.h>

#include "dioph/error.hpp"
#include "dioph/gelfond.hpp"
#include "support.hpp"

using namespace dioph;
using dioph::testing::random_int_poly;
using dioph::testing::uniform;

TEST_SUITE("gelfond") {
  TEST_CASE("resultant gap examples") {
    RealNumber s2 = RealNumber::parse("root:[-2,0,1]:1");
    CHECK(resultant_gap_check(RatPoly{-1, 1}, RatPoly{-2, 1}, RealNumber(Rational(3, 2))).holds);
    CHECK(resultant_gap_check(RatPoly{-2, 0, 1}, RatPoly{-3, 2}, s2).holds);
    CHECK_THROWS_AS(resultant_gap_check(RatPoly{-1, 0, 1}, RatPoly{-1, 1}, s2), Error);
  }

  TEST_CASE("resultant gap on random coprime pairs") {
    RealNumber xi = RealNumber::parse("root:[-2,0,0,1]:0");
    int done = 0;
    while (done < 100) {
      RatPoly p = random_int_poly(static_cast<int>(uniform(1, 4)), 20);
      RatPoly q = random_int_poly(static_cast<int>(uniform(1, 4)), 20);
      if (p.degree() < 1 || q.degree() < 1 || gcd(p, q).degree() > 0) continue;
      CHECK(resultant_gap_check(p, q, xi).holds);
      ++done;
    }
  }

  TEST_CASE("factor chain tracks a repeated approximation") {
    FactorChainState st;
    st.xi = RealNumber::parse("root:[-2,0,1]:1");
    st.n = 3;
    st = factor_chain_step(st, 4, RatPoly{-2, 0, 1} * RatPoly{1, 1});
    REQUIRE(st.current.has_value());
    CHECK(*st.current == RatPoly({-2, 0, 1}));
    st = factor_chain_step(st, 12, RatPoly{-2, 0, 1} * RatPoly{5, 1});
    CHECK(*st.current == RatPoly({-2, 0, 1}));
    CHECK(st.status != ChainStatus::Inconclusive);
    CHECK(st.steps.size() == 2);
    CHECK(std::string(to_string(st.status)).size() > 0);
  }

  TEST_CASE("minor module generation") {
    for (int k = 1; k <= 7; ++k)
      for (int l = 0; k + l <= 7; ++l) CHECK(minor_module_generation(k, l));
    auto m = minor_module(2, 1);
    CHECK(m.generated);
    CHECK(m.constant >= 1);
    CHECK_THROWS_AS(minor_module(4, 4), Error);
    CHECK_THROWS_AS(minor_module(0, 1), Error);
  }

  TEST_CASE("product space heights") {
    CHECK(product_space_height_check(RatPoly{-1, 1}, 2).holds);
    CHECK(product_space_height_check(RatPoly{-2, 0, 1}, 3).holds);
    for (int i = 0; i < 20; ++i) {
      RatPoly p = random_int_poly(static_cast<int>(uniform(1, 3)), 9);
      if (p.degree() < 1) continue;
      CHECK(product_space_height_check(p, static_cast<int>(uniform(1, 3))).holds);
    }
  }
}
