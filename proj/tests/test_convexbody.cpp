#include <doctest.h>

#include "dioph/convexbody.hpp"
#include "dioph/error.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "support.hpp"

using namespace dioph;
using dioph::testing::uniform;

namespace {

BodySpec body(int n, Rational xi, std::vector<Rational> X) { return BodySpec{n, RealNumber(xi), std::move(X)}; }

}  // namespace

TEST_SUITE("convexbody") {
  TEST_CASE("membership") {
    CHECK(membership(RatPoly{1}, body(1, 0, {1, 1}), 1));
    CHECK(membership(RatPoly{-1, 2}, body(1, Rational(1, 2), {Rational(1, 4), 2}), 1));
    CHECK_FALSE(membership(RatPoly{0, 1}, body(1, 0, {1, Rational(1, 2)}), 1));
    CHECK_THROWS_AS(membership(RatPoly({Rational(1, 2)}), body(1, 0, {1, 1}), 1), Error);
  }

  TEST_CASE("volume") {
    CHECK(volume(body(1, 0, {1, 1})) == 4);
    CHECK(volume(body(2, 0, {1, 1, 1})) == 4);
    CHECK(volume(body(2, 0, {Rational(1, 2), 1, 2})) == 4);
  }

  TEST_CASE("successive minima examples") {
    auto a = successive_minima(body(1, 0, {1, 1}));
    CHECK(a.exhaustive);
    CHECK(a.lambdas == std::vector<Rational>{1, 1});
    CHECK(a.witnesses[0] == RatPoly{1});
    CHECK(a.witnesses[1] == RatPoly{0, 1});

    auto b = successive_minima(body(1, Rational(1, 2), {Rational(1, 4), 2}));
    CHECK(b.lambdas[0] == 1);
    CHECK(b.witnesses[0] == RatPoly{-1, 2});

    auto c = successive_minima(body(1, 0, {Rational(1, 2), Rational(1, 2)}));
    CHECK(c.lambdas == std::vector<Rational>{2, 2});
  }

  TEST_CASE("minima scale inversely with the body") {
    for (int i = 0; i < 20; ++i) {
      int n = static_cast<int>(uniform(1, 2));
      std::vector<Rational> X;
      for (int j = 0; j <= n; ++j) X.push_back(make_rational(uniform(1, 8), uniform(1, 8)));
      Rational xi = make_rational(uniform(-4, 4), uniform(1, 4));
      Rational c = make_rational(uniform(1, 5), uniform(1, 5));
      std::vector<Rational> cX;
      for (const auto& x : X) cX.push_back(c * x);
      auto m1 = successive_minima(body(n, xi, X));
      auto m2 = successive_minima(body(n, xi, cX));
      for (int j = 0; j <= n; ++j) CHECK(m2.lambdas[j] == m1.lambdas[j] / c);
    }
  }

  TEST_CASE("witnesses are independent members of the scaled body") {
    for (int i = 0; i < 20; ++i) {
      int n = static_cast<int>(uniform(1, 3));
      std::vector<Rational> X;
      for (int j = 0; j <= n; ++j) X.push_back(make_rational(uniform(1, 8), uniform(1, 8)));
      BodySpec b = body(n, make_rational(uniform(-8, 8), uniform(1, 4)), X);
      auto m = successive_minima(b);
      RatMatrix w(n + 1, n + 1);
      for (int j = 0; j <= n; ++j) {
        CHECK(membership(m.witnesses[j], b, m.lambdas[j]));
        CHECK(mu_exact(m.witnesses[j], b) == m.lambdas[j]);
        for (int k = 0; k <= n; ++k) w(j, k) = m.witnesses[j][k];
      }
      CHECK(rank(w) == static_cast<std::size_t>(n + 1));
      for (int j = 0; j < n; ++j) CHECK(m.lambdas[j] <= m.lambdas[j + 1]);
    }
  }

  TEST_CASE("irrational xi gives certified brackets") {
    BodySpec b{2, RealNumber::parse("root:[-2,0,1]:1"), {Rational(1, 10), 2, 2}};
    auto m = successive_minima(b);
    for (int j = 0; j <= 2; ++j) CHECK(m.lambdas_lower[j] <= m.lambdas[j]);
    CHECK(m.witnesses[0] == RatPoly{5, -5, 1});
    CHECK(m.witnesses[1] == RatPoly{-2, 0, 1});
    for (int j = 0; j <= 2; ++j) CHECK(membership(m.witnesses[j], b, m.lambdas[j]));
  }

  TEST_CASE("first minimum condition") {
    CHECK(first_minimum_condition(body(1, 0, {1, 1}), 1));
    CHECK_FALSE(first_minimum_condition(body(1, 0, {Rational(1, 4), 1}), 1));
    CHECK(first_minimum_condition(body(2, 0, {1, 1, 1}), 2));
  }

  TEST_CASE("Minkowski sandwich") {
    auto b1 = body(1, 0, {1, 1});
    auto r1 = minkowski_product_check(successive_minima(b1), b1);
    CHECK(r1.holds);
    CHECK(r1.data["product"] == "4/1");
    auto b2 = body(1, Rational(1, 2), {Rational(1, 4), 2});
    CHECK(minkowski_product_check(successive_minima(b2), b2).holds);
  }

  TEST_CASE("dual tuple") {
    CHECK(dual_tuple({Rational(1, 4), 2}) == std::vector<Rational>{Rational(1, 2), 4});
    CHECK(dual_tuple({1, 1, 1}) == std::vector<Rational>{1, 1, 1});
    CHECK(dual_tuple({2, 3, 5}) == std::vector<Rational>{Rational(1, 5), Rational(1, 3), Rational(1, 2)});
  }

  TEST_CASE("duality products") {
    auto r = duality_products(body(1, 0, {1, 1}));
    CHECK(r.holds);
    CHECK(r.data["min_product"] == "1/1");
    CHECK(duality_products(body(1, Rational(1, 2), {Rational(1, 4), 2})).holds);
    auto s = duality_products(body(1, Rational(1, 2), {Rational(3, 4), 6}));
    CHECK(s.holds);
    CHECK(s.data["min_product"] == duality_products(body(1, Rational(1, 2), {Rational(1, 4), 2})).data["min_product"]);
  }

  TEST_CASE("body validation") {
    CHECK_THROWS_AS(successive_minima(body(1, 0, {1})), Error);
    CHECK_THROWS_AS(successive_minima(body(1, 0, {1, 0})), Error);
    CHECK_THROWS_AS(successive_minima(body(7, 0, std::vector<Rational>(8, 1))), Error);
  }
}
