#include <doctest.h>

#include <cmath>

#include "dioph/error.hpp"
#include "dioph/exactnum/factor.hpp"
#include "dioph/exactnum/interval.hpp"
#include "dioph/exactnum/logs.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "dioph/exactnum/place.hpp"
#include "dioph/exactnum/real.hpp"
#include "dioph/exactnum/roots.hpp"
#include "support.hpp"

using namespace dioph;
using dioph::testing::random_int_poly;
using dioph::testing::random_rational;
using dioph::testing::uniform;

TEST_SUITE("exactnum") {
  TEST_CASE("rational parsing and formatting") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7/1");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(round_nearest(Rational(5, 2)) == 3);
    CHECK(round_nearest(Rational(-5, 2)) == -2);
    CHECK(iroot(Integer(6 * 6 * 6), 2) == 14);
  }

  TEST_CASE("absolute values at places") {
    CHECK(abs_at_place(12, Place::finite(2)) == Rational(1, 4));
    CHECK(abs_at_place(Rational(-3, 4), Place::infinite()) == Rational(3, 4));
    CHECK(abs_at_place(Rational(5, 7), Place::finite(7)) == 7);
  }

  TEST_CASE("product formula") {
    CHECK(product_formula_check(-6));
    CHECK(product_formula_check(1));
    CHECK(product_formula_check(Rational(35, 4)));
    CHECK_THROWS_AS(product_formula_check(0), Error);
    for (int i = 0; i < 200; ++i) {
      Rational x = random_rational(1000000, 1000000);
      if (x != 0) CHECK(product_formula_check(x));
    }
  }

  TEST_CASE("resultant and discriminant") {
    CHECK(resultant(RatPoly{-1, 1}, RatPoly{1, 1}) == 2);
    CHECK(resultant(RatPoly{1, 0, 1}, RatPoly{-2, 1}) == 5);
    CHECK(resultant(RatPoly{-1, 0, 1}, RatPoly{-1, 1}) == 0);
    CHECK(discriminant(RatPoly{-2, 0, 1}) == 8);
    CHECK(discriminant(RatPoly{1, 1, 1}) == -3);
    CHECK(discriminant(RatPoly{-2, 0, 2}) == 16);
    CHECK_THROWS_AS(discriminant(RatPoly{1, 1}), Error);
  }

  TEST_CASE("resultant vanishes exactly on a common factor") {
    for (int i = 0; i < 50; ++i) {
      RatPoly f = random_int_poly(2, 5), g = random_int_poly(2, 5), h = random_int_poly(1, 5);
      if (f.degree() < 1 || g.degree() < 1 || h.degree() < 1) continue;
      CHECK(resultant(f * h, g * h) == 0);
      CHECK((resultant(f, g) == 0) == (gcd(f, g).degree() > 0));
    }
  }

  TEST_CASE("real root isolation") {
    auto r = isolate_real_roots(RatPoly{-2, 0, 1}, Rational(0), Rational(2), 40);
    REQUIRE(r.size() == 1);
    CHECK(r[0].lower().to_double() <= std::sqrt(2.0));
    CHECK(r[0].upper().to_double() >= std::sqrt(2.0));
    CHECK(r[0].rad().to_rational() <= pow(Rational(2), -40));
    CHECK(isolate_real_roots(RatPoly{1, 0, 1}).empty());
    RatPoly p = RatPoly{-1, 1} * RatPoly::linear_from_root(Rational(1, 2));
    auto two = isolate_real_roots(p, Rational(0), Rational(2));
    REQUIRE(two.size() == 2);
    CHECK(two[0].contains(Rational(1, 2)));
    CHECK(two[1].contains(Rational(1)));
    CHECK(certainly_lt(two[0], two[1]));
  }

  TEST_CASE("roots in a disk") {
    CHECK(count_roots_in_disk(RatPoly{-2, 0, 1}, RealNumber(0), 2) == 2);
    CHECK(count_roots_in_disk(RatPoly{1, 0, 1}, RealNumber(0), Rational(1, 2)) == 0);
    RatPoly p = pow(RatPoly::linear_from_root(Rational(1, 2)), 2) - RatPoly::constant(Rational(1, 100));
    CHECK(count_roots_in_disk(p, RealNumber(Rational(1, 2)), Rational(1, 5)) == 2);
  }

  TEST_CASE("certified complex roots reach the requested radius") {
    for (int i = 0; i < 40; ++i) {
      RatPoly p = random_int_poly(4, 20);
      if (p.degree() < 1) continue;
      auto roots = certified_complex_roots(p, 80);
      CHECK(static_cast<int>(roots.size()) == squarefree_part(p).degree());
      for (const auto& d : roots) CHECK(d.rad.to_rational() <= pow(Rational(2), -80));
    }
    auto r = certified_complex_roots(RatPoly{-18, -20, -20, 1}, 128);
    CHECK(r.size() == 3);
  }

  TEST_CASE("factorization examples") {
    auto f = factor_over_rationals(RatPoly{-1, 0, 1});
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == RatPoly{-1, 1});
    CHECK(f.factors[1].first == RatPoly{1, 1});
    CHECK(is_irreducible(RatPoly{3, 0, 1}));
    auto g = factor_over_rationals(RatPoly{0, -2, 0, 2});
    CHECK(g.leading == 2);
    CHECK(g.factors.size() == 3);
    CHECK(g.expand() == RatPoly({0, -2, 0, 2}));
  }

  TEST_CASE("factorization reconstructs random products") {
    for (int i = 0; i < 30; ++i) {
      RatPoly p = random_int_poly(2, 6) * random_int_poly(3, 6);
      if (p.is_zero()) continue;
      auto f = factor_over_rationals(p);
      CHECK(f.expand() == p);
      for (const auto& [q, m] : f.factors) CHECK(is_irreducible(q));
    }
  }

  TEST_CASE("small degree irreducibility matches the factorization") {
    for (int i = 0; i < 300; ++i) {
      RatPoly p = random_int_poly(static_cast<int>(uniform(2, 3)), 12);
      if (p.degree() < 2) continue;
      auto f = factor_over_rationals(p);
      bool irr = f.factors.size() == 1 && f.factors[0].second == 1;
      CHECK(is_irreducible(p) == irr);
    }
  }

  TEST_CASE("exact linear algebra") {
    RatMatrix a = RatMatrix::from_rows({{1, 2, 0}, {0, 1, 2}});
    CHECK(rank(a) == 2);
    auto k = kernel_basis(a);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] + 2 * k[0][1] == 0);
    CHECK(k[0][1] + 2 * k[0][2] == 0);
    CHECK(maximal_minors(a) == std::vector<Rational>{1, 2, 4});
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {1, 3}});
    IntMatrix U;
    IntMatrix h = hermite_normal_form(m, &U);
    CHECK(determinant(to_rational(U)) * determinant(to_rational(U)) == 1);
    IntMatrix uh = U * m;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(uh(i, j) == h(i, j));
  }

  TEST_CASE("dyadic balls enclose exact results") {
    for (int i = 0; i < 200; ++i) {
      Rational a = random_rational(1000, 1000), b = random_rational(1000, 1000);
      DyadicBall x = DyadicBall::from_rational(a, 30), y = DyadicBall::from_rational(b, 30);
      CHECK((x + y).contains(a + b));
      CHECK((x * y).contains(a * b));
      if (b != 0) CHECK(divide(x, y, 40).contains(a / b));
    }
  }

  TEST_CASE("log, exp and sqrt bounds bracket the doubles") {
    for (double v : {0.001, 0.5, 2.0, 1234.5}) {
      Rational q(v);
      auto [l, h] = log_bounds(q);
      CHECK(l <= h);
      CHECK(l.get_d() <= std::log(v) + 1e-12);
      CHECK(h.get_d() >= std::log(v) - 1e-12);
      auto [el, eh] = exp_bounds(Rational(1));
      CHECK(el.get_d() <= std::exp(1.0) + 1e-12);
      CHECK(eh.get_d() >= std::exp(1.0) - 1e-12);
    }
    auto [sl, sh] = sqrt_bounds(Rational(2));
    CHECK(sl * sl <= 2);
    CHECK(sh * sh >= 2);
  }

  TEST_CASE("real numbers") {
    RealNumber r = RealNumber::parse("root:[-2,0,1]:1");
    CHECK(r.kind() == RealNumber::Kind::Algebraic);
    CHECK(r.compare(Rational(141, 100)) > 0);
    CHECK(r.compare(Rational(142, 100)) < 0);
    auto [lo, hi] = r.bounds(60);
    CHECK(hi - lo <= pow(Rational(2), -59));
    CHECK(RealNumber::parse("3/6").rational_value() == Rational(1, 2));
    CHECK_THROWS_AS(RealNumber::parse("bogus"), Error);
  }

  TEST_CASE("liouville exponents") {
    std::vector<long> expect{2, 6, 14, 36, 88};
    for (unsigned l = 1; l <= 5; ++l) CHECK(liouville_exponent(l, 2, 2) == expect[l - 1]);
    for (unsigned l = 1; l <= 8; ++l) CHECK(liouville_exponent(l, 1, 2) == pow(Integer(4), l));
    for (unsigned l = 1; l < 12; ++l) CHECK(liouville_exponent(l, 2, 2) < liouville_exponent(l + 1, 2, 2));
    RealNumber x = RealNumber::liouville(1, 2, 2);
    Rational partial = liouville_partial_sum(1, 2, 2, 2);
    CHECK(partial == Rational(1, 4) + pow(Rational(2), -14));
    auto [lo, hi] = x.bounds(120);
    CHECK(lo >= partial);
    CHECK(hi - partial <= pow(Rational(2), -87));
  }

  TEST_CASE("interval evaluation encloses point values") {
    RatPoly p{1, -3, 0, 2};
    for (int i = 0; i < 50; ++i) {
      Rational a = random_rational(20, 10), w = Rational(uniform(0, 5), 10);
      RatInterval v = eval(p, RatInterval(a, a + w));
      CHECK(v.lo <= p.eval(a));
      CHECK(v.hi >= p.eval(a + w));
    }
  }
}
