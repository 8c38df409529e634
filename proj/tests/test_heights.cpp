#include <doctest.h>

#include "dioph/error.hpp"
#include "dioph/heights.hpp"
#include "support.hpp"

using namespace dioph;
using dioph::testing::random_int_poly;
using dioph::testing::uniform;

namespace {

RatMatrix random_basis(std::size_t dim, std::size_t ambient) {
  while (true) {
    RatMatrix m(dim, ambient);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < ambient; ++j) m(i, j) = uniform(-100, 100);
    if (rank(m) == dim) return m;
  }
}

}  // namespace

TEST_SUITE("heights") {
  TEST_CASE("vector heights") {
    CHECK(height_vector({4, 6}).value == 3);
    CHECK(height_vector({1, 0, 0}).value == 1);
    CHECK(height_vector({Rational(1, 2), Rational(1, 3)}).value == 3);
    CHECK_THROWS_AS(height_vector({0, 0}), Error);
  }

  TEST_CASE("local factors multiply to the height") {
    auto r = height_vector({Rational(3, 4), 6, Rational(5, 2)});
    Rational prod = 1;
    for (const auto& [v, norm] : r.per_place) prod *= norm;
    CHECK(prod == r.value);
  }

  TEST_CASE("height is projective") {
    for (int i = 0; i < 100; ++i) {
      std::vector<Rational> a{uniform(-50, 50), uniform(-50, 50), uniform(1, 50)};
      Rational c = make_rational(uniform(1, 30), uniform(1, 30));
      std::vector<Rational> b;
      for (const auto& x : a) b.push_back(c * x);
      CHECK(height_vector(a).value == height_vector(b).value);
    }
  }

  TEST_CASE("matrix heights") {
    CHECK(height_matrix(RatMatrix::from_rows({{1, 0, 1}, {0, 1, 0}})).value == 1);
    CHECK(height_matrix(RatMatrix::from_rows({{1, 2, 0}, {0, 1, 2}})).value == 4);
    CHECK(height_matrix(RatMatrix::from_rows({{2, 0}, {0, 2}})).value == 1);
    CHECK_THROWS_AS(height_matrix(RatMatrix::from_rows({{1, 2}, {2, 4}})), Error);
  }

  TEST_CASE("subspace heights agree in both representations") {
    RatMatrix b = RatMatrix::from_rows({{1, 0, 1}, {0, 1, 0}});
    CHECK(height_subspace({3, b, RatMatrix::from_rows({{1, 0, -1}})}).value == 1);
    RatMatrix line = RatMatrix::from_rows({{1, 2}});
    CHECK(height_subspace({2, line, RatMatrix::from_rows({{2, -1}})}).value == 2);
    CHECK_THROWS_AS(height_subspace({2, line, RatMatrix::from_rows({{1, -1}})}), Error);
    for (int i = 0; i < 30; ++i) {
      RatMatrix m = random_basis(2, 4);
      CHECK_NOTHROW(height_subspace({4, m, orthogonal_complement(m)}));
    }
  }

  TEST_CASE("product of polynomial heights") {
    auto a = height_poly_product_bounds({RatPoly{-1, 1}, RatPoly{1, 1}});
    CHECK(a.height_of_product == 1);
    CHECK(a.product_of_heights == 1);
    CHECK(a.holds);
    auto b = height_poly_product_bounds({RatPoly{1, 2}, RatPoly{1, 2}});
    CHECK(b.height_of_product == 4);
    CHECK(b.product_of_heights == 4);
    CHECK(b.holds);
    CHECK(height_poly_product_bounds({RatPoly{0, 1}, RatPoly{0, 1}, RatPoly{0, 1}}).holds);
    for (int i = 0; i < 50; ++i) {
      RatPoly p = random_int_poly(2, 9), q = random_int_poly(2, 9);
      if (p.is_zero() || q.is_zero()) continue;
      CHECK(height_poly_product_bounds({p, q}).holds);
    }
  }

  TEST_CASE("Mahler measure") {
    auto m = mahler_measure_bound(RatPoly{-2, 0, 1});
    CHECK(m.measure.contains(2));
    CHECK(m.holds);
    CHECK(mahler_measure_bound(RatPoly{-1, 2}).measure.contains(2));
    CHECK(mahler_measure_bound(RatPoly{1, 0, 1}).measure.contains(1));
    for (int i = 0; i < 30; ++i) {
      RatPoly p = random_int_poly(4, 20);
      if (p.degree() < 1 || squarefree_part(p).degree() != p.degree()) continue;
      CHECK(mahler_measure_bound(p).holds);
    }
  }
}
