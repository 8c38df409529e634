#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "dioph/construct.hpp"
#include "dioph/convexbody.hpp"
#include "dioph/error.hpp"
#include "dioph/exactnum/factor.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "dioph/exactnum/place.hpp"
#include "dioph/exactnum/roots.hpp"
#include "dioph/gelfond.hpp"
#include "dioph/hankel.hpp"
#include "dioph/heights.hpp"
#include "support.hpp"

using namespace dioph;
using dioph::testing::random_int_poly;
using dioph::testing::uniform;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome product_formula() {
  for (int i = 0; i < 10000; ++i) {
    long num = 0;
    while (num == 0) num = uniform(-1000000, 1000000);
    Rational x = make_rational(num, uniform(1, 1000000));
    if (!product_formula_check(x)) return {false, "fails at " + to_string(x)};
  }
  return {true, "10000 rationals"};
}

Outcome height_duality() {
  for (int i = 0; i < 500; ++i) {
    std::size_t dim = static_cast<std::size_t>(uniform(1, 4));
    RatMatrix b(dim, 5);
    do {
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < 5; ++c) b(r, c) = uniform(-100, 100);
    } while (rank(b) != dim);
    Rational hb = height_matrix(b).value;
    Rational hk = height_matrix(orthogonal_complement(b)).value;
    if (hb != hk) return {false, "H(V) = " + to_string(hb) + " but H(V^perp) = " + to_string(hk)};
  }
  return {true, "500 subspaces of Q^5"};
}

Outcome bilinear_invariance() {
  for (int i = 0; i < 1000; ++i) {
    int n = static_cast<int>(uniform(1, 4));
    RatPoly p = random_int_poly(static_cast<int>(uniform(0, n)), 50);
    RatPoly q = random_int_poly(static_cast<int>(uniform(0, n)), 50);
    Rational xi = make_rational(uniform(-50, 50), uniform(1, 50));
    Rational g0 = bilinear_g(p, q, n);
    if (bilinear_g(p, q, n, xi) != g0) return {false, "g differs at " + to_string(xi)};
    Rational swapped = bilinear_g(q, p, n);
    if (swapped != (n % 2 == 0 ? g0 : Rational(-g0))) return {false, "symmetry fails"};
  }
  return {true, "1000 pairs"};
}

struct CorpusEntry {
  BodySpec body;
  MinimaResult minima;
};

std::vector<CorpusEntry>& body_corpus() {
  static std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (int i = 0; i < 200; ++i) {
      int n = static_cast<int>(uniform(1, 3));
      long den = uniform(1, 8);
      Rational xi = make_rational(uniform(-2 * den, 2 * den), den);
      std::vector<Rational> X;
      for (int j = 0; j <= n; ++j) X.push_back(make_rational(uniform(1, 8), uniform(1, 8)));
      BodySpec b{n, RealNumber(xi), X};
      out.push_back({b, successive_minima(b)});
    }
    return out;
  }();
  return corpus;
}

Outcome minkowski() {
  for (const auto& e : body_corpus()) {
    if (!e.minima.exhaustive) return {false, "minima not exact"};
    auto r = minkowski_product_check(e.minima, e.body);
    if (!r.holds) return {false, r.to_json().dump()};
  }
  return {true, "200 bodies"};
}

Outcome duality() {
  Rational best = 0;
  for (const auto& e : body_corpus()) {
    BodySpec dual{e.body.n, e.body.xi, dual_tuple(e.body.X)};
    auto r = duality_products(e.body, e.minima, successive_minima(dual));
    if (!r.holds) return {false, r.to_json().dump()};
    best = std::max(best, parse_rational(r.data["max_product"].get<std::string>()));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", best.get_d());
  return {true, "200 bodies, empirical max product " + to_string(best) + " (" + buf + ")"};
}

Outcome resultant_gap() {
  int done = 0;
  while (done < 2000) {
    RatPoly p = random_int_poly(static_cast<int>(uniform(1, 4)), 50);
    RatPoly q = random_int_poly(static_cast<int>(uniform(1, 4)), 50);
    if (p.degree() < 1 || q.degree() < 1 || gcd(p, q).degree() > 0) continue;
    Rational xi = make_rational(uniform(-50, 50), uniform(1, 50));
    auto r = resultant_gap_check(p, q, RealNumber(xi));
    if (!r.holds) return {false, r.to_json().dump()};
    ++done;
  }
  return {true, "2000 coprime pairs"};
}

Outcome module_generation() {
  int count = 0;
  for (int k = 1; k <= 7; ++k)
    for (int l = 0; k + l <= 7; ++l, ++count)
      if (!minor_module_generation(k, l))
        return {false, "R(" + std::to_string(k) + "," + std::to_string(l) + ") not generated"};
  return {true, std::to_string(count) + " pairs (k,l)"};
}

bool same_row_space(const std::vector<RatPoly>& a, const std::vector<RatPoly>& b, int width) {
  RatMatrix ma(a.size(), width), mab(a.size() + b.size(), width);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < width; ++j) ma(i, j) = mab(i, j) = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (int j = 0; j < width; ++j) mab(a.size() + i, j) = b[i][j];
  return a.size() == b.size() && rank(ma) == a.size() && rank(mab) == a.size();
}

Outcome hankel_structure() {
  for (int i = 0; i < 500; ++i) {
    int n = static_cast<int>(uniform(1, 4));
    RatPoly Q;
    while (Q.is_zero()) Q = random_int_poly(static_cast<int>(uniform(0, n)), 20);
    Rational xi = make_rational(uniform(-50, 50), uniform(1, 50));
    HankelState s = build_state(Q, RealNumber(xi), n);
    for (int l = 0; l <= n; ++l) {
      if (rank(s.N(l)) != s.ranks[l]) return {false, "rank M != rank N"};
      RatMatrix a = s.M(l), b = s.M(n - l);
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
          if (a(r, c) != b(c, r)) return {false, "transpose fails"};
      if (kernel_V(s, l).basis.size() != static_cast<std::size_t>(n - l + 1) - s.ranks[l])
        return {false, "dim V_l mismatch"};
    }
  }
  HankelState s = build_state(RatPoly{1, -2, 1}, RealNumber(Rational(0)), 2);
  RankDrop d = rank_drop_extract(s, 1);
  if (d.h != 1 || d.P != RatPoly({-1, 1})) return {false, "engineered drop: h = " + std::to_string(d.h)};
  std::vector<RatPoly> want{RatPoly{-1, 1}, RatPoly{0, -1, 1}};
  if (!same_row_space(kernel_V(s, 0).basis, want, 3)) return {false, "V_0 != (T-1) E_1"};
  return {true, "500 random states; (T-1)^2 gives h=1, P=T-1, V_0=(T-1)E_1"};
}

Outcome inclusion() {
  std::size_t points = 0;
  int states = 0, attempts = 0;
  while (states < 100) {
    if (++attempts > 5000) return {false, "could not sample states"};
    int n = static_cast<int>(uniform(1, 3));
    int m = static_cast<int>(uniform(1, n));
    long q = uniform(1, 3), p = uniform(-3, 3);
    if (std::gcd(p, q) != 1) continue;
    RatPoly R;
    while (R.is_zero()) R = random_int_poly(static_cast<int>(uniform(0, n - m)), 3);
    RatPoly Q = pow(RatPoly{-p, q}, m) * R;
    Rational xi = make_rational(p, q);
    Rational tiny = pow(Rational(10), -static_cast<long>(uniform(3, 6)));
    std::vector<Rational> X(n + 1, tiny);
    for (int j = m; j <= n; ++j) {
      Rational v = abs(Q.derivative(j).eval(xi));
      X[j] = std::max({v, X[j - 1], Rational(1, 1000)});
    }
    int ell = static_cast<int>(uniform(0, n));
    HankelState s = build_state(Q, RealNumber(xi), n);
    try {
      auto r = inclusion_check_71(s, ell, X, 300000);
      if (!r.holds) return {false, "violation"};
      points += r.checked;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) continue;
      throw;
    }
    ++states;
  }
  return {true, "100 states, " + std::to_string(points) + " dual-body points, exhaustive"};
}

std::vector<ApproxRecord>& construction_run() {
  static std::vector<ApproxRecord> rec = theorem_A_experiment(RealNumber::parse("root:[-2,0,0,1]:0"), 4, 1,
                                                              {10, 100, 200, 500, 1000});
  return rec;
}

Outcome construction() {
  for (const auto& r : construction_run()) {
    const RatPoly& P = r.alpha.min_poly;
    bool monic = P.degree() == 5 && P.leading() == 1 && P.has_integer_coeffs();
    if (!monic) return {false, "not monic integer of degree 5 at X = " + to_string(r.X)};
    if (!is_eisenstein(P, r.alpha.eisenstein_prime)) return {false, "not Eisenstein"};
    if (!r.root_within_delta) return {false, "no root within delta"};
    if (!r.height_bound || r.H_alpha > r.C * r.Y) return {false, "H(P) > C Y"};
  }
  return {true, "5 schedule points X = 10..1000, last H = " + to_string(construction_run().back().H_alpha)};
}

Outcome empirical_exponent() {
  const ApproxRecord& r = construction_run().back();
  char buf[96];
  std::snprintf(buf, sizeof buf, "exponent in [%.4f, %.4f] at X = %s", r.exponent_lo.get_d(), r.exponent_hi.get_d(),
                to_string(r.X).c_str());
  return {r.exponent_lo > 1, buf};
}

Outcome discriminant_bound() {
  std::vector<Rational> xis;
  for (int i = 0; i < 20; ++i) {
    long den = uniform(1, 1000);
    xis.push_back(make_rational(uniform(0, den), den));
  }
  std::size_t polys = 0, uniform_ok = 0;
  for (int deg = 2; deg <= 3; ++deg) {
    std::vector<long> c(deg + 1, -20);
    c[deg] = 1;
    while (true) {
      long g = 0;
      for (long v : c) g = std::gcd(g, v);
      std::vector<Rational> coeffs(c.begin(), c.end());
      RatPoly P(coeffs);
      if (g == 1 && c[0] != 0 && is_irreducible(P)) {
        ++polys;
        auto roots = certified_complex_roots(P, 32);
        for (int t = 2; t <= deg; ++t) {
          if (prop_10_1_uniform(P, roots, t)) {
            ++uniform_ok;
            continue;
          }
          for (const auto& xi : xis)
            if (!prop_10_1_holds(P, roots, xi, t) && !prop_10_1_check(P, RealNumber(xi), t).holds)
              return {false, P.to_string() + " at " + to_string(xi)};
        }
      }
      int j = 0;
      while (j <= deg && ++c[j] > 20) c[j++] = -20;
      if (j > deg) break;
    }
  }
  return {true, std::to_string(polys) + " irreducible polynomials, " + std::to_string(uniform_ok) +
                    " (polynomial, t) cases certified for every xi at once"};
}

Outcome adversarial() {
  auto r = prop_10_2_adversarial(2, 2, 3, {10, 20, 30, 40, 50});
  if (!r.H0) return {false, "no H_0 in the grid"};
  char buf[160];
  std::snprintf(buf, sizeof buf, "H_0 = %d, min slack = %.4f, %zu algebraic numbers", *r.H0, r.min_slack,
                r.algebraic_numbers);
  return {true, buf};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "product formula", 5, product_formula},
      {2, "height duality", 30, height_duality},
      {3, "bilinear form invariance", 10, bilinear_invariance},
      {4, "Minkowski sandwich", 300, minkowski},
      {5, "duality products", 600, duality},
      {6, "resultant gap", 60, resultant_gap},
      {7, "minor module generation", 120, module_generation},
      {8, "Hankel structure", 60, hankel_structure},
      {9, "inclusion of dual-body points", 120, inclusion},
      {10, "Eisenstein construction", 300, construction},
      {11, "empirical exponent", 300, empirical_exponent},
      {12, "discriminant lower bound", 600, discriminant_bound},
      {13, "Liouville targets", 900, adversarial},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && secs < c.limit;
    if (o.pass && !pass) o.detail += "; over the time limit";
    failures += !pass;
    std::printf("%s %2d %-30s %8.2fs (limit %gs)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
