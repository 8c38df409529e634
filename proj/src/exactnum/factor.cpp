#include "dioph/exactnum/factor.hpp"

#include <algorithm>
#include <optional>

#include "dioph/error.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "dioph/exactnum/roots.hpp"

namespace dioph {

bool coeff_less(const RatPoly& a, const RatPoly& b) {
  int m = std::max(a.degree(), b.degree());
  for (int i = 0; i <= m; ++i) {
    Rational x = a[i], y = b[i];
    if (x != y) return x < y;
  }
  return false;
}

RatPoly Factorization::expand() const {
  RatPoly r = RatPoly::constant(leading);
  for (const auto& [f, e] : factors) r *= pow(f, e);
  return r;
}

namespace {

// Integer nearest to the ball midpoint when the ball is a plausible integer.
// Sets `loose` when the ball is too wide to exclude a second integer.
bool integer_candidate(const DyadicBall& b, Integer& out, bool& loose) {
  Rational lo = b.lower().to_rational(), hi = b.upper().to_rational();
  if (ceil(lo) > floor(hi)) return false;
  out = round_nearest(b.mid().to_rational());
  if (hi - lo >= 1) loose = true;
  return true;
}

// Irreducible factors of a squarefree integer polynomial by recombining certified roots.
std::vector<RatPoly> factor_squarefree(const RatPoly& sqf) {
  RatPoly whole = sqf.primitive();
  if (whole.degree() <= 1) return {whole.monic()};
  long cap = std::max<long>(4 * precision_cap(), 2048);
  for (long bits = 64; bits <= cap; bits *= 2) {
    auto disks = certified_complex_roots(whole, bits);
    std::vector<ComplexBall> roots;
    for (const auto& d : disks) roots.push_back(d.ball());
    RatPoly rest = whole;
    std::vector<int> remaining(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) remaining[i] = static_cast<int>(i);
    std::vector<RatPoly> found;
    bool loose_any = false;

    for (std::size_t d = 1; 2 * d <= remaining.size(); ++d) {
      bool restart = true;
      while (restart) {
        restart = false;
        if (2 * d > remaining.size()) break;
        Integer a = rest.primitive().leading().get_num();
        for_each_combination(remaining.size(), d, [&](const std::vector<std::size_t>& pick) {
          if (restart) return;
          std::vector<ComplexBall> prod{ComplexBall(DyadicBall(Dyadic(Integer(a), 0)))};
          for (auto idx : pick) {
            const ComplexBall& r = roots[remaining[idx]];
            std::vector<ComplexBall> next(prod.size() + 1);
            for (std::size_t k = 0; k < prod.size(); ++k) {
              next[k + 1] = next[k + 1] + prod[k];
              next[k] = next[k] - prod[k] * r;
            }
            prod = next;
          }
          std::vector<Integer> coeffs;
          bool loose = false;
          for (const auto& c : prod) {
            if (!c.im.contains_zero()) return;
            Integer z;
            if (!integer_candidate(c.re, z, loose)) return;
            coeffs.push_back(z);
          }
          RatPoly g = RatPoly::from_integers(coeffs);
          RatPoly q;
          if (g.degree() == static_cast<int>(d) && divides(g, rest, &q)) {
            found.push_back(g.monic());
            rest = q.primitive();
            std::vector<int> keep;
            for (std::size_t i = 0; i < remaining.size(); ++i)
              if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
            remaining = keep;
            restart = true;
          } else if (loose) {
            loose_any = true;
          }
        });
      }
    }
    if (loose_any) continue;
    if (rest.degree() >= 1) found.push_back(rest.monic());
    return found;
  }
  fail(ErrorCode::PrecisionExhausted, "factor recombination did not resolve for " + sqf.to_string());
}

}  // namespace

Factorization factor_over_rationals(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "factorization of zero");
  if (p.degree() > kFactorDegreeCap)
    fail(ErrorCode::DegreeCapExceeded, "degree " + std::to_string(p.degree()) + " exceeds the factorization cap 8");
  Factorization out;
  out.leading = p.leading();
  if (p.degree() == 0) return out;
  for (const auto& [s, e] : squarefree_decomposition(p))
    for (auto& f : factor_squarefree(s)) out.factors.emplace_back(f, e);
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return coeff_less(x.first, y.first);
  });
  return out;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& v) {
  std::vector<Integer> ds;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      ds.push_back(d);
      if (d * d != v) ds.push_back(v / d);
    }
  return ds;
}

// Degree 2 and 3 are reducible exactly when a rational root exists.
std::optional<bool> small_degree_irreducible(const RatPoly& p) {
  auto c = p.primitive().integer_coeffs();
  if (c[0] == 0) return false;
  if (p.degree() == 2) {
    Integer d = c[1] * c[1] - 4 * c[0] * c[2];
    if (d < 0) return true;
    Integer s = sqrt(d);
    return s * s != d;
  }
  const Integer limit = Integer(1) << 40;
  if (abs(c[0]) > limit || abs(c[3]) > limit) return std::nullopt;
  for (const Integer& a : positive_divisors(abs(c[0])))
    for (const Integer& b : positive_divisors(c[3]))
      for (int sg : {1, -1}) {
        Integer u = sg * a;
        // b^3 P(u/b) = c3 u^3 + c2 u^2 b + c1 u b^2 + c0 b^3.
        if (c[3] * u * u * u + c[2] * u * u * b + c[1] * u * b * b + c[0] * b * b * b == 0) return false;
      }
  return true;
}

}  // namespace

bool is_irreducible(const RatPoly& p) {
  if (p.degree() < 1) return false;
  if (p.degree() == 1) return true;
  if (p.degree() <= 3)
    if (auto r = small_degree_irreducible(p)) return *r;
  auto f = factor_over_rationals(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace dioph
