#include "dioph/gelfond.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "dioph/error.hpp"
#include "dioph/exactnum/factor.hpp"
#include "dioph/exactnum/logs.hpp"
#include "dioph/exactnum/roots.hpp"
#include "dioph/heights.hpp"

namespace dioph {

namespace {

bool vanishes_at(const RatPoly& f, const RealNumber& xi) {
  switch (xi.kind()) {
    case RealNumber::Kind::Rational:
      return f.eval(xi.rational_value()) == 0;
    case RealNumber::Kind::Liouville:
      return false;
    case RealNumber::Kind::Algebraic: {
      RatPoly g = gcd(f, xi.polynomial());
      if (g.degree() < 1) return false;
      for (long bits = 32;; bits *= 2) {
        auto [a, b] = xi.bounds(bits);
        if (a == b) return g.eval(a) == 0;
        if (sturm_count(xi.polynomial(), a, b) == 1) return sturm_count(g, a, b) >= 1;
      }
    }
  }
  return false;
}

// |f(xi)| / |f|_inf as an interval; degenerate for rational xi.
RatInterval relative_value(const RatPoly& f, const RealNumber& xi, long bits) {
  if (vanishes_at(f, xi)) return RatInterval(Rational(0));
  RatInterval v = eval(f, RatInterval::of(xi, bits)).abs();
  Rational norm = f.norm_inf();
  return {v.lo / norm, v.hi / norm};
}

RatInterval exp_interval(const Rational& x) {
  auto [lo, hi] = exp_bounds(x);
  return {lo, hi};
}

}  // namespace

CheckRecord resultant_gap_check(const RatPoly& p, const RatPoly& q, const RealNumber& xi, std::optional<int> n_opt) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant_gap_check needs nonzero polynomials");
  int n = n_opt.value_or(std::max({p.degree(), q.degree(), 1}));
  if (p.degree() > n || q.degree() > n) fail(ErrorCode::DegreeOverflow, "degree exceeds n");
  if (gcd(p, q).degree() > 0) fail(ErrorCode::NotCoprime, "polynomials share a factor");
  Rational c3(factorial(2 * n));
  Rational heights = pow(height_poly(p).value, q.degree()) * pow(height_poly(q).value, p.degree());
  CheckRecord r;
  r.name = "resultant_gap";
  for (long bits = 64;; bits *= 2) {
    RatInterval m = max(relative_value(p, xi, bits), relative_value(q, xi, bits));
    RatInterval total = m * RatInterval(c3 * heights);
    if (total.lo >= 1 || total.hi < 1 || bits > 4 * precision_cap()) {
      r.holds = total.lo >= 1;
      r.data["c3"] = to_json(c3);
      r.data["value_lower"] = to_json(total.lo);
      r.data["value_upper"] = to_json(total.hi);
      if (total.hi < 1) fail(ErrorCode::HardAssertion, "resultant gap inequality violated");
      if (!r.holds) fail(ErrorCode::PrecisionExhausted, "resultant gap undecided at the precision cap");
      return r;
    }
  }
}

const char* to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::Tracking: return "Tracking";
    case ChainStatus::Stabilized: return "Stabilized";
    case ChainStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Json ChainStep::to_json() const {
  return Json{{"X", dioph::to_json(X)},
              {"poly", dioph::to_json(poly)},
              {"selected", dioph::to_json(selected)},
              {"hypothesis", hypothesis},
              {"vanishes", vanishes}};
}

Json FactorChainState::to_json() const {
  Json s = Json::array();
  for (const auto& st : steps) s.push_back(st.to_json());
  Json j{{"xi", xi.to_string()}, {"n", n}, {"status", to_string(status)}, {"steps", s}};
  j["current"] = current ? dioph::to_json(*current) : Json(nullptr);
  return j;
}

FactorChainState factor_chain_step(FactorChainState state, const Rational& X, const RatPoly& p) {
  const int n = state.n;
  if (p.is_zero()) fail(ErrorCode::PreconditionFailed, "P_X must be nonzero");
  if (p.degree() > n) fail(ErrorCode::PreconditionFailed, "deg P_X exceeds n");
  Rational hp = height_poly(p).value;
  if (hp > X) fail(ErrorCode::PreconditionFailed, "H(P_X) exceeds X");
  if (p.degree() > kFactorDegreeCap) fail(ErrorCode::FactorizationCap, "degree above the factorization cap");

  ChainStep step;
  step.X = X;
  step.poly = p;
  const long bits = 128;

  // c4 = e^{2n(n+1)} ((2n)!)^n
  RatInterval c4 = exp_interval(Rational(2 * n * (n + 1))) * RatInterval(pow(Rational(factorial(2 * n)), n));
  RatInterval lhs = relative_value(p, state.xi, bits);
  Rational scale = pow(hp, n) * pow(X, p.degree());
  step.hypothesis = p.degree() >= 1 && lhs.hi * scale * c4.hi <= 1;

  if (p.degree() >= 1) {
    Factorization f = factor_over_rationals(p);
    std::optional<RatPoly> best;
    Rational best_hi;
    bool best_zero = false;
    for (const auto& [fac, mult] : f.factors) {
      (void)mult;
      int d = fac.degree();
      bool zero = vanishes_at(fac, state.xi);
      RatInterval s = relative_value(fac, state.xi, bits) * RatInterval(pow(height_poly(fac).value, n)) *
                      exp_interval(Rational((n + 1) * d)) * RatInterval(pow(X, d));
      if (!best || s.hi < best_hi || (s.hi == best_hi && coeff_less(fac, *best))) {
        best = fac;
        best_hi = s.hi;
        best_zero = zero;
      }
    }
    step.selected = *best;
    step.vanishes = best_zero;
  }

  if (!step.hypothesis) {
    state.status = ChainStatus::Inconclusive;
  } else if (state.status != ChainStatus::Inconclusive) {
    if (state.current && *state.current == step.selected) {
      state.status = ChainStatus::Stabilized;
    } else {
      if (state.current) resultant_gap_check(step.selected, *state.current, state.xi, n);
      state.status = ChainStatus::Tracking;
    }
  }
  if (step.hypothesis) state.current = step.selected;
  state.steps.push_back(step);
  return state;
}

namespace {

using Monomial = std::vector<int>;
using HomPoly = std::map<Monomial, Integer>;

void monomials(int vars, int degree, Monomial& cur, int pos, std::vector<Monomial>& out) {
  if (pos == vars - 1) {
    cur[pos] = degree;
    out.push_back(cur);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[pos] = e;
    monomials(vars, degree - e, cur, pos + 1, out);
  }
}

// Determinant of the k x k submatrix of R(k, l) on `cols`, as a polynomial in x_0..x_l.
void expand_minor(int k, int ell, const std::vector<std::size_t>& cols, int row, std::vector<bool>& used,
                  Monomial& mono, int sign, HomPoly& out) {
  if (row == k) {
    out[mono] += sign;
    return;
  }
  // Sign of the permutation is tracked by counting inversions as columns are chosen.
  int seen_unused = 0;
  for (int c = 0; c < k; ++c) {
    if (used[c]) continue;
    int idx = static_cast<int>(cols[c]) - row;
    if (idx >= 0 && idx <= ell) {
      used[c] = true;
      ++mono[idx];
      expand_minor(k, ell, cols, row + 1, used, mono, (seen_unused % 2) ? -sign : sign, out);
      --mono[idx];
      used[c] = false;
    }
    ++seen_unused;
  }
}

}  // namespace

MinorModule minor_module(int k, int ell) {
  if (k < 1 || ell < 0 || k + ell > 7) fail(ErrorCode::CapExceeded, "minor module generation is capped at k + l <= 7");
  static std::mutex mu;
  static std::map<std::pair<int, int>, MinorModule> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({k, ell});
    if (it != cache.end()) return it->second;
  }
  MinorModule m;
  m.k = k;
  m.ell = ell;
  std::vector<Monomial> monos;
  Monomial cur(ell + 1);
  monomials(ell + 1, k, cur, 0, monos);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;

  std::vector<std::vector<Integer>> rows;
  for_each_combination(k + ell, k, [&](const std::vector<std::size_t>& cols) {
    HomPoly det;
    std::vector<bool> used(k, false);
    Monomial mono(ell + 1, 0);
    expand_minor(k, ell, cols, 0, used, mono, 1, det);
    std::vector<Integer> row(monos.size(), 0);
    for (const auto& [mo, c] : det) row[index.at(mo)] = c;
    rows.push_back(row);
  });
  m.minors_to_monomials = IntMatrix::from_rows(rows);
  IntMatrix u;
  IntMatrix h = hermite_normal_form(m.minors_to_monomials, &u);
  const std::size_t r = monos.size();
  m.generated = h.rows() >= r;
  for (std::size_t i = 0; i < h.rows() && m.generated; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (h(i, j) != (i == j ? 1 : 0)) {
        m.generated = false;
        break;
      }
  auto row_sum = [](const IntMatrix& a) {
    Integer best = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) s += abs(a(i, j));
      best = std::max(best, s);
    }
    return best;
  };
  m.constant = row_sum(m.minors_to_monomials);
  if (m.generated) {
    m.monomials_from_minors = IntMatrix(r, u.cols());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) m.monomials_from_minors(i, j) = u(i, j);
    m.constant = std::max(m.constant, row_sum(m.monomials_from_minors));
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(k, ell), m);
  return m;
}

bool minor_module_generation(int k, int ell) { return minor_module(k, ell).generated; }

Json ProductSpaceHeights::to_json() const {
  return Json{{"height_product_space", dioph::to_json(height_product_space)},
              {"height_power", dioph::to_json(height_power)},
              {"ratio", dioph::to_json(ratio)},
              {"constant", dioph::to_json(constant)},
              {"holds", holds}};
}

ProductSpaceHeights product_space_height_check(const RatPoly& p, int k) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "product_space_height_check needs P != 0");
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  const int ell = p.degree();
  RatMatrix r(k, k + ell);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j <= ell; ++j) r(i, i + j) = p[j];
  ProductSpaceHeights out;
  out.height_product_space = height_matrix(r).value;
  out.height_power = pow(height_poly(p).value, k);
  out.ratio = out.height_product_space / out.height_power;
  MinorModule m = minor_module(k, ell);
  out.constant = m.constant;
  Rational c(m.constant);
  out.holds = m.generated && out.height_power <= c * out.height_product_space &&
              out.height_product_space <= c * out.height_power;
  return out;
}

}  // namespace dioph
