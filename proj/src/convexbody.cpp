#include "dioph/convexbody.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "dioph/error.hpp"
#include "dioph/exactnum/matrix.hpp"

namespace dioph {

void BodySpec::validate() const {
  if (n < 0) fail(ErrorCode::InvalidArgument, "n must be nonnegative");
  if (static_cast<int>(X.size()) != n + 1)
    fail(ErrorCode::InvalidArgument, "expected " + std::to_string(n + 1) + " values X_j, got " + std::to_string(X.size()));
  for (const auto& x : X)
    if (x <= 0) fail(ErrorCode::InvalidArgument, "X_j must be positive");
}

Json MinimaResult::to_json() const {
  Json w = Json::array();
  for (const auto& p : witnesses) w.push_back(dioph::to_json(p));
  Json j{{"lambdas", dioph::to_json(lambdas)}, {"witnesses", w}, {"exhaustive", exhaustive}};
  if (!exhaustive) j["lambdas_lower"] = dioph::to_json(lambdas_lower);
  return j;
}

Rational mu_exact(const RatPoly& p, const BodySpec& body) {
  body.validate();
  const Rational& xi = body.xi.rational_value();
  Rational m = 0;
  RatPoly d = p;
  for (int j = 0; j <= body.n; ++j) {
    m = std::max<Rational>(m, abs(d.eval(xi)) / body.X[j]);
    d = d.derivative();
  }
  return m;
}

std::pair<Rational, Rational> mu_bounds(const RatPoly& p, const BodySpec& body, long bits) {
  if (body.xi.is_rational()) {
    Rational m = mu_exact(p, body);
    return {m, m};
  }
  body.validate();
  Rational lo = 0, hi = 0;
  RatPoly d = p;
  for (int j = 0; j <= body.n; ++j) {
    DyadicBall v = eval_at(d, body.xi, bits).abs();
    Rational vl = v.lower().to_rational(), vh = v.upper().to_rational();
    lo = std::max<Rational>(lo, std::max<Rational>(vl, 0) / body.X[j]);
    hi = std::max<Rational>(hi, vh / body.X[j]);
    d = d.derivative();
  }
  return {lo, hi};
}

bool membership(const RatPoly& p, const BodySpec& body, const Rational& lambda) {
  body.validate();
  if (!p.has_integer_coeffs()) fail(ErrorCode::NonIntegerCoefficients, "membership needs integer coefficients");
  if (p.degree() > body.n) return false;
  if (body.xi.is_rational()) return mu_exact(p, body) <= lambda;
  for (long bits = 64; bits <= 4 * precision_cap(); bits *= 2) {
    auto [lo, hi] = mu_bounds(p, body, bits);
    if (hi <= lambda) return true;
    if (lo > lambda) return false;
  }
  fail(ErrorCode::PrecisionExhausted, "membership undecided at the precision cap");
}

Rational volume(const BodySpec& body) {
  body.validate();
  Rational v = pow(Rational(2), body.n + 1);
  for (int j = 0; j <= body.n; ++j) v *= body.X[j] / Rational(factorial(j));
  return v;
}

namespace {

// Flat storage of sign-normalized integer points.
struct PointSet {
  int dim = 0;
  std::vector<long> coeffs;
  std::vector<Integer> key;       // exact: mu * key_den
  std::vector<Rational> lo, hi;   // certified bounds otherwise
  std::size_t size() const { return dim ? coeffs.size() / dim : 0; }
  const long* at(std::size_t i) const { return coeffs.data() + i * dim; }
};

struct Enumerator {
  int n = 0;
  bool exact = true;
  Integer p, q;
  std::vector<Integer> qpow;
  std::vector<std::vector<Integer>> coef;
  std::vector<Rational> radius;
  std::vector<Integer> rfloor;
  std::vector<std::vector<Rational>> errc;
  std::vector<Rational> weight;  // j! / (X_j q^{n-j})
  std::vector<Integer> wnum;
  Integer wden = 1;
  std::vector<Rational> deriv_scale;  // j! / X_j
  std::vector<Integer> a, C;
  std::vector<Rational> err;
  std::size_t limit = 0;
  PointSet* out = nullptr;

  void setup(const BodySpec& body, const Rational& bound) {
    n = body.n;
    exact = body.xi.is_rational();
    Rational center, e = 0;
    if (exact) {
      center = body.xi.rational_value();
    } else {
      auto [lo, hi] = body.xi.bounds(96);
      center = (lo + hi) / 2;
      e = (hi - lo) / 2;
    }
    p = center.get_num();
    q = center.get_den();
    qpow.assign(n + 1, 1);
    for (int j = n - 1; j >= 0; --j) qpow[j] = qpow[j + 1] * q;
    coef.assign(n + 1, std::vector<Integer>(n + 1));
    for (int j = 0; j <= n; ++j)
      for (int i = j + 1; i <= n; ++i) coef[j][i] = binomial(i, j) * pow(p, i - j) * qpow[i];
    radius.resize(n + 1);
    rfloor.resize(n + 1);
    deriv_scale.resize(n + 1);
    weight.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      Rational jf(factorial(j));
      radius[j] = bound * body.X[j] / jf;
      rfloor[j] = floor(radius[j] * qpow[j]);
      deriv_scale[j] = jf / body.X[j];
      weight[j] = deriv_scale[j] / qpow[j];
    }
    if (exact) {
      wden = 1;
      for (const auto& w : weight) mpz_lcm(wden.get_mpz_t(), wden.get_mpz_t(), w.get_den_mpz_t());
      wnum.resize(n + 1);
      for (int j = 0; j <= n; ++j) wnum[j] = Rational(weight[j] * wden).get_num();
    } else {
      // |xi^k - c^k| <= k (|c| + e)^{k-1} e on [c - e, c + e].
      Rational m = abs(center) + e;
      std::vector<Rational> delta(n + 1, Rational(0));
      for (int k = 1; k <= n; ++k) delta[k] = Rational(k) * pow(m, k - 1) * e;
      errc.assign(n + 1, std::vector<Rational>(n + 1, Rational(0)));
      for (int j = 0; j <= n; ++j)
        for (int i = j + 1; i <= n; ++i) errc[j][i] = Rational(binomial(i, j)) * delta[i - j];
    }
    a.assign(n + 1, 0);
    C.assign(n + 1, 0);
    err.assign(n + 1, Rational(0));
  }

  void leaf() {
    if (out->size() >= limit) fail(ErrorCode::CapExceeded, "lattice enumeration exceeded " + std::to_string(limit) + " points");
    for (int j = 0; j <= n; ++j) {
      if (!a[j].fits_slong_p()) fail(ErrorCode::CapExceeded, "coefficient out of range");
      out->coeffs.push_back(a[j].get_si());
    }
    if (exact) {
      Integer best = 0, t;
      for (int j = 0; j <= n; ++j) {
        t = abs(C[j]) * wnum[j];
        if (t > best) best = t;
      }
      out->key.push_back(best);
    } else {
      Rational lo = 0, hi = 0;
      for (int j = 0; j <= n; ++j) {
        Rational c = abs(Rational(C[j], qpow[j]));
        c.canonicalize();
        lo = std::max<Rational>(lo, std::max<Rational>(c - err[j], 0) * deriv_scale[j]);
        hi = std::max<Rational>(hi, (c + err[j]) * deriv_scale[j]);
      }
      out->lo.push_back(lo);
      out->hi.push_back(hi);
    }
  }

  void dfs(int j, bool zero_above) {
    if (j < 0) {
      if (!zero_above) leaf();
      return;
    }
    Integer S = 0;
    for (int i = j + 1; i <= n; ++i)
      if (a[i] != 0) S += a[i] * coef[j][i];
    Integer R;
    if (exact) {
      R = rfloor[j];
    } else {
      Rational e = 0;
      for (int i = j + 1; i <= n; ++i)
        if (a[i] != 0) e += abs(Rational(a[i])) * errc[j][i];
      err[j] = e;
      R = floor((radius[j] + e) * qpow[j]);
    }
    Integer lo, hi, num;
    num = -R - S;
    mpz_cdiv_q(lo.get_mpz_t(), num.get_mpz_t(), qpow[j].get_mpz_t());
    num = R - S;
    mpz_fdiv_q(hi.get_mpz_t(), num.get_mpz_t(), qpow[j].get_mpz_t());
    if (zero_above && lo < 0) lo = 0;
    for (Integer v = lo; v <= hi; ++v) {
      a[j] = v;
      C[j] = v * qpow[j] + S;
      dfs(j - 1, zero_above && v == 0);
    }
    a[j] = 0;
  }
};

PointSet enumerate_points(const BodySpec& body, const Rational& bound, std::size_t limit) {
  PointSet ps;
  ps.dim = body.n + 1;
  Enumerator en;
  en.setup(body, bound);
  en.limit = limit;
  en.out = &ps;
  en.dfs(body.n, true);
  return ps;
}

// Tie order among equal mu: smaller absolute values from the top degree down, then smaller values.
bool tie_less(const long* x, const long* y, int dim) {
  for (int i = dim - 1; i >= 0; --i) {
    long ax = std::labs(x[i]), ay = std::labs(y[i]);
    if (ax != ay) return ax < ay;
  }
  for (int i = dim - 1; i >= 0; --i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

// Incremental linear independence test through an integer basis of the orthogonal complement.
class SpanTester {
 public:
  explicit SpanTester(int dim) : dim_(dim) {}
  int rank() const { return static_cast<int>(picks_.size()); }

  bool independent(const long* v) const {
    if (picks_.empty()) return true;
    Integer dot;
    for (const auto& c : comp_) {
      dot = 0;
      for (int i = 0; i < dim_; ++i)
        if (v[i] != 0) mpz_addmul_si_(dot, c[i], v[i]);
      if (dot != 0) return true;
    }
    return false;
  }

  void add(const long* v) {
    std::vector<Rational> row(v, v + dim_);
    picks_.push_back(row);
    RatMatrix m = RatMatrix::from_rows(picks_);
    comp_.clear();
    for (const auto& k : kernel_basis(m)) {
      std::vector<Integer> zi;
      for (const auto& x : k) zi.push_back(x.get_num());
      comp_.push_back(zi);
    }
  }

 private:
  static void mpz_addmul_si_(Integer& acc, const Integer& c, long v) {
    if (v >= 0)
      mpz_addmul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(v));
    else
      mpz_submul_ui(acc.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-v));
  }
  int dim_;
  std::vector<std::vector<Rational>> picks_;
  std::vector<std::vector<Integer>> comp_;
};

RatPoly to_poly(const long* a, int dim) {
  std::vector<Rational> v(a, a + dim);
  return RatPoly(v, dim - 1);
}

// Greedy selection over `order`; returns picked indices.
std::vector<std::size_t> greedy(const PointSet& ps, const std::vector<std::size_t>& order, int want) {
  SpanTester span(ps.dim);
  std::vector<std::size_t> picks;
  for (auto idx : order) {
    if (span.rank() == want) break;
    if (span.independent(ps.at(idx))) {
      span.add(ps.at(idx));
      picks.push_back(idx);
    }
  }
  return picks;
}

Rational start_bound(const BodySpec& body) {
  // lambda_{n+1} >= (2^{n+1} / ((n+1)! Vol))^{1/(n+1)}.
  double target = std::pow(2.0, body.n + 1) / (std::tgamma(body.n + 2.0) * volume(body).get_d());
  double s = std::pow(target, 1.0 / (body.n + 1)) * 0.99;
  if (!(s > 0) || !std::isfinite(s)) s = 1e-6;
  Rational r(s);
  return r;
}

}  // namespace

std::vector<BodyPoint> enumerate_body(const BodySpec& body, const Rational& bound, std::size_t limit) {
  body.validate();
  PointSet ps = enumerate_points(body, bound, limit);
  std::vector<BodyPoint> out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    BodyPoint bp;
    bp.poly = to_poly(ps.at(i), ps.dim);
    if (ps.key.size() > i) {
      bp.mu_lo = bp.mu_hi = mu_exact(bp.poly, body);
    } else {
      bp.mu_lo = ps.lo[i];
      bp.mu_hi = ps.hi[i];
    }
    if (bp.mu_lo <= bound) out.push_back(std::move(bp));
  }
  return out;
}

MinimaResult successive_minima(const BodySpec& body) {
  body.validate();
  if (body.n > kMinimaDimensionCap)
    fail(ErrorCode::DimensionCap, "exhaustive minima are capped at n = " + std::to_string(kMinimaDimensionCap));
  const int want = body.n + 1;
  Rational bound = start_bound(body);
  MinimaResult res;
  res.exhaustive = body.xi.is_rational();
  while (true) {
    PointSet ps = enumerate_points(body, bound, 20000000);
    std::vector<std::size_t> order(ps.size());
    std::iota(order.begin(), order.end(), 0);
    if (res.exhaustive) {
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        int c = cmp(ps.key[x], ps.key[y]);
        if (c != 0) return c < 0;
        return tie_less(ps.at(x), ps.at(y), ps.dim);
      });
      auto picks = greedy(ps, order, want);
      if (static_cast<int>(picks.size()) == want) {
        for (auto idx : picks) {
          RatPoly w = to_poly(ps.at(idx), ps.dim);
          res.witnesses.push_back(w);
          res.lambdas.push_back(mu_exact(w, body));
        }
        res.lambdas_lower = res.lambdas;
        return res;
      }
    } else {
      std::vector<std::size_t> upper;
      for (auto idx : order)
        if (ps.hi[idx] <= bound) upper.push_back(idx);
      auto by = [&](const std::vector<Rational>& key) {
        return [&](std::size_t x, std::size_t y) {
          int c = cmp(key[x], key[y]);
          if (c != 0) return c < 0;
          return tie_less(ps.at(x), ps.at(y), ps.dim);
        };
      };
      std::sort(upper.begin(), upper.end(), by(ps.hi));
      auto picks = greedy(ps, upper, want);
      if (static_cast<int>(picks.size()) == want) {
        Rational run = 0;
        for (auto idx : picks) {
          res.witnesses.push_back(to_poly(ps.at(idx), ps.dim));
          run = std::max(run, ps.hi[idx]);
          res.lambdas.push_back(run);
        }
        std::sort(order.begin(), order.end(), by(ps.lo));
        auto lower = greedy(ps, order, want);
        Rational lrun = 0;
        for (auto idx : lower) {
          lrun = std::max(lrun, ps.lo[idx]);
          res.lambdas_lower.push_back(lrun);
        }
        return res;
      }
    }
    bound *= ps.size() == 0 ? Rational(2) : Rational(5, 4);
  }
}

bool first_minimum_condition(const BodySpec& body, const Rational& kappa) {
  if (kappa <= 0) fail(ErrorCode::InvalidArgument, "kappa must be positive");
  bool cond = volume(body) >= pow(Rational(2) / kappa, body.n + 1);
  if (cond && body.xi.is_rational() && body.n <= kMinimaDimensionCap) {
    auto pts = enumerate_body(body, kappa);
    if (pts.empty()) fail(ErrorCode::HardAssertion, "volume condition holds but lambda_1 > kappa");
  }
  return cond;
}

CheckRecord minkowski_product_check(const MinimaResult& res, const BodySpec& body) {
  CheckRecord r;
  r.name = "minkowski_product";
  if (!res.exhaustive) fail(ErrorCode::PreconditionFailed, "Minkowski check needs exact minima");
  Rational prod = volume(body);
  for (const auto& l : res.lambdas) prod *= l;
  Rational upper = pow(Rational(2), body.n + 1);
  Rational lower = upper / Rational(factorial(body.n + 1));
  r.holds = lower <= prod && prod <= upper;
  r.data["product"] = to_json(prod);
  r.data["lower"] = to_json(lower);
  r.data["upper"] = to_json(upper);
  return r;
}

std::vector<Rational> dual_tuple(const std::vector<Rational>& X) {
  std::vector<Rational> Y(X.size());
  for (std::size_t j = 0; j < X.size(); ++j) {
    const Rational& x = X[X.size() - 1 - j];
    if (x <= 0) fail(ErrorCode::InvalidArgument, "X_j must be positive");
    Y[j] = 1 / x;
  }
  return Y;
}

CheckRecord duality_products(const BodySpec& body, const MinimaResult& mx, const MinimaResult& my) {
  CheckRecord r;
  r.name = "duality_products";
  int n = body.n;
  Rational floor_value = Rational(1) / Rational(factorial(n + 1));
  Json prods = Json::array();
  Rational lo_min, hi_max;
  for (int i = 1; i <= n + 1; ++i) {
    Rational lo = mx.lambdas_lower[i - 1] * my.lambdas_lower[n + 1 - i];
    Rational hi = mx.lambdas[i - 1] * my.lambdas[n + 1 - i];
    if (i == 1 || lo < lo_min) lo_min = lo;
    if (i == 1 || hi > hi_max) hi_max = hi;
    if (!(lo >= floor_value)) r.holds = false;
    prods.push_back(to_json(hi));
  }
  r.data["products"] = prods;
  r.data["min_product"] = to_json(lo_min);
  r.data["max_product"] = to_json(hi_max);
  r.data["lower_bound"] = to_json(floor_value);
  return r;
}

CheckRecord duality_products(const BodySpec& body) {
  BodySpec dual{body.n, body.xi, dual_tuple(body.X)};
  auto mx = successive_minima(body);
  auto my = successive_minima(dual);
  return duality_products(body, mx, my);
}

}  // namespace dioph
