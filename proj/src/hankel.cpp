#include "dioph/hankel.hpp"

#include <algorithm>
#include <functional>

#include "dioph/error.hpp"
#include "dioph/exactnum/factor.hpp"
#include "dioph/exactnum/logs.hpp"
#include "dioph/gelfond.hpp"
#include "dioph/heights.hpp"

namespace dioph {

namespace {

void check_degrees(const RatPoly& p, const RatPoly& q, int n) {
  if (p.degree() > n || q.degree() > n) fail(ErrorCode::DegreeOverflow, "degree exceeds n");
}

RatPoly integer_poly(const std::vector<Rational>& v, int ambient) { return RatPoly(v, ambient); }

bool in_kernel(const RatMatrix& m, const RatPoly& g) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * g[static_cast<int>(j)];
    if (s != 0) return false;
  }
  return g.degree() < static_cast<int>(m.cols());
}

using IntervalMatrix = std::vector<std::vector<RatInterval>>;

RatInterval interval_det(const IntervalMatrix& a, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
  std::size_t r = rows.size();
  if (r == 1) return a[rows[0]][cols[0]];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  RatInterval acc(Rational(0));
  for (std::size_t j = 0; j < r; ++j) {
    const RatInterval& e = a[rows[0]][cols[j]];
    if (e.exact() && e.lo == 0) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t c = 0; c < r; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    RatInterval term = e * interval_det(a, sub_rows, sub_cols);
    acc = (j % 2) ? acc - term : acc + term;
  }
  return acc;
}

IntervalMatrix hankel_intervals(const std::vector<RatInterval>& z, int ell, int n, int first_col = 0) {
  IntervalMatrix m(ell + 1);
  for (int i = 0; i <= ell; ++i)
    for (int j = first_col; j <= n - ell; ++j) m[i].push_back(z[i + j]);
  return m;
}

// Max |maximal minor| as an interval: [max of lower bounds of |minor|, max of upper bounds].
RatInterval interval_norm(const IntervalMatrix& m) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::vector<std::size_t> all_rows(rows);
  for (std::size_t i = 0; i < rows; ++i) all_rows[i] = i;
  RatInterval best(Rational(0));
  for_each_combination(cols, rows, [&](const std::vector<std::size_t>& c) {
    best = max(best, interval_det(m, all_rows, c).abs());
  });
  return best;
}

std::size_t interval_rank_lower(const IntervalMatrix& m, std::size_t upper) {
  std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  for (std::size_t r = std::min({upper, rows, cols}); r > 0; --r) {
    bool found = false;
    for_each_combination(rows, r, [&](const std::vector<std::size_t>& rs) {
      if (found) return;
      for_each_combination(cols, r, [&](const std::vector<std::size_t>& cs) {
        if (!found && !interval_det(m, rs, cs).contains_zero()) found = true;
      });
    });
    if (found) return r;
  }
  return 0;
}

Rational abs_bound(const RealNumber& xi) { return xi.is_rational() ? abs(xi.rational_value()) : xi.abs_upper(); }

Rational c5_const(int ell, int n) { return Rational(factorial(ell + 1)) * pow(Rational(factorial(n)), ell + 1); }

Rational c7_const(int ell, int n, const Rational& absxi) {
  return Rational(binomial(n - ell + 1, ell + 1)) * pow(1 + absxi, (n - ell) * (ell + 1));
}

Rational norm_ratio_c(int deg, const Rational& absxi) { return Rational(deg + 1) * pow(1 + absxi, std::max(deg, 0)); }

RatInterval relative_value(const RatPoly& p, const RealNumber& xi, long bits) {
  RatInterval v = eval(p, RatInterval::of(xi, bits)).abs();
  Rational norm = p.norm_inf();
  return {v.lo / norm, v.hi / norm};
}

RatInterval ipow(const RatInterval& x, int e) {
  RatInterval r(Rational(1));
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

void require_nondecreasing(const std::vector<Rational>& X) {
  for (std::size_t j = 0; j + 1 < X.size(); ++j)
    if (X[j] > X[j + 1]) fail(ErrorCode::PreconditionFailed, "X must be nondecreasing");
}

void require_member(const RatPoly& q, const BodySpec& body, const char* what) {
  if (!q.has_integer_coeffs()) fail(ErrorCode::PreconditionFailed, std::string(what) + " needs integer coefficients");
  if (!membership(q, body, 1)) fail(ErrorCode::PreconditionFailed, std::string(what) + " is not in the convex body");
}

}  // namespace

Rational bilinear_g(const RatPoly& p, const RatPoly& q, int n, const Rational& a) {
  check_degrees(p, q, n);
  Rational s = 0;
  for (int j = 0; j <= n; ++j) {
    Rational term = p.derivative(j).eval(a) * q.derivative(n - j).eval(a);
    s += (j % 2) ? -term : term;
  }
  return s;
}

RatInterval bilinear_g(const RatPoly& p, const RatPoly& q, int n, const RealNumber& xi, long bits) {
  check_degrees(p, q, n);
  RatInterval x = RatInterval::of(xi, bits);
  RatInterval s(Rational(0));
  for (int j = 0; j <= n; ++j) {
    RatInterval term = eval(p.derivative(j), x) * eval(q.derivative(n - j), x);
    s = (j % 2) ? s - term : s + term;
  }
  return s;
}

CheckRecord pairing_bound_check(const RatPoly& p, const RatPoly& q, const RealNumber& xi,
                                const std::vector<Rational>& X, const std::vector<Rational>& Y) {
  if (X.size() != Y.size() || X.empty()) fail(ErrorCode::InvalidArgument, "X and Y must have the same length n+1");
  int n = static_cast<int>(X.size()) - 1;
  require_member(p, BodySpec{n, xi, X}, "P");
  require_member(q, BodySpec{n, xi, Y}, "Q");
  Rational g = bilinear_g(p, q, n);
  Rational m = 0;
  for (int j = 0; j <= n; ++j) m = std::max<Rational>(m, X[j] * Y[n - j]);
  Rational bound = Rational(factorial(n + 1)) * m;
  CheckRecord r;
  r.name = "pairing_bound";
  r.data["g"] = to_json(g);
  r.data["bound"] = to_json(bound);
  r.data["vacuous"] = g == 0;
  r.holds = g == 0 || bound >= 1;
  if (!r.holds) fail(ErrorCode::HardAssertion, "pairing bound violated for a nonzero pairing");
  return r;
}

RatMatrix HankelState::M(int ell) const {
  RatMatrix m(ell + 1, n - ell + 1);
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= n - ell; ++j) m(i, j) = y[i + j];
  return m;
}

RatMatrix HankelState::N(int ell) const {
  if (!xi.is_rational()) fail(ErrorCode::InvalidArgument, "exact N_l needs rational xi");
  RatMatrix m(ell + 1, n - ell + 1);
  for (int i = 0; i <= ell; ++i)
    for (int j = 0; j <= n - ell; ++j) m(i, j) = z[i + j].lo;
  return m;
}

Json HankelState::to_json() const {
  Json ranks_j = Json::array(), ranks_n = Json::array();
  for (auto r : ranks) ranks_j.push_back(r);
  for (auto r : ranks_N) ranks_n.push_back(r);
  return Json{{"n", n},
              {"Q", dioph::to_json(Q)},
              {"xi", xi.to_string()},
              {"y", dioph::to_json(y)},
              {"ranks_M", ranks_j},
              {"ranks_N_lower", ranks_n}};
}

HankelState build_state(const RatPoly& Q, const RealNumber& xi, int n, long bits) {
  if (Q.is_zero()) fail(ErrorCode::ZeroPolynomial, "Q must be nonzero");
  if (Q.degree() > n) fail(ErrorCode::DegreeOverflow, "deg Q exceeds n");
  HankelState s;
  s.n = n;
  s.Q = Q;
  s.xi = xi;
  RatInterval x = RatInterval::of(xi, bits);
  for (int i = 0; i <= n; ++i) {
    RatPoly d = Q.derivative(n - i);
    Rational f(factorial(i));
    if (i % 2) f = -f;
    s.y.push_back(f * d.eval(0));
    s.z.push_back(eval(d, x) * RatInterval(f));
  }
  for (int ell = 0; ell <= n; ++ell) {
    RatMatrix m = s.M(ell);
    s.ranks.push_back(rank(m));
    if (!(s.M(n - ell) == m.transpose())) fail(ErrorCode::HardAssertion, "M_{n-l} differs from the transpose of M_l");
    if (xi.is_rational()) {
      s.ranks_N.push_back(rank(s.N(ell)));
      if (s.ranks_N.back() != s.ranks.back()) fail(ErrorCode::HardAssertion, "rank(M_l) != rank(N_l)");
    } else {
      s.ranks_N.push_back(interval_rank_lower(hankel_intervals(s.z, ell, n), s.ranks.back()));
    }
  }
  return s;
}

KernelSpace kernel_V(const HankelState& s, int ell) {
  if (ell < 0 || ell > s.n) fail(ErrorCode::InvalidArgument, "l out of range");
  KernelSpace k;
  k.ell = ell;
  RatMatrix m = s.M(ell);
  k.rank = s.ranks[ell];
  auto ker = kernel_basis(m);
  for (const auto& v : ker) k.basis.push_back(integer_poly(v, s.n - ell));
  if (k.basis.size() + k.rank != static_cast<std::size_t>(s.n - ell + 1))
    fail(ErrorCode::HardAssertion, "dim V_l + rank M_l != n - l + 1");
  if (k.rank == static_cast<std::size_t>(ell + 1) && !ker.empty()) {
    Rational hv = height_matrix(RatMatrix::from_rows(ker)).value;
    Rational hm = height_matrix(m).value;
    if (hv != hm) fail(ErrorCode::HardAssertion, "H(V_l) != H(M_l)");
    k.height = hv;
  }
  return k;
}

RankDrop rank_drop_extract(const HankelState& s, int k) {
  if (k < 1 || 2 * k > s.n) fail(ErrorCode::InvalidArgument, "need 1 <= k <= n/2");
  for (int h = 1; h <= k; ++h) {
    if (s.ranks[h - 1] != static_cast<std::size_t>(h) || s.ranks[h] > static_cast<std::size_t>(h)) continue;
    auto ker = kernel_basis(s.M(s.n - h));
    if (ker.empty()) fail(ErrorCode::HardAssertion, "V_{n-h} is zero at a rank drop");
    RankDrop rd;
    rd.h = h;
    rd.P = integer_poly(ker.front(), h).primitive();
    // P E_{n-2h+1} = V_{h-1}
    std::vector<std::vector<Rational>> prod;
    for (int i = 0; i <= s.n - 2 * h + 1; ++i) prod.push_back((RatPoly::monomial(i) * rd.P).vector(s.n - h + 1));
    auto vk = kernel_basis(s.M(h - 1));
    if (vk.empty() || !same_row_space(RatMatrix::from_rows(prod), RatMatrix::from_rows(vk)))
      fail(ErrorCode::HardAssertion, "P E_{n-2h+1} differs from V_{h-1}");
    for (const auto& v : vk)
      if (!divides(rd.P, RatPoly(v))) fail(ErrorCode::HardAssertion, "P does not divide V_{h-1}");
    return rd;
  }
  fail(ErrorCode::NoRankDrop, "M_l has full row rank for every l <= k");
}

CheckRecord ratio_bound_check(const HankelState& s, int ell, int t, const RatPoly& P, const std::vector<Rational>& X) {
  const int n = s.n;
  if (ell < 0 || 2 * ell >= n) fail(ErrorCode::PreconditionFailed, "need 0 <= l < n/2");
  if (t < 1 || t > n - 2 * ell) fail(ErrorCode::PreconditionFailed, "need 1 <= t <= n - 2l");
  if (P.is_zero()) fail(ErrorCode::PreconditionFailed, "P must be nonzero");
  if (static_cast<int>(X.size()) != n + 1) fail(ErrorCode::PreconditionFailed, "X must have n+1 entries");
  if (s.ranks_N[ell] != static_cast<std::size_t>(ell + 1))
    fail(ErrorCode::PreconditionFailed, "N_l does not have certified rank l+1");
  RatMatrix m = s.M(ell);
  for (int i = 0; i < t; ++i)
    if (!in_kernel(m, RatPoly::monomial(i) * P)) fail(ErrorCode::PreconditionFailed, "P E_{t-1} is not inside V_l");
  require_member(s.Q, BodySpec{n, s.xi, X}, "Q");

  const long bits = 128;
  Rational absxi = abs_bound(s.xi);
  Rational c = norm_ratio_c(P.degree(), absxi);
  Rational ct = pow(c, t);
  RatInterval lhs = ipow(relative_value(P, s.xi, bits), t);
  RatInterval norm_n = interval_norm(hankel_intervals(s.z, ell, n));
  RatInterval norm_tail = interval_norm(hankel_intervals(s.z, ell, n, t));
  Rational xprod = 1, xstated = 1;
  for (int i = 0; i <= ell; ++i) {
    Rational rowmax = 0;
    for (int m2 = i + t; m2 <= i + n - ell; ++m2) rowmax = std::max(rowmax, X[n - m2]);
    xprod *= rowmax;
    xstated *= X[n - t - i];
  }
  Rational C = ct * c5_const(ell, n);
  CheckRecord r;
  r.name = "ratio_bound";
  bool direct = norm_n.lo > 0 && lhs.hi * norm_n.hi <= ct * norm_tail.lo;
  bool bound = norm_n.lo > 0 && lhs.hi * norm_n.lo <= C * xprod;
  r.holds = direct && bound;
  r.data["c"] = to_json(c);
  r.data["C"] = to_json(C);
  r.data["lhs_upper"] = to_json(lhs.hi);
  r.data["norm_N_lower"] = to_json(norm_n.lo);
  r.data["norm_N_tail_upper"] = to_json(norm_tail.hi);
  r.data["X_product"] = to_json(xprod);
  r.data["X_product_stated"] = to_json(xstated);
  if (norm_n.lo > 0) r.data["ratio"] = to_json(lhs.hi * norm_n.hi / (C * xprod));
  if (!r.holds && s.xi.is_rational()) fail(ErrorCode::HardAssertion, "ratio bound violated");
  return r;
}

Json DivisorReport::to_json() const {
  Json c = Json::array();
  for (const auto& ch : checks) c.push_back(ch.to_json());
  Json j{{"status", status}, {"premise", premise}, {"h", h}, {"P", dioph::to_json(P)}};
  j["factor"] = factor ? dioph::to_json(*factor) : Json(nullptr);
  j["constants"] = constants;
  j["checks"] = c;
  return j;
}

DivisorReport construct_divisor(const BodySpec& body, const RatPoly& Q, int k, int t) {
  body.validate();
  const int n = body.n;
  if (k < 1 || 2 * k > n) fail(ErrorCode::PreconditionFailed, "need 1 <= k <= n/2");
  if (t < 1 || t > n + 2 - 2 * k) fail(ErrorCode::PreconditionFailed, "need 1 <= t <= n + 2 - 2k");
  require_nondecreasing(body.X);
  if (!(body.X[n - t] < 1) || body.X[n - t + 1] < 1)
    fail(ErrorCode::PreconditionFailed, "need X_{n-t} < 1 <= X_{n-t+1}");
  if (Q.is_zero()) fail(ErrorCode::PreconditionFailed, "Q must be nonzero");
  require_member(Q, body, "Q");

  DivisorReport rep;
  const Rational delta = body.X[n - t];
  Rational Y = 1;
  for (int j = n - t + 1; j <= n; ++j) Y *= body.X[j];
  Rational absxi = abs_bound(body.xi);
  Rational c57 = 0;
  for (int ell = 0; ell <= k; ++ell) c57 = std::max<Rational>(c57, c5_const(ell, n) * c7_const(ell, n, absxi));
  rep.premise = Y * pow(delta, k + 1 - t) * c57 < 1;
  rep.constants["delta"] = to_json(delta);
  rep.constants["Y"] = to_json(Y);
  rep.constants["c5c7"] = to_json(c57);

  HankelState s = build_state(Q, body.xi, n);
  rep.constants["ranks"] = s.to_json()["ranks_M"];
  RankDrop rd;
  try {
    rd = rank_drop_extract(s, k);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoRankDrop) throw;
    if (rep.premise) fail(ErrorCode::HardAssertion, "premise holds but M_k has full rank");
    rep.status = "DidNotDrop";
    return rep;
  }
  rep.status = "Dropped";
  rep.h = rd.h;
  rep.P = rd.P;
  const int h = rd.h, ell = h - 1;
  const bool exact = body.xi.is_rational();
  auto hard = [&](const CheckRecord& r) {
    if (!r.holds && exact) fail(ErrorCode::HardAssertion, r.name + " violated");
  };

  Rational c5 = c5_const(ell, n), c7 = c7_const(ell, n, absxi);
  Rational hm = height_matrix(s.M(ell)).value;
  Rational xtop = 1;
  for (int j = n - ell; j <= n; ++j) xtop *= body.X[j];
  CheckRecord r64;
  r64.name = "height_M_bound";
  r64.holds = hm <= c5 * c7 * xtop;
  r64.data["H_M"] = to_json(hm);
  r64.data["bound"] = to_json(c5 * c7 * xtop);
  hard(r64);
  rep.checks.push_back(r64);

  ProductSpaceHeights ps = product_space_height_check(rd.P, n - 2 * h + 2);
  CheckRecord r52;
  r52.name = "product_space_height";
  r52.holds = ps.holds && ps.height_product_space == hm;
  r52.data = ps.to_json();
  hard(r52);
  rep.checks.push_back(r52);
  Rational c52(ps.constant);

  Rational hp = height_poly(rd.P).value;
  CheckRecord rh;
  rh.name = "height_P";
  int e = n + 2 - 2 * h;
  rh.holds = pow(hp, n * e) <= pow(c52, n) * pow(delta, -k * e);
  rh.data["H_P"] = to_json(hp);
  rh.data["C_power"] = to_json(c52);
  rh.data["asserted"] = rep.premise;
  if (rep.premise) hard(rh);
  rep.checks.push_back(rh);

  CheckRecord r65 = ratio_bound_check(s, ell, t, rd.P, body.X);
  rep.checks.push_back(r65);

  Rational c = norm_ratio_c(rd.P.degree(), absxi);
  Rational c8 = pow(c, t) * c5 * c7 * c52;
  RatInterval lhs = ipow(relative_value(rd.P, body.xi, 128), t);
  CheckRecord r63;
  r63.name = "inequality_6_3";
  Rational rhs63 = c8 * pow(delta, h) * pow(hp, -e);
  r63.holds = lhs.hi <= rhs63;
  r63.data["lhs_upper"] = to_json(lhs.hi);
  r63.data["rhs"] = to_json(rhs63);
  hard(r63);
  rep.checks.push_back(r63);
  rep.constants["c8"] = to_json(c8);

  Rational c9 = std::max<Rational>(1, exp_bounds(Rational(n * n)).second * c8);
  rep.constants["c9"] = to_json(c9);
  rep.constants["delta_below_inverse_c8"] = delta * c8 < 1;
  if (rd.P.degree() >= 1) {
    Factorization f = factor_over_rationals(rd.P);
    CheckRecord r68;
    r68.name = "factor_split_6_8";
    r68.holds = false;
    for (const auto& [fac, mult] : f.factors) {
      (void)mult;
      RatPoly fp = fac.primitive();
      RatInterval q = ipow(relative_value(fp, body.xi, 128), t);
      Rational scale = pow(delta, -fp.degree()) * pow(height_poly(fp).value, n + 2 - 2 * k);
      if (q.hi * scale <= c9) {
        rep.factor = fp;
        r68.holds = true;
        r68.data["value_upper"] = to_json(q.hi * scale);
        break;
      }
    }
    rep.checks.push_back(r68);
  }
  return rep;
}

InclusionReport inclusion_check_71(const HankelState& s, int ell, const std::vector<Rational>& X, std::size_t samples) {
  const int n = s.n;
  if (ell < 0 || ell > n) fail(ErrorCode::InvalidArgument, "l out of range");
  if (static_cast<int>(X.size()) != n + 1) fail(ErrorCode::InvalidArgument, "X must have n+1 entries");
  require_nondecreasing(X);
  require_member(s.Q, BodySpec{n, s.xi, X}, "Q");
  Rational c = 1 / Rational(factorial(n + 1) * factorial(n + 1));
  std::vector<Rational> Z;
  for (int i = 0; i <= n - ell; ++i) Z.push_back(c / X[n - i]);
  BodySpec dual{n - ell, s.xi, Z};
  InclusionReport rep;
  RatMatrix m = s.M(ell);
  for (const auto& pt : enumerate_body(dual, 1, samples)) {
    if (pt.mu_hi > 1) continue;
    ++rep.checked;
    if (!in_kernel(m, pt.poly)) {
      rep.holds = false;
      fail(ErrorCode::CounterexampleFound, "G = " + pt.poly.to_string() + " is not in V_l");
    }
  }
  return rep;
}

AuxPolynomial aux_polynomial_G(const HankelState& s, int ell, int u, const std::vector<Rational>& X) {
  const int n = s.n;
  if (ell < 0 || u < 0 || ell + u >= n) fail(ErrorCode::PreconditionFailed, "need l + u < n");
  if (static_cast<int>(X.size()) != n + 1) fail(ErrorCode::PreconditionFailed, "X must have n+1 entries");
  require_nondecreasing(X);
  require_member(s.Q, BodySpec{n, s.xi, X}, "Q");
  Rational c = 1 / Rational(factorial(n + 1) * factorial(n + 1));
  Rational kappa = 1 / Rational(factorial(n));
  std::vector<Rational> Y;
  for (int i = 0; i <= n - ell; ++i) Y.push_back(i <= u ? c / X[n] : c / X[n - i + u]);
  BodySpec body{n - ell, s.xi, Y};
  auto pts = enumerate_body(body, kappa);
  const BodyPoint* best = nullptr;
  for (const auto& pt : pts)
    if (pt.mu_hi <= kappa && (!best || pt.mu_hi < best->mu_hi)) best = &pt;
  if (!best) fail(ErrorCode::SearchExhausted, "no nonzero integer point in the auxiliary body");
  AuxPolynomial a;
  a.G = best->poly;
  a.mu = best->mu_hi;
  a.height = height_poly(a.G).value;
  a.target = 1 / X[ell + u];
  RatMatrix m = s.M(ell);
  for (int i = 0; i <= u; ++i)
    if (!in_kernel(m, a.G.derivative(i))) fail(ErrorCode::HardAssertion, "G^{(i)} is not in V_l");
  return a;
}

bool corollary_73_check(const RatPoly& P, const AuxPolynomial& aux, int n, int ell, int u) {
  if (P.degree() < 1) fail(ErrorCode::InvalidArgument, "P must be nonconstant");
  return divides(pow(P, u + 1), aux.G) && P.degree() * (u + 1) <= n - ell;
}

}  // namespace dioph
