#include "dioph/construct.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numeric>

#include "dioph/error.hpp"
#include "dioph/exactnum/factor.hpp"
#include "dioph/exactnum/interval.hpp"
#include "dioph/exactnum/logs.hpp"
#include "dioph/exactnum/matrix.hpp"
#include "dioph/heights.hpp"

namespace dioph {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer mod_q2(const Rational& v, const Integer& m) {
  Integer den = v.get_den(), inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorCode::PrimeDividesD, "coordinate denominator not invertible mod q^2");
  Integer r = (Integer(v.get_num()) * inv) % m;
  if (r < 0) r += m;
  return r;
}

long log2_ceil(const Rational& x) {
  // Smallest e with 2^e >= x, for x > 0.
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2)) - 1;
  while (pow(Rational(2), e) < x) ++e;
  while (pow(Rational(2), e - 1) >= x) --e;
  return e;
}

RatMatrix witness_matrix(const std::vector<RatPoly>& w) {
  int n = static_cast<int>(w.size()) - 1;
  std::vector<std::vector<Rational>> rows;
  for (const RatPoly& p : w) {
    if (!p.has_integer_coeffs()) fail(ErrorCode::NonIntegerCoefficients, "witness " + p.to_string());
    if (p.degree() > n) fail(ErrorCode::DegreeOverflow, "witness degree exceeds n");
    rows.push_back(p.vector(n));
  }
  return RatMatrix::from_rows(rows);
}

// Certified enclosure of |z - xi|^2 with z in the disk.
std::pair<Rational, Rational> dist2_bounds(const ComplexDisk& d, const RealNumber& xi, long bits) {
  ComplexBall z = d.ball() - ComplexBall(xi.approx(bits));
  DyadicBall a = z.abs2();
  Rational lo = a.lower().to_rational();
  if (lo < 0) lo = 0;
  return {lo, a.upper().to_rational()};
}

std::vector<std::size_t> nearest(const std::vector<ComplexDisk>& roots, const RealNumber& xi, int t) {
  Rational x = xi.bounds(96).first;
  std::vector<std::size_t> idx(roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto key = [&](std::size_t i) {
    Rational dr = roots[i].re.to_rational() - x, di = roots[i].im.to_rational();
    return Rational(dr * dr + di * di);
  };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    Rational ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    if (roots[a].re != roots[b].re) return roots[a].re < roots[b].re;
    return roots[a].im < roots[b].im;
  });
  idx.resize(std::min<std::size_t>(idx.size(), t));
  return idx;
}

// x^e for rational e = p/q; exact when x^p is a perfect q-th power, else a 2^-64 lower approximation.
Rational rat_pow(const Rational& x, const Rational& e, bool& exact) {
  long p = e.get_num().get_si();
  unsigned long q = e.get_den().get_ui();
  Rational v = pow(x, p);
  if (q == 1) return v;
  Integer rn = iroot(v.get_num(), q), rd = iroot(v.get_den(), q);
  if (pow(rn, q) == v.get_num() && pow(rd, q) == v.get_den()) return make_rational(rn, rd);
  exact = false;
  const unsigned long B = 64;
  Integer scaled = floor(v * Rational(pow(Integer(2), q * B)));
  return make_rational(iroot(scaled, q), pow(Integer(2), B));
}

std::pair<Rational, Rational> log_pair(const Rational& x) { return log_bounds(x, 128); }

Json disk_json(const ComplexDisk& d) {
  return Json{{"re", to_json(d.re.to_rational())}, {"im", to_json(d.im.to_rational())},
              {"rad", to_json(d.rad.to_rational())}, {"real", d.real}};
}

std::string sci6(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", q.get_d());
  return buf;
}

}  // namespace

RatPoly base_root_poly(int t) {
  if (t < 1) fail(ErrorCode::InvalidArgument, "base_root_poly needs t >= 1");
  RatPoly b = RatPoly::constant(1);
  for (int i = 1; i <= t; ++i) b *= RatPoly::linear_from_root(Rational(i, t + 1));
  return b;
}

bool is_eisenstein(const RatPoly& p, const Integer& q) {
  if (p.degree() < 1 || p.leading() != 1 || !p.has_integer_coeffs()) return false;
  auto c = p.integer_coeffs();
  for (int i = 0; i < p.degree(); ++i)
    if (c[i] % q != 0) return false;
  return c[0] % (q * q) != 0;
}

Integer least_good_prime(const std::vector<RatPoly>& witnesses) {
  Rational d = determinant(witness_matrix(witnesses));
  if (d == 0) fail(ErrorCode::RankDeficient, "witnesses are linearly dependent");
  Integer D = d.get_num();
  for (Integer p = 2;; ++p)
    if (is_prime(p) && D % p != 0) return p;
}

Json AlgebraicInteger::to_json() const {
  Json j;
  j["min_poly"] = dioph::to_json(min_poly);
  j["eisenstein_prime"] = dioph::to_json(eisenstein_prime);
  Json rs = Json::array();
  for (const auto& d : roots) rs.push_back(disk_json(d));
  j["roots"] = rs;
  j["selected"] = selected;
  j["epsilon"] = dioph::to_json(epsilon);
  j["kappa"] = dioph::to_json(kappa);
  j["s"] = dioph::to_json(s);
  j["r"] = dioph::to_json(r);
  j["C"] = dioph::to_json(C);
  j["attempts"] = attempts;
  return j;
}

AlgebraicInteger eisenstein_lift(const LiftInput& in, const Integer& q) {
  const auto& W = in.witnesses;
  if (W.empty()) fail(ErrorCode::InvalidArgument, "no witnesses");
  int n = static_cast<int>(W.size()) - 1, t = in.t;
  if (t < 1 || t > n + 1) fail(ErrorCode::InvalidArgument, "t out of range");
  if (!(in.delta > 0 && in.delta < 1 && in.Y > 1)) fail(ErrorCode::PreconditionFailed, "needs 0 < delta < 1 < Y");
  if (!is_prime(q)) fail(ErrorCode::InvalidArgument, "q is not prime");
  RatMatrix M = witness_matrix(W);
  Rational D = determinant(M);
  if (D == 0) fail(ErrorCode::RankDeficient, "witnesses are linearly dependent");
  if (D.get_num() % q == 0) fail(ErrorCode::PrimeDividesD, "q divides the witness determinant");

  RatMatrix Mt = M.transpose();
  Integer q2 = q * q;
  std::vector<Rational> e0(n + 1, Rational(0));
  e0[0] = q;
  std::vector<Rational> gamma = *solve(Mt, e0);
  std::vector<Integer> gres;
  for (const Rational& g : gamma) gres.push_back(mod_q2(g, q2));

  RatPoly B = base_root_poly(t);
  Rational B1 = 0;
  for (const Rational& c : B.coeffs()) B1 += abs_q(c);
  Rational maxW = 0;
  for (const RatPoly& p : W) maxW = std::max<Rational>(maxW, p.norm_inf());

  long bits = 64 + 4 * std::max(0L, log2_ceil(1 / in.delta)) + std::max(0L, log2_ceil(in.Y));
  DyadicBall xb = in.xi.approx(bits);
  Rational xt = in.xi.is_rational() ? in.xi.rational_value() : xb.mid().to_rational();
  Rational xabs = std::max<Rational>(in.xi.abs_upper(), abs_q(xt));
  RatPoly lead = RatPoly::monomial(n + 1);

  Rational eps(2, 1);
  eps /= Rational(q2);
  for (int attempt = 0; attempt <= 20; ++attempt, eps /= 2) {
    Rational d0 = std::min(in.delta, eps);
    Rational r = d0;
    Rational s = in.kappa * pow(eps, -(t + 2)) * pow(d0, t) * in.Y;
    RatPoly lin = RatPoly::linear_from_root(xt);
    RatPoly R = pow(lin, n + 1) + s * B.scale_arg(1 / r).shift(-xt);
    std::vector<Rational> theta = *solve(Mt, (R - lead).vector(n));
    RatPoly P = lead;
    for (int i = 0; i <= n; ++i) {
      Integer b = gres[i] + q2 * round_nearest((theta[i] - Rational(gres[i])) / Rational(q2));
      P += Rational(b) * W[i];
    }
    if (!is_eisenstein(P, q)) fail(ErrorCode::HardAssertion, "lift is not Eisenstein: " + P.to_string());
    int count = 0;
    try {
      count = count_roots_in_disk(P, in.xi, in.delta);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundaryUndecidable) throw;
    }
    if (count < t) continue;

    AlgebraicInteger a;
    a.min_poly = P;
    a.eisenstein_prime = q;
    a.epsilon = eps;
    a.kappa = in.kappa;
    a.s = s;
    a.r = r;
    a.attempts = attempt + 1;
    Rational bound = pow(1 + xabs, n + 1) + in.kappa * pow(eps, -(t + 2)) * B1 * pow(1 + xabs, t) * in.Y +
                     Rational(n + 1) * Rational(q2) / 2 * maxW;
    a.C = bound / in.Y;
    if (P.norm_inf() > bound) fail(ErrorCode::HardAssertion, "lift height exceeds C Y");
    a.roots = certified_complex_roots(P, 32 + log2_ceil(1 / in.delta));
    if (static_cast<int>(a.roots.size()) != n + 1) fail(ErrorCode::HardAssertion, "Eisenstein lift not squarefree");
    a.selected = nearest(a.roots, in.xi, t);
    return a;
  }
  fail(ErrorCode::RootClusterFailed, "no root cluster within delta after 20 halvings of epsilon");
}

Json ApproxRecord::to_json() const {
  Json j;
  j["X"] = dioph::to_json(X);
  j["Y"] = dioph::to_json(Y);
  j["delta"] = dioph::to_json(delta);
  j["H_alpha"] = dioph::to_json(H_alpha);
  j["C"] = dioph::to_json(C);
  j["max_conj_distance"] = {dioph::to_json(dist_lo), dioph::to_json(dist_hi)};
  j["exponent"] = {dioph::to_json(exponent_lo), dioph::to_json(exponent_hi)};
  j["root_within_delta"] = root_within_delta;
  j["exact_powers"] = exact_powers;
  j["height_bound"] = height_bound;
  j["alpha"] = alpha.to_json();
  return j;
}

std::string ApproxRecord::to_tsv() const {
  std::string s;
  for (const std::string& f :
       {to_string(X), to_string(H_alpha), sci6(C), to_string(Y), to_string(delta), sci6(dist_lo),
        sci6(dist_hi), sci6(exponent_lo), sci6(exponent_hi), std::string(root_within_delta ? "1" : "0"),
        std::string(height_bound ? "1" : "0"), alpha.min_poly.to_string()}) {
    if (!s.empty()) s += '\t';
    s += f;
  }
  return s;
}

std::vector<ApproxRecord> theorem_A_experiment(const RealNumber& xi, int n, int t, const std::vector<Rational>& schedule,
                                               const Rational& c) {
  if (n < 1 || t < 1) fail(ErrorCode::InvalidArgument, "needs n, t >= 1");
  if (n > 5) fail(ErrorCode::DimensionCap, "theorem_A_experiment caps n at 5");
  int k = n / 4;
  if (t > k) fail(ErrorCode::PreconditionFailed, "needs t <= floor(n/4)");
  if (xi.is_rational()) fail(ErrorCode::PreconditionFailed, "xi must be irrational");
  if (c <= 0) fail(ErrorCode::InvalidArgument, "c must be positive");

  Rational e(t, k + 1 - t);
  Rational ed(k + 1, t * (k + 1 - t));
  std::vector<ApproxRecord> out;
  for (const Rational& X : schedule) {
    if (X <= 1) fail(ErrorCode::PreconditionFailed, "schedule points must exceed 1");
    bool exact = true;
    Rational Xe = rat_pow(X, e, exact);
    Rational ct = rat_pow(c, Rational(1, t), exact);
    Rational small = c / Xe;
    std::vector<Rational> Xv(n + 1, X);
    for (int j = 0; j <= n - t; ++j) Xv[j] = small;
    BodySpec body{n, xi, dual_tuple(Xv)};
    MinimaResult mr = successive_minima(body);

    LiftInput in;
    in.witnesses = mr.witnesses;
    in.xi = xi;
    in.t = t;
    in.Y = Xe / c;
    in.delta = ct * rat_pow(X, -ed, exact);
    in.kappa = std::max<Rational>(1, mr.lambdas[n]);
    if (!(in.delta < 1 && in.Y > 1)) fail(ErrorCode::PreconditionFailed, "schedule point too small for c");

    ApproxRecord rec;
    rec.X = X;
    rec.Y = in.Y;
    rec.delta = in.delta;
    rec.alpha = eisenstein_lift(in, least_good_prime(mr.witnesses));
    rec.H_alpha = rec.alpha.min_poly.norm_inf();
    rec.C = rec.alpha.C;
    rec.height_bound = rec.H_alpha <= rec.C * rec.Y;
    rec.root_within_delta = count_roots_in_disk(rec.alpha.min_poly, xi, in.delta) >= t;

    long bits = 64 + log2_ceil(1 / in.delta);
    for (;; bits *= 2) {
      Rational lo2 = 0, hi2 = 0;
      for (std::size_t i : rec.alpha.selected) {
        auto [l, h] = dist2_bounds(rec.alpha.roots[i], xi, bits);
        lo2 = std::max(lo2, l);
        hi2 = std::max(hi2, h);
      }
      if (lo2 > 0) {
        rec.dist_lo = sqrt_bounds(lo2).first;
        rec.dist_hi = sqrt_bounds(hi2).second;
        break;
      }
      if (bits > 4 * precision_cap()) fail(ErrorCode::PrecisionExhausted, "conjugate distance not separated from 0");
      rec.alpha.roots = certified_complex_roots(rec.alpha.min_poly, 2 * bits);
      rec.alpha.selected = nearest(rec.alpha.roots, xi, t);
    }
    auto [lh_lo, lh_hi] = log_pair(rec.H_alpha);
    Rational num_lo = -log_pair(rec.dist_hi).second, num_hi = -log_pair(rec.dist_lo).first;
    rec.exponent_lo = num_lo / (num_lo >= 0 ? lh_hi : lh_lo);
    rec.exponent_hi = num_hi / (num_hi >= 0 ? lh_lo : lh_hi);
    rec.exact_powers = exact;
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

// Lower bounds on |alpha_i - xi|^2 for every root, ascending.
std::vector<Rational> sorted_dist2_lower(const std::vector<ComplexDisk>& roots, const RealNumber& xi, long bits) {
  std::vector<Rational> v;
  for (const auto& d : roots) v.push_back(dist2_bounds(d, xi, bits).first);
  std::sort(v.begin(), v.end());
  return v;
}

Rational prop_10_1_value(int n, const Rational& H, const Rational& L, int t) {
  Rational K = pow(Rational(Integer(1) << n) * (n + 1), n - 1);
  return K * pow(H, 2 * (n - 1)) * pow(L, t * (t - 1) / 2);
}

}  // namespace

CheckRecord prop_10_1_check(const RatPoly& P, const RealNumber& xi, int t) {
  int n = P.degree();
  if (t < 2 || n < t) fail(ErrorCode::PreconditionFailed, "needs deg P >= t >= 2");
  if (!is_irreducible(P)) fail(ErrorCode::Reducible, P.to_string());
  Rational H = height_poly(P).value;
  CheckRecord rec;
  rec.name = "prop_10_1";
  for (long bits = 64;; bits *= 2) {
    auto roots = certified_complex_roots(P, bits);
    auto d2 = sorted_dist2_lower(roots, xi, bits + 16);
    Rational L = d2[t - 1];
    Rational v = prop_10_1_value(n, H, L, t);
    if (v >= 1) {
      rec.holds = true;
      rec.data["height"] = to_json(H);
      rec.data["dist2_lower"] = to_json(L);
      rec.data["value_lower"] = to_json(v);
      return rec;
    }
    if (bits > 4 * precision_cap()) fail(ErrorCode::HardAssertion, "discriminant lower bound not certified");
  }
}

bool prop_10_1_holds(const RatPoly& P, const std::vector<ComplexDisk>& roots, const Rational& xi, int t) {
  int n = P.degree();
  if (t < 2 || n < t || static_cast<int>(roots.size()) != n)
    fail(ErrorCode::PreconditionFailed, "needs deg P >= t >= 2 and all roots");
  auto d2 = sorted_dist2_lower(roots, RealNumber(xi), 128);
  return prop_10_1_value(n, height_poly(P).value, d2[t - 1], t) >= 1;
}

bool prop_10_1_uniform(const RatPoly& P, const std::vector<ComplexDisk>& roots, int t) {
  int n = P.degree();
  if (t < 2 || n < t || static_cast<int>(roots.size()) != n)
    fail(ErrorCode::PreconditionFailed, "needs deg P >= t >= 2 and all roots");
  Rational sep2 = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational dr = roots[i].re.to_rational() - roots[j].re.to_rational();
      Rational di = roots[i].im.to_rational() - roots[j].im.to_rational();
      Rational lo = sqrt_down(dr * dr + di * di, 64).to_rational() - roots[i].rad.to_rational() -
                    roots[j].rad.to_rational();
      if (lo < 0) lo = 0;
      if (sep2 < 0 || lo * lo < sep2) sep2 = lo * lo;
    }
  return prop_10_1_value(n, height_poly(P).value, sep2 / 4, t) >= 1;
}

std::vector<RealNumber> liouville_targets(int n, int t) {
  if (n < 1 || t < 1) fail(ErrorCode::InvalidArgument, "liouville_targets needs n, t >= 1");
  std::vector<RealNumber> v;
  for (int j = 1; j <= t; ++j) v.push_back(RealNumber::liouville(j, t, n));
  return v;
}

namespace {

Rational rational_height(const Rational& r) {
  Integer a = abs(r.get_num()), b = r.get_den();
  return Rational(a > b ? a : b);
}

CheckRecord liouville_record(const Rational& d2_lower, const Rational& Ha, const Rational& Hr, int n) {
  Rational gamma2 = pow(Rational(4), 1 - n) / (n + 1);
  Rational rhs2 = gamma2 / (Ha * Ha * pow(Hr, 2 * n));
  CheckRecord rec;
  rec.name = "liouville_inequality";
  rec.holds = d2_lower >= rhs2;
  rec.data["dist2_lower"] = to_json(d2_lower);
  rec.data["bound2"] = to_json(rhs2);
  rec.data["height_alpha"] = to_json(Ha);
  rec.data["height_r"] = to_json(Hr);
  return rec;
}

}  // namespace

CheckRecord liouville_inequality_check(const RatPoly& min_poly, const ComplexDisk& root, const Rational& r, int n) {
  if (min_poly.degree() < 1 || min_poly.degree() > n) fail(ErrorCode::PreconditionFailed, "alpha must have degree <= n");
  RatPoly f = min_poly.primitive();
  if (f.eval(r) == 0 && root.ball().re.contains(r) && root.ball().im.contains(0))
    fail(ErrorCode::Equal, "alpha equals r");
  Rational Ha = height_poly(f).value, Hr = rational_height(r);
  ComplexDisk d = root;
  for (long bits = 64;; bits *= 2) {
    auto [lo, hi] = dist2_bounds(d, RealNumber(r), 64);
    CheckRecord rec = liouville_record(lo, Ha, Hr, n);
    if (rec.holds) return rec;
    if (bits > 4 * precision_cap()) fail(ErrorCode::HardAssertion, "Liouville inequality not certified");
    auto roots = certified_complex_roots(f, bits);
    Rational cr = d.re.to_rational(), ci = d.im.to_rational();
    auto gap = [&](const ComplexDisk& e) {
      Rational a = e.re.to_rational() - cr, b = e.im.to_rational() - ci;
      return Rational(a * a + b * b);
    };
    d = *std::min_element(roots.begin(), roots.end(),
                          [&](const ComplexDisk& a, const ComplexDisk& b) { return gap(a) < gap(b); });
  }
}

CheckRecord liouville_inequality_check(const RealNumber& alpha, const Rational& r, int n) {
  if (alpha.kind() == RealNumber::Kind::Liouville) fail(ErrorCode::InvalidArgument, "alpha must be algebraic");
  if (alpha.is_rational()) {
    const Rational& a = alpha.rational_value();
    if (a == r) fail(ErrorCode::Equal, "alpha equals r");
    if (n < 1) fail(ErrorCode::PreconditionFailed, "needs n >= 1");
    Rational d = a - r;
    return liouville_record(d * d, rational_height(a), rational_height(r), n);
  }
  Factorization fz = factor_over_rationals(alpha.polynomial());
  for (long bits = 32;; bits *= 2) {
    auto [lo, hi] = alpha.bounds(bits);
    const RatPoly* owner = nullptr;
    int owners = 0;
    for (const auto& [f, m] : fz.factors)
      if (lo == hi ? f.eval(lo) == 0 : sturm_count(f, lo, hi) > 0) {
        owner = &f;
        ++owners;
      }
    if (owners != 1) continue;
    if (owner->degree() > n) fail(ErrorCode::PreconditionFailed, "alpha must have degree <= n");
    if (owner->degree() == 1 && owner->eval(r) == 0) fail(ErrorCode::Equal, "alpha equals r");
    if (r > lo && r < hi) continue;
    Rational d = r <= lo ? Rational(lo - r) : Rational(r - hi);
    CheckRecord rec = liouville_record(d * d, height_poly(owner->primitive()).value, rational_height(r), n);
    if (rec.holds || bits > 4 * precision_cap()) {
      if (!rec.holds) fail(ErrorCode::HardAssertion, "Liouville inequality not certified");
      return rec;
    }
  }
}

bool kappa_hypothesis(const Rational& kappa, int t) {
  if (t < 1) fail(ErrorCode::InvalidArgument, "t must be positive");
  return pow(kappa * t, t) > pow(Rational(t + 1), t + 1);
}

Json AdversarialReport::to_json() const {
  Json j;
  j["n"] = n;
  j["t"] = t;
  j["kappa"] = dioph::to_json(kappa);
  j["algebraic_numbers"] = algebraic_numbers;
  Json rows_j = Json::array();
  for (const auto& r : rows)
    rows_j.push_back(Json{{"H", r.H}, {"holds", r.holds}, {"distance_lower", dioph::to_json(r.distance_lower)},
                          {"slack", r.slack}});
  j["rows"] = rows_j;
  j["H0"] = H0 ? Json(*H0) : Json(nullptr);
  j["min_slack"] = min_slack;
  return j;
}

namespace {

constexpr std::size_t kAdversarialPolyCap = 5000000;

struct Candidate {
  RatPoly p;
  int height = 0;
};

// Primitive irreducible integer polynomials of degree 1..n with positive leading coefficient and height <= H.
std::vector<Candidate> irreducible_polys(int n, int H) {
  std::size_t total = 1;
  for (int i = 0; i <= n; ++i) total *= 2 * H + 1;
  if (total / 2 > kAdversarialPolyCap) fail(ErrorCode::CapExceeded, "too many polynomials to enumerate");
  std::vector<Candidate> out;
  for (int d = 1; d <= n; ++d) {
    std::vector<long> c(d + 1, -H);
    c[d] = 1;
    while (true) {
      long g = 0;
      int h = 0;
      for (long v : c) {
        g = std::gcd(g, v);
        h = std::max<int>(h, std::abs(v));
      }
      if (g == 1) {
        std::vector<Rational> q(c.begin(), c.end());
        RatPoly p(q);
        if (is_irreducible(p)) out.push_back({p, h});
      }
      int i = 0;
      while (i <= d) {
        long top = H, bottom = i == d ? 1 : -H;
        if (c[i] < top) {
          ++c[i];
          break;
        }
        c[i] = bottom;
        ++i;
      }
      if (i > d) break;
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.height < b.height; });
  return out;
}

// Certified lower bound on min over roots alpha of p of |alpha - xi|, xi in [xlo, xhi].
Rational min_root_distance(const RatPoly& p, const Rational& xlo, const Rational& xhi, const RealNumber& xi) {
  auto gap = [&](const Rational& lo, const Rational& hi) {
    if (hi < xlo) return Rational(xlo - hi);
    if (lo > xhi) return Rational(lo - xhi);
    return Rational(0);
  };
  if (p.degree() == 1) {
    Rational a = -p[0] / p[1];
    return gap(a, a);
  }
  if (p.degree() == 2) {
    Rational a = p[2], b = p[1], c = p[0];
    Rational disc = b * b - 4 * a * c;
    if (disc > 0) {
      auto [slo, shi] = sqrt_bounds(disc, 160);
      Rational two_a = 2 * a;
      Rational d1 = gap((-b + slo) / two_a, (-b + shi) / two_a);
      Rational d2 = gap((-b - shi) / two_a, (-b - slo) / two_a);
      return std::min(d1, d2);
    }
    Rational m = -b / (2 * a);
    Rational re = gap(m, m);
    Rational d2 = re * re + (-disc) / (4 * a * a);
    return sqrt_bounds(d2, 160).first;
  }
  for (long bits = 64;; bits *= 2) {
    Rational best = -1;
    for (const auto& d : certified_complex_roots(p, bits)) {
      Rational l = dist2_bounds(d, xi, bits + 16).first;
      if (best < 0 || l < best) best = l;
    }
    if (best > 0) return sqrt_bounds(best, 160).first;
    if (bits > 4 * precision_cap()) fail(ErrorCode::PrecisionExhausted, "root distance undecided");
  }
}

}  // namespace

AdversarialReport prop_10_2_adversarial(int n, int t, const Rational& kappa, const std::vector<int>& grid) {
  if (n < 1 || t < 1) fail(ErrorCode::InvalidArgument, "needs n, t >= 1");
  if (!kappa_hypothesis(kappa, t)) fail(ErrorCode::PreconditionFailed, "kappa below (t+1)^{1+1/t}/t");
  if (grid.empty()) fail(ErrorCode::InvalidArgument, "empty height grid");
  std::vector<int> hs = grid;
  std::sort(hs.begin(), hs.end());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  if (hs.front() < 1) fail(ErrorCode::InvalidArgument, "grid heights must be positive");
  if (n > 3 || hs.back() > 50) fail(ErrorCode::CapExceeded, "desk caps are n <= 3 and H <= 50");

  AdversarialReport rep;
  rep.n = n;
  rep.t = t;
  rep.kappa = kappa;
  std::vector<Candidate> polys = irreducible_polys(n, hs.back());
  for (const auto& c : polys) rep.algebraic_numbers += c.p.degree();

  // Exponent e = kappa n^{1/t} enclosed via exp(log(n)/t).
  Rational e_lo;
  {
    Integer rt = iroot(Integer(n), t);
    if (pow(rt, t) == n) {
      e_lo = kappa * Rational(rt);
    } else {
      e_lo = kappa * exp_bounds(log_bounds(Rational(n), 160).first / t, 160).first;
    }
  }

  // Per target: running minimum of certified distance lower bounds as the height grows.
  std::vector<std::vector<Rational>> m(t, std::vector<Rational>(hs.size()));
  auto targets = liouville_targets(n, t);
  for (int j = 0; j < t; ++j) {
    auto [xlo, xhi] = targets[j].bounds(256);
    Rational best = -1;
    std::size_t gi = 0;
    for (const auto& c : polys) {
      while (gi < hs.size() && c.height > hs[gi]) m[j][gi++] = best;
      if (gi == hs.size()) break;
      Rational d = Dyadic::from_rational_down(min_root_distance(c.p, xlo, xhi, targets[j]), 64).to_rational();
      if (d <= 0) fail(ErrorCode::PrecisionExhausted, "target not separated from an algebraic number");
      if (best < 0 || d < best) best = d;
    }
    while (gi < hs.size()) m[j][gi++] = best;
  }

  bool first = true;
  for (std::size_t gi = 0; gi < hs.size(); ++gi) {
    AdversarialRow row;
    row.H = hs[gi];
    row.distance_lower = m[0][gi];
    for (int j = 1; j < t; ++j) row.distance_lower = std::max(row.distance_lower, m[j][gi]);
    auto [ld_lo, ld_hi] = log_bounds(row.distance_lower, 160);
    Rational slack_lo = ld_lo;
    if (row.H > 1) slack_lo += e_lo * log_bounds(Rational(row.H), 160).first;
    row.holds = slack_lo >= 0;
    row.slack = slack_lo.get_d();
    if (first || row.slack < rep.min_slack) rep.min_slack = row.slack;
    first = false;
    rep.rows.push_back(row);
  }
  for (std::size_t i = rep.rows.size(); i-- > 0;) {
    if (!rep.rows[i].holds) break;
    rep.H0 = rep.rows[i].H;
  }
  return rep;
}

}  // namespace dioph
