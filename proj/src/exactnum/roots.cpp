#include "dioph/exactnum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "dioph/error.hpp"

namespace dioph {

namespace {

int sgn_q(const Rational& q) { return sgn(q); }

int variations(const std::vector<RatPoly>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn_q(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at_infinity(const std::vector<RatPoly>& seq, bool positive) {
  int v = 0, last = 0;
  for (const auto& p : seq) {
    int s = sgn_q(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

RatPoly integer_squarefree(const RatPoly& p) { return squarefree_part(p).primitive(); }

// Shrinks (lo, hi] holding one simple root, p(hi) != 0, until both ends moved inward.
RootInterval shrink_interior(const RatPoly& p, Rational lo, Rational hi) {
  int s_hi = sgn_q(p.eval(hi));
  bool moved_lo = false, moved_hi = false;
  while (!(moved_lo && moved_hi)) {
    Rational m = (lo + hi) / 2;
    int sm = sgn_q(p.eval(m));
    if (sm == 0) return {m, m};
    if (sm == s_hi) {
      hi = m;
      moved_hi = true;
    } else {
      lo = m;
      moved_lo = true;
    }
  }
  return {lo, hi};
}

// Sign of (root - x) for the root isolated by iv. May turn iv exact.
int side(const RatPoly& p, RootInterval& iv, const Rational& x) {
  if (iv.exact()) return sgn_q(iv.lo - x);
  if (x <= iv.lo) return 1;
  if (x >= iv.hi) return -1;
  int sx = sgn_q(p.eval(x));
  if (sx == 0) {
    iv = {x, x};
    return 0;
  }
  return sx == sgn_q(p.eval(iv.hi)) ? -1 : 1;
}

}  // namespace

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm sequence of zero");
  std::vector<RatPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and keeps coefficients small.
    Rational lc = r.norm_inf();
    seq.push_back(Rational(-1) / lc * r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sturm_count(const RatPoly& p, const Rational& a, const Rational& b) {
  if (b <= a) return 0;
  auto seq = sturm_sequence(integer_squarefree(p));
  return variations(seq, a) - variations(seq, b);
}

int sturm_count_all(const RatPoly& p) {
  auto seq = sturm_sequence(integer_squarefree(p));
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

Rational root_bound(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "root bound of zero");
  Rational m = 0, lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p[i]) / lc);
  Rational b = 1;
  while (b < m + 1) b *= 2;
  return b;
}

std::vector<RootInterval> isolate_real_root_intervals(const RatPoly& p0, const std::optional<Rational>& a,
                                                      const std::optional<Rational>& b) {
  if (p0.is_zero()) fail(ErrorCode::ZeroPolynomial, "root isolation of zero");
  RatPoly p = integer_squarefree(p0);
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  auto seq = sturm_sequence(p);
  Rational B = root_bound(p);

  std::function<void(const Rational&, const Rational&, int, int)> rec =
      [&](const Rational& l, const Rational& r, int vl, int vr) {
        int c = vl - vr;
        if (c == 0) return;
        if (c == 1) {
          if (p.eval(r) == 0)
            out.push_back({r, r});
          else
            out.push_back(shrink_interior(p, l, r));
          return;
        }
        Rational m = (l + r) / 2;
        int vm = variations(seq, m);
        rec(l, m, vl, vm);
        rec(m, r, vm, vr);
      };
  rec(-B, B, variations(seq, -B), variations(seq, B));

  std::vector<RootInterval> kept;
  for (auto iv : out) {
    if (a && side(p, iv, *a) < 0) continue;
    if (b && side(p, iv, *b) > 0) continue;
    kept.push_back(iv);
  }
  return kept;
}

RootInterval refine_root(const RatPoly& p0, RootInterval iv, long bits) {
  if (iv.exact()) return iv;
  RatPoly p = integer_squarefree(p0);
  Rational eps = pow(Rational(2), -bits);
  int s_hi = sgn_q(p.eval(iv.hi));
  while (iv.hi - iv.lo > eps) {
    Rational m = (iv.lo + iv.hi) / 2;
    int sm = sgn_q(p.eval(m));
    if (sm == 0) return {m, m};
    if (sm == s_hi)
      iv.hi = m;
    else
      iv.lo = m;
  }
  return iv;
}

std::vector<DyadicBall> isolate_real_roots(const RatPoly& p, const std::optional<Rational>& a,
                                           const std::optional<Rational>& b, long bits) {
  std::vector<DyadicBall> balls;
  for (auto iv : isolate_real_root_intervals(p, a, b)) {
    iv = refine_root(p, iv, bits + 1);
    long prec = bits + 64 + static_cast<long>(mpz_sizeinbase(iv.hi.get_den_mpz_t(), 2));
    balls.push_back(iv.exact() ? DyadicBall::from_rational(iv.lo, prec)
                               : DyadicBall::from_interval(iv.lo, iv.hi, prec));
  }
  return balls;
}

namespace {

struct QC {
  Rational re, im;
};

QC eval_exact(const std::vector<Rational>& c, const QC& z) {
  QC acc{0, 0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational re = acc.re * z.re - acc.im * z.im + *it;
    Rational im = acc.re * z.im + acc.im * z.re;
    acc = {re, im};
  }
  return acc;
}

Rational norm2(const QC& z) { return z.re * z.re + z.im * z.im; }

// Complex floating value of working precision prec.
struct FC {
  mpf_class re, im;
  explicit FC(long prec = 64) : re(0, prec), im(0, prec) {}
};

void fc_mul(FC& out, const FC& a, const FC& b, long prec) {
  mpf_class r(a.re * b.re - a.im * b.im, prec);
  mpf_class i(a.re * b.im + a.im * b.re, prec);
  out.re = r;
  out.im = i;
}

void fc_div(FC& out, const FC& a, const FC& b, long prec) {
  mpf_class d(b.re * b.re + b.im * b.im, prec);
  mpf_class r((a.re * b.re + a.im * b.im) / d, prec);
  mpf_class i((a.im * b.re - a.re * b.im) / d, prec);
  out.re = r;
  out.im = i;
}

// Aberth iteration at precision prec, refining z in place.
void aberth_mp(const std::vector<Rational>& c, std::vector<FC>& z, long prec) {
  int n = static_cast<int>(c.size()) - 1;
  std::vector<mpf_class> cf;
  for (const auto& q : c) cf.emplace_back(q, prec);
  mpf_class tol(1, prec);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<mp_bitcnt_t>(2 * (prec - 8)));
  for (int iter = 0; iter < 400; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      FC p(prec), dp(prec), t(prec);
      p.re = cf[n];
      for (int k = n - 1; k >= 0; --k) {
        fc_mul(t, dp, z[i], prec);
        dp.re = t.re + p.re;
        dp.im = t.im + p.im;
        fc_mul(t, p, z[i], prec);
        p.re = t.re + cf[k];
        p.im = t.im;
      }
      if (p.re == 0 && p.im == 0) continue;
      if (dp.re == 0 && dp.im == 0) {
        z[i].re += mpf_class(1e-3, prec);
        done = false;
        continue;
      }
      FC N(prec), S(prec), one(prec);
      fc_div(N, p, dp, prec);
      one.re = 1;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        FC d(prec), inv(prec);
        d.re = z[i].re - z[j].re;
        d.im = z[i].im - z[j].im;
        fc_div(inv, one, d, prec);
        S.re += inv.re;
        S.im += inv.im;
      }
      FC NS(prec), den(prec), w(prec);
      fc_mul(NS, N, S, prec);
      den.re = 1 - NS.re;
      den.im = -NS.im;
      if (den.re == 0 && den.im == 0) {
        w = N;
      } else {
        fc_div(w, N, den, prec);
      }
      z[i].re -= w.re;
      z[i].im -= w.im;
      mpf_class wn(w.re * w.re + w.im * w.im, prec);
      mpf_class zn(z[i].re * z[i].re + z[i].im * z[i].im, prec);
      if (zn < 1) zn = 1;
      if (wn > tol * zn) done = false;
    }
    if (done) return;
  }
}

// Double precision Aberth; false when the coefficients do not fit.
bool aberth_double(const std::vector<Rational>& c, std::vector<std::complex<double>>& z) {
  int n = static_cast<int>(c.size()) - 1;
  std::vector<double> cd;
  for (const auto& q : c) {
    double d = q.get_d();
    if (!std::isfinite(d) || std::abs(d) > 1e250) return false;
    cd.push_back(d);
  }
  for (int iter = 0; iter < 500; ++iter) {
    bool done = true;
    for (int i = 0; i < n; ++i) {
      std::complex<double> p = cd[n], dp = 0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * z[i] + p;
        p = p * z[i] + cd[k];
      }
      if (p == 0.0) continue;
      if (dp == 0.0) {
        z[i] += 1e-3;
        done = false;
        continue;
      }
      std::complex<double> N = p / dp, S = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) S += 1.0 / (z[i] - z[j]);
      std::complex<double> w = N / (1.0 - N * S);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      if (std::abs(w) > 1e-15 * std::max(1.0, std::abs(z[i]))) done = false;
    }
    if (done) return true;
  }
  return true;
}

// Tries to certify disks around the given exact centers. Empty on failure.
std::vector<ComplexDisk> certify(const std::vector<Rational>& c, const std::vector<QC>& z) {
  int n = static_cast<int>(c.size()) - 1;
  std::vector<Rational> r2(n);
  Rational lc2 = c[n] * c[n];
  for (int i = 0; i < n; ++i) {
    Rational prod = lc2;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational d = norm2({z[i].re - z[j].re, z[i].im - z[j].im});
      if (d == 0) return {};
      prod *= d;
    }
    r2[i] = Rational(n * n) * norm2(eval_exact(c, z[i])) / prod;
  }
  std::vector<ComplexDisk> disks(n);
  std::vector<Rational> rad(n);
  for (int i = 0; i < n; ++i) {
    Dyadic r = sqrt_up(r2[i], 40);
    rad[i] = r.to_rational();
    disks[i].re = Dyadic::exact(z[i].re);
    disks[i].im = Dyadic::exact(z[i].im);
    disks[i].rad = r;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational s = rad[i] + rad[j];
      if (s * s >= norm2({z[i].re - z[j].re, z[i].im - z[j].im})) return {};
    }
  for (int i = 0; i < n; ++i) {
    bool conj_isolated = true;
    for (int j = 0; j < n && conj_isolated; ++j) {
      if (j == i) continue;
      Rational s = rad[i] + rad[j];
      if (s * s >= norm2({z[i].re - z[j].re, z[i].im + z[j].im})) conj_isolated = false;
    }
    if (conj_isolated) {
      disks[i].real = true;
      disks[i].im = Dyadic();
    } else if (z[i].im * z[i].im <= rad[i] * rad[i]) {
      return {};
    }
  }
  return disks;
}

Rational to_q(const mpf_class& f) {
  Rational q;
  mpq_set_f(q.get_mpq_t(), f.get_mpf_t());
  return q;
}

Rational dyadic_round(const Rational& q, long prec) {
  return Dyadic::from_rational_nearest(q, prec).to_rational();
}

}  // namespace

std::vector<ComplexDisk> certified_complex_roots(const RatPoly& p0, long bits) {
  if (p0.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of zero");
  RatPoly p = integer_squarefree(p0);
  int n = p.degree();
  if (n < 1) return {};
  const auto& c = p.coeffs();
  Rational target = pow(Rational(2), -bits);
  auto small_enough = [&](const std::vector<ComplexDisk>& d) {
    for (const auto& x : d)
      if (x.rad.to_rational() > target) return false;
    return true;
  };

  if (n == 1) {
    Rational r = -c[0] / c[1];
    ComplexDisk d;
    d.real = true;
    long prec = bits + 64;
    Dyadic m = Dyadic::from_rational_nearest(r, prec);
    d.re = m;
    d.rad = Dyadic::from_rational_up(abs(Rational(r - m.to_rational())), 32);
    return {d};
  }

  long cap = std::max<long>(4 * precision_cap(), 2048);
  std::vector<QC> zq(n);

  std::vector<std::complex<double>> zd(n);
  double rho = root_bound(p).get_d() / 2;
  for (int k = 0; k < n; ++k) zd[k] = std::polar(rho, 6.283185307179586 * k / n + 0.7);
  if (aberth_double(c, zd)) {
    for (int k = 0; k < n; ++k) zq[k] = {Rational(zd[k].real()), Rational(zd[k].imag())};
    auto disks = certify(c, zq);
    if (!disks.empty() && small_enough(disks)) return disks;
  }

  std::vector<FC> z;
  for (int k = 0; k < n; ++k) {
    FC f(64);
    f.re = zd[k].real();
    f.im = zd[k].imag();
    if (!std::isfinite(zd[k].real()) || !std::isfinite(zd[k].imag())) {
      f.re = std::cos(6.28318 * k / n + 0.7) * rho;
      f.im = std::sin(6.28318 * k / n + 0.7) * rho;
    }
    z.push_back(f);
  }
  for (long prec = 128; prec <= cap; prec *= 2) {
    std::vector<FC> widened;
    for (const auto& f : z) {
      FC g(prec);
      g.re = f.re;
      g.im = f.im;
      widened.push_back(g);
    }
    z = std::move(widened);
    aberth_mp(c, z, prec);
    for (int k = 0; k < n; ++k) zq[k] = {dyadic_round(to_q(z[k].re), prec), dyadic_round(to_q(z[k].im), prec)};
    auto disks = certify(c, zq);
    if (!disks.empty() && small_enough(disks)) return disks;
  }
  fail(ErrorCode::PrecisionExhausted, "could not certify the roots of " + p.to_string());
}

int count_roots_in_disk(const RatPoly& p0, const RealNumber& center, const Rational& radius) {
  if (p0.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of zero");
  if (radius < 0) fail(ErrorCode::InvalidArgument, "negative radius");
  RatPoly p = integer_squarefree(p0);
  if (p.degree() < 1) return 0;
  long cap = precision_cap();
  int count = 0;

  // Real roots: exact when the center is rational, otherwise by refinement.
  if (center.is_rational()) {
    const Rational& c = center.rational_value();
    count += sturm_count(p, c - radius, c + radius) + (p.eval(c - radius) == 0 ? 1 : 0);
  } else {
    for (auto iv : isolate_real_root_intervals(p)) {
      bool decided = false;
      for (long bits = 32; bits <= cap && !decided; bits *= 2) {
        iv = refine_root(p, iv, bits);
        auto [clo, chi] = center.bounds(bits);
        Rational dmax = std::max<Rational>(iv.hi - clo, chi - iv.lo);
        Rational dmin = std::max<Rational>({Rational(0), iv.lo - chi, clo - iv.hi});
        if (dmax <= radius) {
          ++count;
          decided = true;
        } else if (dmin > radius) {
          decided = true;
        }
      }
      if (!decided) fail(ErrorCode::BoundaryUndecidable, "real root on the boundary circle");
    }
  }

  // Non-real roots via inclusion disks.
  if (sturm_count_all(p) == p.degree()) return count;
  for (long bits = 32;; bits *= 2) {
    auto disks = certified_complex_roots(p, bits);
    auto [clo, chi] = center.bounds(bits);
    Rational cm = (clo + chi) / 2, crad = (chi - clo) / 2;
    int inside = 0;
    bool undecided = false;
    for (const auto& d : disks) {
      if (d.real) continue;
      Rational re = d.re.to_rational() - cm, im = d.im.to_rational();
      Rational D2 = re * re + im * im;
      Rational e = d.rad.to_rational() + crad;
      if (radius >= e && D2 <= (radius - e) * (radius - e))
        ++inside;
      else if (D2 <= (radius + e) * (radius + e))
        undecided = true;
    }
    if (!undecided) return count + inside;
    if (bits >= cap) fail(ErrorCode::BoundaryUndecidable, "complex root on the boundary circle");
  }
}

}  // namespace dioph
