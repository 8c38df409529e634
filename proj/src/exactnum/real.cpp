#include "dioph/exactnum/real.hpp"

#include <cstdlib>
#include <mutex>

#include "dioph/error.hpp"
#include "dioph/exactnum/roots.hpp"

namespace dioph {

long precision_cap() {
  static const long cap = [] {
    if (const char* env = std::getenv("DIOPH_PRECISION_CAP")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 32) return v;
    }
    return 256L;
  }();
  return cap;
}

Integer liouville_exponent(unsigned long ell, unsigned long t, unsigned long n) {
  if (t == 0 || n == 0) fail(ErrorCode::InvalidArgument, "liouville exponent needs t, n >= 1");
  return iroot(pow(Integer((t + 1) * n), ell), t);
}

Rational liouville_partial_sum(unsigned j, unsigned t, unsigned n, unsigned terms) {
  Rational s = 0;
  for (unsigned i = 0; i < terms; ++i) {
    Integer a = liouville_exponent(j + t * i, t, n);
    s += pow(Rational(2), -a.get_si());
  }
  return s;
}

struct RealNumber::AlgState {
  std::mutex mu;
  RootInterval iv;
  RootInterval initial;
  int s_hi = 0;
};

namespace {

int sign_at(const RatPoly& p, const Rational& x) { return sgn(p.eval(x)); }

}  // namespace

RealNumber::RealNumber(const Rational& q) : kind_(Kind::Rational), value_(q) {}

RealNumber RealNumber::algebraic(const RatPoly& p0, const Rational& lo0, const Rational& hi0) {
  if (p0.degree() < 1) fail(ErrorCode::InvalidArgument, "algebraic number needs a nonconstant polynomial");
  RatPoly p = squarefree_part(p0).primitive();
  if (sturm_count(p, lo0, hi0) != 1)
    fail(ErrorCode::InvalidArgument, "interval does not isolate exactly one root of " + p.to_string());
  if (p.eval(hi0) == 0) return RealNumber(hi0);
  if (p.degree() == 1) return RealNumber(-p[0] / p[1]);
  Rational lo = lo0, hi = hi0;
  int s_hi = sign_at(p, hi);
  if (p.eval(lo) == 0) {
    while (true) {
      Rational m = (lo + hi) / 2;
      int sm = sign_at(p, m);
      if (sm == 0) return RealNumber(m);
      if (sm == s_hi) {
        hi = m;
      } else {
        lo = m;
        break;
      }
    }
  }
  RealNumber r;
  r.kind_ = Kind::Algebraic;
  r.poly_ = p;
  r.alg_ = std::make_shared<AlgState>();
  r.alg_->iv = r.alg_->initial = {lo, hi};
  r.alg_->s_hi = sign_at(p, hi);
  return r;
}

RealNumber RealNumber::real_root(const RatPoly& p, int index) {
  auto ivs = isolate_real_root_intervals(p);
  if (index < 0 || index >= static_cast<int>(ivs.size()))
    fail(ErrorCode::InvalidArgument, "polynomial has " + std::to_string(ivs.size()) + " real roots");
  const auto& iv = ivs[index];
  if (iv.exact()) return RealNumber(iv.lo);
  return algebraic(p, iv.lo, iv.hi);
}

RealNumber RealNumber::liouville(unsigned j, unsigned t, unsigned n) {
  if (j < 1 || j > t || n < 1) fail(ErrorCode::InvalidArgument, "liouville series needs 1 <= j <= t and n >= 1");
  RealNumber r;
  r.kind_ = Kind::Liouville;
  r.j_ = j;
  r.t_ = t;
  r.n_ = n;
  return r;
}

const Rational& RealNumber::rational_value() const {
  if (kind_ != Kind::Rational) fail(ErrorCode::InvalidArgument, "not a rational number");
  return value_;
}

std::pair<Rational, Rational> RealNumber::bounds(long bits) const {
  switch (kind_) {
    case Kind::Rational:
      return {value_, value_};
    case Kind::Algebraic: {
      std::lock_guard<std::mutex> lock(alg_->mu);
      Rational eps = pow(Rational(2), -bits);
      auto& iv = alg_->iv;
      while (iv.hi - iv.lo > eps) {
        Rational m = (iv.lo + iv.hi) / 2;
        int sm = sign_at(poly_, m);
        if (sm == 0) {
          iv = {m, m};
          break;
        }
        if (sm == alg_->s_hi)
          iv.hi = m;
        else
          iv.lo = m;
      }
      return {iv.lo, iv.hi};
    }
    case Kind::Liouville: {
      Rational s = 0;
      for (unsigned i = 0;; ++i) {
        Integer a = liouville_exponent(j_ + t_ * i, t_, n_);
        if (a > bits + 1) {
          Rational tail = pow(Rational(2), 1 - a.get_si());
          return {s, s + tail};
        }
        s += pow(Rational(2), -a.get_si());
      }
    }
  }
  return {0, 0};
}

DyadicBall RealNumber::approx(long bits) const {
  auto [lo, hi] = bounds(bits + 2);
  long mag = 0;
  Rational m = std::max<Rational>(abs(lo), abs(hi));
  while (m >= 1) {
    m /= 2;
    ++mag;
  }
  return DyadicBall::from_interval(lo, hi, bits + 16 + mag);
}

int RealNumber::compare(const Rational& q) const {
  if (kind_ == Kind::Rational) return sgn(Rational(value_ - q));
  if (kind_ == Kind::Algebraic && poly_.eval(q) == 0) {
    auto [lo, hi] = bounds(0);
    if (lo == hi ? lo == q : (lo < q && q < hi)) return 0;
  }
  for (long bits = 16; bits <= (1L << 22); bits *= 2) {
    auto [lo, hi] = bounds(bits);
    if (hi < q) return -1;
    if (lo > q) return 1;
    if (lo == hi) return 0;
  }
  fail(ErrorCode::PrecisionExhausted, "comparison did not resolve");
}

Rational RealNumber::abs_upper() const {
  auto [lo, hi] = bounds(8);
  return std::max<Rational>(abs(lo), abs(hi));
}

RealNumber RealNumber::shifted(const Rational& m) const {
  switch (kind_) {
    case Kind::Rational:
      return RealNumber(Rational(value_ + m));
    case Kind::Algebraic: {
      auto [lo, hi] = bounds(0);
      if (lo == hi) return RealNumber(Rational(lo + m));
      return algebraic(poly_.shift(-m), lo + m, hi + m);
    }
    case Kind::Liouville:
      break;
  }
  fail(ErrorCode::InvalidArgument, "cannot shift a series target");
}

namespace {

std::vector<std::string> split_colon(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == ':' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

unsigned parse_unsigned(const std::string& s) {
  Rational q = parse_rational(s);
  if (q.get_den() != 1 || q < 0) fail(ErrorCode::InvalidArgument, "expected a nonnegative integer: " + s);
  return static_cast<unsigned>(q.get_num().get_ui());
}

std::string poly_list(const RatPoly& p) {
  std::string s = "[";
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) s += ",";
    Rational c = p[i];
    s += c.get_den() == 1 ? c.get_num().get_str() : to_string(c);
  }
  return s + "]";
}

}  // namespace

RealNumber RealNumber::parse(const std::string& text) {
  auto parts = split_colon(text);
  if (parts.size() == 1) return RealNumber(parse_rational(text));
  const std::string& tag = parts[0];
  if (tag == "alg" && parts.size() == 4)
    return algebraic(parse_poly(parts[1]), parse_rational(parts[2]), parse_rational(parts[3]));
  if (tag == "root" && parts.size() == 3)
    return real_root(parse_poly(parts[1]), static_cast<int>(parse_unsigned(parts[2])));
  if (tag == "liouville" && parts.size() == 4)
    return liouville(parse_unsigned(parts[1]), parse_unsigned(parts[2]), parse_unsigned(parts[3]));
  fail(ErrorCode::InvalidArgument, "cannot parse real number: " + text);
}

std::string RealNumber::to_string() const {
  switch (kind_) {
    case Kind::Rational:
      return dioph::to_string(value_);
    case Kind::Algebraic:
      return "alg:" + poly_list(poly_) + ":" + dioph::to_string(alg_->initial.lo) + ":" +
             dioph::to_string(alg_->initial.hi);
    case Kind::Liouville:
      return "liouville:" + std::to_string(j_) + ":" + std::to_string(t_) + ":" + std::to_string(n_);
  }
  return "";
}

}  // namespace dioph

namespace dioph {

DyadicBall eval_ball(const RatPoly& p, const DyadicBall& x, long prec) {
  DyadicBall acc;
  for (int i = p.degree(); i >= 0; --i) acc = (acc * x + DyadicBall::from_rational(p[i], prec)).rounded(prec);
  return acc;
}

DyadicBall eval_at(const RatPoly& p, const RealNumber& x, long bits) {
  if (x.is_rational()) return DyadicBall::from_rational(p.eval(x.rational_value()), bits + 64);
  long prec = bits + 32 + 4 * (p.degree() + 1);
  return eval_ball(p, x.approx(prec), prec);
}

}  // namespace dioph
