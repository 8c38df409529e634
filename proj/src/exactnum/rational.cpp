#include "dioph/exactnum/rational.hpp"

#include <algorithm>
#include <map>

#include "dioph/error.hpp"

namespace dioph {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num))
      fail(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  } else {
    if (!parse_integer(text.substr(0, slash), num) ||
        !parse_integer(text.substr(slash + 1), den))
      fail(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'");
    if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) fail(ErrorCode::InvalidArgument, "zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r;
  r.get_num() = num;
  r.get_den() = den;  // already coprime
  return r;
}

Integer pow(const Integer& z, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer iroot(const Integer& n, unsigned long k) {
  Integer a = abs(n), r;
  mpz_root(r.get_mpz_t(), a.get_mpz_t(), k);
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Brent's variant of Pollard rho; n composite and odd.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1, q = 1, ys;
    unsigned long r = 1;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += 128;
      } while (k < r && d == 1);
      r *= 2;
    } while (d == 1);
    if (d == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) fail(ErrorCode::ZeroInput, "cannot factor 0");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[Integer(p)];
      m /= p;
    }
  }
  factor_into(m, found);
  return {found.begin(), found.end()};
}

Integer common_denominator(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

}  // namespace dioph
