#include "dioph/exactnum/place.hpp"

#include <algorithm>

#include "dioph/error.hpp"

namespace dioph {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "place needs a prime, got " + p.get_str());
  Place v;
  v.prime_ = p;
  return v;
}

std::string Place::key() const { return is_infinite() ? "inf" : prime_.get_str(); }

Place Place::from_key(const std::string& key) {
  if (key == "inf") return infinite();
  Integer p;
  if (p.set_str(key, 10) != 0) fail(ErrorCode::InvalidArgument, "bad place key " + key);
  return finite(p);
}

long ord(const Rational& x, const Integer& p) {
  if (x == 0) fail(ErrorCode::ZeroInput, "ord of zero");
  long e = 0;
  Integer n = x.get_num(), d = x.get_den();
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++e;
  }
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    --e;
  }
  return e;
}

Rational abs_at_place(const Rational& x, const Place& v) {
  if (x == 0) return 0;
  if (v.is_infinite()) return abs(x);
  return pow(Rational(v.prime()), -ord(x, v.prime()));
}

std::vector<Place> support(const Rational& x) {
  std::vector<Place> out{Place::infinite()};
  if (x == 0) return out;
  std::vector<Integer> primes;
  for (const auto& [p, e] : factor_integer(x.get_num())) primes.push_back(p);
  for (const auto& [p, e] : factor_integer(x.get_den())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  for (const auto& p : primes) out.push_back(Place::finite(p));
  return out;
}

bool product_formula_check(const Rational& x) {
  if (x == 0) fail(ErrorCode::ZeroInput, "product formula needs x != 0");
  Rational prod = 1;
  for (const auto& v : support(x)) prod *= abs_at_place(x, v);
  return prod == 1;
}

}  // namespace dioph
