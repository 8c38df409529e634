#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dioph/exactnum/rational.hpp"

namespace dioph {

/// A place of Q: the Archimedean one or a prime p.
class Place {
 public:
  static Place infinite() { return Place(); }
  static Place finite(const Integer& p);

  bool is_infinite() const { return prime_ == 0; }
  const Integer& prime() const { return prime_; }

  /// "inf" or the prime in decimal.
  std::string key() const;
  static Place from_key(const std::string& key);

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }
  // Infinite sorts first, then primes ascending.
  friend bool operator<(const Place& a, const Place& b) { return a.prime_ < b.prime_; }

 private:
  Place() = default;
  Integer prime_ = 0;
};

/// ord_p(x) for x != 0.
long ord(const Rational& x, const Integer& p);

/// |x|_v, normalized so that |p|_p = 1/p.
Rational abs_at_place(const Rational& x, const Place& v);

/// The places where |x|_v can differ from 1: infinity and the primes of x.
std::vector<Place> support(const Rational& x);

/// Multiplies |x|_v over support(x) and compares with 1. Throws ZeroInput on 0.
bool product_formula_check(const Rational& x);

}  // namespace dioph
