#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Canonical "num/den" form; integers print as "n/1".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "n", "-n", "n/d". Throws InvalidArgument on anything else or d == 0.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
/// Nearest integer, ties toward +infinity.
Integer round_nearest(const Rational& q);

/// q^e for any integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);
Integer pow(const Integer& z, unsigned long e);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// floor(|n|^(1/k)).
Integer iroot(const Integer& n, unsigned long k);

/// Prime factorization of |n| (n != 0), primes ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

bool is_prime(const Integer& n);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& v);

}  // namespace dioph
