#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dioph/exactnum/rational.hpp"

namespace dioph {

/// Polynomial over Q, stored low degree first with trailing zeros trimmed.
///
/// The ambient degree n records which space E_n the polynomial is viewed in;
/// it never drops below the actual degree and only matters when the
/// polynomial is read as a coefficient vector of length n+1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs, std::optional<int> ambient = std::nullopt);
  RatPoly(std::initializer_list<long> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(int k, const Rational& c = 1);
  /// c0 + c1 T from a root: T - r.
  static RatPoly linear_from_root(const Rational& r);
  static RatPoly from_integers(const std::vector<Integer>& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int ambient() const { return std::max(ambient_, degree()); }
  RatPoly with_ambient(int n) const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of T^i, zero outside the stored range.
  Rational operator[](int i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Length n+1 coefficient vector in E_n; requires n >= degree().
  std::vector<Rational> vector(int n) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  RatPoly derivative(int k = 1) const;
  /// P(T + a).
  RatPoly shift(const Rational& a) const;
  /// P(c T).
  RatPoly scale_arg(const Rational& c) const;

  RatPoly monic() const;
  /// Integer multiple with coprime coefficients and positive leading coefficient.
  RatPoly primitive() const;
  bool has_integer_coeffs() const;
  std::vector<Integer> integer_coeffs() const;
  /// max |coefficient|.
  Rational norm_inf() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, const RatPoly& p);
  RatPoly& operator+=(const RatPoly& o) { return *this = *this + o; }
  RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }

  /// Equality of coefficients; the ambient degree is ignored.
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// e.g. "2*T^2 - 1/3*T + 1".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  int ambient_ = 0;
};

RatPoly pow(const RatPoly& p, unsigned e);

/// Euclidean division; b != 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
/// True when b divides a in Q[T]; sets quotient if given.
bool divides(const RatPoly& b, const RatPoly& a, RatPoly* quotient = nullptr);
/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
/// Monic squarefree part.
RatPoly squarefree_part(const RatPoly& p);
/// Yun's decomposition: monic squarefree factors with multiplicities.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// Sylvester resultant with respect to the actual degrees. Throws ZeroPolynomial.
Rational resultant(const RatPoly& p, const RatPoly& q);
/// (-1)^{n(n-1)/2} Res(P, P') / lc(P). Throws DegreeTooSmall for deg < 2.
Rational discriminant(const RatPoly& p);

/// Parses "[a0, a1, ...]" or "a0,a1,..." into coefficients (rationals allowed).
RatPoly parse_poly(const std::string& text);

}  // namespace dioph
