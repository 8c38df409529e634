#include "dioph/exactnum/poly.hpp"

#include <algorithm>
#include <sstream>

#include "dioph/error.hpp"
#include "dioph/exactnum/matrix.hpp"

namespace dioph {

RatPoly::RatPoly(std::vector<Rational> coeffs, std::optional<int> ambient)
    : coeffs_(std::move(coeffs)) {
  trim();
  if (ambient) {
    if (*ambient < degree()) fail(ErrorCode::InvalidArgument, "ambient degree below actual degree");
    ambient_ = *ambient;
  }
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(int k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear_from_root(const Rational& r) { return RatPoly(std::vector<Rational>{-r, 1}); }

RatPoly RatPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& z : coeffs) v.emplace_back(z);
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::with_ambient(int n) const {
  RatPoly p = *this;
  if (n < degree()) fail(ErrorCode::DegreeOverflow, "degree " + std::to_string(degree()) + " exceeds " + std::to_string(n));
  p.ambient_ = n;
  return p;
}

Rational RatPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

std::vector<Rational> RatPoly::vector(int n) const {
  if (n < degree()) fail(ErrorCode::DegreeOverflow, "degree " + std::to_string(degree()) + " exceeds " + std::to_string(n));
  std::vector<Rational> v(n + 1, Rational(0));
  std::copy(coeffs_.begin(), coeffs_.end(), v.begin());
  return v;
}

Rational RatPoly::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative(int k) const {
  if (k <= 0) return *this;
  if (degree() < k) return RatPoly({}, ambient());
  std::vector<Rational> v(degree() - k + 1);
  for (int i = k; i <= degree(); ++i) {
    Integer f = 1;
    for (int j = 0; j < k; ++j) f *= (i - j);
    v[i - k] = coeffs_[i] * f;
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::shift(const Rational& a) const {
  // Horner in the ring: acc = acc * (T + a) + c.
  std::vector<Rational> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * a;
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return RatPoly(std::move(acc), ambient());
}

RatPoly RatPoly::scale_arg(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  Rational f = 1;
  for (auto& x : v) {
    x *= f;
    f *= c;
  }
  return RatPoly(std::move(v), ambient());
}

RatPoly RatPoly::monic() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "monic of zero");
  return (1 / leading()) * *this;
}

RatPoly RatPoly::primitive() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "primitive part of zero");
  auto z = primitive_integer_vector(coeffs_);
  RatPoly p = from_integers(z);
  p.ambient_ = ambient_;
  return p;
}

bool RatPoly::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::vector<Integer> RatPoly::integer_coeffs() const {
  if (!has_integer_coeffs()) fail(ErrorCode::NonIntegerCoefficients, to_string());
  std::vector<Integer> z;
  for (const auto& q : coeffs_) z.push_back(q.get_num());
  return z;
}

Rational RatPoly::norm_inf() const {
  Rational m = 0;
  for (const auto& q : coeffs_) m = std::max<Rational>(m, abs(q));
  return m;
}

RatPoly RatPoly::operator-() const { return Rational(-1) * *this; }

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return RatPoly(std::move(v), std::max(a.ambient(), b.ambient()));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& c, const RatPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return RatPoly(std::move(v), p.ambient());
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (i == 0 || !unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly pow(const RatPoly& p, unsigned e) {
  RatPoly r = RatPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

bool divides(const RatPoly& b, const RatPoly& a, RatPoly* quotient) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = q;
  return true;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (p.degree() == 0) return RatPoly::constant(1);
  RatPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() == 0) return out;
  RatPoly f = p.monic();
  RatPoly a = gcd(f, f.derivative());
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(f.derivative(), a).first;
  RatPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    RatPoly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::ZeroPolynomial, "resultant with a zero polynomial");
  int m = p.degree(), n = q.degree();
  std::size_t size = m + n;
  RatMatrix s(size, size);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = p[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = q[n - j];
  return determinant(s);
}

Rational discriminant(const RatPoly& p) {
  int n = p.degree();
  if (n < 2) fail(ErrorCode::DegreeTooSmall, "discriminant needs degree >= 2");
  Rational r = resultant(p, p.derivative()) / p.leading();
  return ((n * (n - 1) / 2) % 2 == 0) ? r : Rational(-r);
}

RatPoly parse_poly(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != '[' && ch != ']') s += (ch == ',' ? ' ' : ch);
  std::istringstream is(s);
  std::vector<Rational> v;
  std::string tok;
  while (is >> tok) v.push_back(parse_rational(tok));
  if (v.empty()) fail(ErrorCode::InvalidArgument, "empty coefficient list '" + text + "'");
  return RatPoly(std::move(v));
}

}  // namespace dioph
