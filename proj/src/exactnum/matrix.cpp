#include "dioph/exactnum/matrix.hpp"

#include <algorithm>

#include "dioph/error.hpp"

namespace dioph {

void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

// Clears row denominators; returns the integer matrix and the product of the
// row scale factors.
IntMatrix integerize_rows(const RatMatrix& a, Integer* scale) {
  IntMatrix m(a.rows(), a.cols());
  *scale = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer d = common_denominator(a.row(i));
    *scale *= d;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational v = a(i, j) * d;
      m(i, j) = v.get_num();
    }
  }
  return m;
}

// One-pass Bareiss elimination to echelon form. Returns the rank; the sign of
// row swaps goes to *sign and the last pivot to *last_pivot.
std::size_t bareiss(IntMatrix& m, int* sign, Integer* last_pivot) {
  Integer prev = 1;
  std::size_t r = 0;
  *sign = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
      *sign = -*sign;
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  *last_pivot = prev;
  return r;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (a.rows() == 0) return 1;
  Integer scale;
  IntMatrix m = integerize_rows(a, &scale);
  int sign;
  Integer last;
  std::size_t r = bareiss(m, &sign, &last);
  if (r < a.rows()) return 0;
  return Rational(last * sign) / scale;
}

std::size_t rank(const RatMatrix& a) {
  Integer scale, last;
  IntMatrix m = integerize_rows(a, &scale);
  int sign;
  return bareiss(m, &sign, &last);
}

std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer d = common_denominator(v);
  std::vector<Integer> out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * d;
    out[i] = s.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g == 0) fail(ErrorCode::ZeroVector, "primitive vector of zero");
  auto last = std::find_if(out.rbegin(), out.rend(), [](const Integer& z) { return z != 0; });
  if (*last < 0) g = -g;
  for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a) {
  RatMatrix m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(a.cols(), Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    auto prim = primitive_integer_vector(x);
    basis.emplace_back(prim.begin(), prim.end());
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b) {
  std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) fail(ErrorCode::InvalidArgument, "solve needs a square system");
  RatMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots.back() != n - 1) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::vector<Rational> maximal_minors(const RatMatrix& a) {
  if (a.rows() > a.cols()) fail(ErrorCode::InvalidArgument, "maximal minors need rows <= cols");
  std::vector<Rational> out;
  for_each_combination(a.cols(), a.rows(), [&](const std::vector<std::size_t>& cols) {
    out.push_back(determinant(a.select_columns(cols)));
  });
  return out;
}

bool same_row_space(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols()) return false;
  std::size_t ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  RatMatrix both(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) both(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) both(a.rows() + i, j) = b(i, j);
  return rank(both) == ra;
}

IntMatrix hermite_normal_form(const IntMatrix& a, IntMatrix* transform) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  auto row_op = [&](std::size_t i, std::size_t k, const Integer& p, const Integer& q,
                    const Integer& r, const Integer& s) {
    // (row_i, row_k) <- (p row_i + q row_k, r row_i + s row_k)
    for (IntMatrix* m : {&h, &u}) {
      for (std::size_t j = 0; j < m->cols(); ++j) {
        Integer x = (*m)(i, j), y = (*m)(k, j);
        (*m)(i, j) = p * x + q * y;
        (*m)(k, j) = r * x + s * y;
      }
    }
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(),
                 h(i, c).get_mpz_t());
      Integer a_r = h(r, c) / g, a_i = h(i, c) / g;
      // determinant s*a_r + t*a_i = 1
      row_op(r, i, s, t, -a_i, a_r);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) row_op(r, r, -1, 0, 0, -1);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q == 0) continue;
      for (IntMatrix* m : {&h, &u})
        for (std::size_t j = 0; j < m->cols(); ++j) (*m)(i, j) -= q * (*m)(r, j);
    }
    ++r;
  }
  if (transform) *transform = u;
  return h;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Rational(a(i, j));
  return m;
}

}  // namespace dioph
