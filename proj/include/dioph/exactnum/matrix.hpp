#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "dioph/exactnum/rational.hpp"

namespace dioph {

/// Dense row-major matrix of exact scalars.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Matrix s(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

/// Calls f on every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& f);

/// Fraction-free (Bareiss) determinant.
Rational determinant(const RatMatrix& a);
/// Fraction-free rank.
std::size_t rank(const RatMatrix& a);
/// Basis of {x : A x = 0}; each vector primitive integral, read off the reduced echelon form.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& a);
/// Solves A x = b for square nonsingular A; nullopt when singular.
std::optional<std::vector<Rational>> solve(const RatMatrix& a, const std::vector<Rational>& b);
/// Order-m minors of an m x n matrix (m <= n), column subsets in lexicographic order.
std::vector<Rational> maximal_minors(const RatMatrix& a);
/// True when the rows of a and b span the same subspace.
bool same_row_space(const RatMatrix& a, const RatMatrix& b);

/// Scales v to coprime integers whose last nonzero entry is positive. v != 0.
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

/// Row Hermite normal form H = U A with U unimodular; zero rows last.
IntMatrix hermite_normal_form(const IntMatrix& a, IntMatrix* transform = nullptr);

RatMatrix to_rational(const IntMatrix& a);

}  // namespace dioph
