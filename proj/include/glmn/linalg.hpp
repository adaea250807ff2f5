#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "glmn/field.hpp"

namespace glmn {

template <Scalar S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, embed<S>(Rational(0))) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<S> a_;
};

// Fraction-free (Bareiss) elimination with row pivoting; exact fields only.
template <Scalar S>
  requires is_exact_v<S>
S determinant_bareiss(Matrix<S> a) {
  const std::size_t n = a.rows();
  if (n == 0) return embed<S>(Rational(1));
  S prev = embed<S>(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(a(p, k))) ++p;
      if (p == n) return embed<S>(Rational(0));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = embed<S>(Rational(0));
    }
    prev = a(k, k);
  }
  S d = a(n - 1, n - 1);
  return negate ? -d : d;
}

// LU with partial pivoting; returns false when a pivot vanishes exactly.
bool lu_decompose(Matrix<Complex>& a, std::vector<std::size_t>& perm, int& sign);
Complex determinant_lu(Matrix<Complex> a);
// Solves a x = b; throws SingularJacobian on an exactly singular or non-finite system.
std::vector<Complex> lu_solve(Matrix<Complex> a, std::vector<Complex> b);

template <Scalar S>
S determinant(const Matrix<S>& a) {
  if constexpr (is_exact_v<S>) return determinant_bareiss(a);
  else return determinant_lu(a);
}

}  // namespace glmn
