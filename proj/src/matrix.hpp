#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rational.hpp"

namespace deltader {

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  const std::vector<Rational>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

using Vector = std::vector<Rational>;

/// Reduced row echelon form of the span of the given vectors (all of equal
/// length): rows sorted by pivot column, pivot entries 1, zero rows dropped.
std::vector<Vector> rref(std::vector<Vector> rows);

/// Exact nullspace of an integer-izable rational matrix. The matrix is scaled
/// row by row to integers and reduced with fraction-free (Bareiss)
/// elimination; the returned basis is in reduced echelon form.
std::vector<Vector> nullspace(const Matrix& m);

/// Rank via the same fraction-free elimination.
std::size_t rank(const Matrix& m);

}  // namespace deltader
