#include "matrix.hpp"

#include <algorithm>

#include "error.hpp"

namespace deltader {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
    }
  return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

std::vector<Vector> rref(std::vector<Vector> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw ShapeMismatch("rref: rows of unequal length");
  std::size_t lead = 0;
  for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
    std::size_t piv = lead;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[lead], rows[piv]);
    Rational inv = Rational(1) / rows[lead][col];
    for (auto& x : rows[lead]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < n; ++c)
        if (!rows[lead][c].is_zero()) rows[r][c] -= f * rows[lead][c];
    }
    ++lead;
  }
  rows.resize(lead);
  return rows;
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // echelon rows (nonzero)
  std::vector<std::size_t> pivot_cols;
};

// Fraction-free forward elimination. Every intermediate entry is a minor of
// the integer input, so each division below is exact.
Echelon bareiss(const Matrix& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < nc; ++j) den = lcm(den, m(i, j).denominator());
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = m(i, j).numerator() * (den / m(i, j).denominator());
  }
  Echelon out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[r], a[piv]);
    const Integer p = a[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        Integer v = p * a[i][j];
        if (f != 0 && a[r][j] != 0) v -= f * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

}  // namespace

std::vector<Vector> nullspace(const Matrix& m) {
  const std::size_t nc = m.cols();
  Echelon e = bareiss(m);
  std::vector<bool> is_pivot(nc, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Vector x(nc);
    x[free] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational acc;
      for (std::size_t j = pc + 1; j < nc; ++j)
        if (e.rows[k][j] != 0 && !x[j].is_zero()) acc += Rational(e.rows[k][j]) * x[j];
      x[pc] = -acc / Rational(e.rows[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return rref(std::move(basis));
}

std::size_t rank(const Matrix& m) { return bareiss(m).pivot_cols.size(); }

}  // namespace deltader
