#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/bigint.hpp"

namespace ucycle {

// Dimension mismatch or non-square input where a square matrix is required.
struct matrix_shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense matrix over arbitrary-precision signed integers, row-major. There is
// deliberately no floating-point path anywhere in this class: determinants
// and ranks come from fraction-free (Bareiss) elimination, which keeps every
// intermediate value an exact integer.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static ExactMatrix identity(std::size_t m) {
    ExactMatrix r(m, m);
    for (std::size_t i = 0; i < m; ++i) r(i, i) = 1;
    return r;
  }

  static ExactMatrix ones(std::size_t m) {
    ExactMatrix r(m, m);
    for (auto& x : r.a_) x = 1;
    return r;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const ExactMatrix&) const = default;

  ExactMatrix& operator+=(const ExactMatrix& o) {
    require_same_shape(o, "sum");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }

  ExactMatrix& operator-=(const ExactMatrix& o) {
    require_same_shape(o, "difference");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }

  friend ExactMatrix operator*(const BigInt& c, ExactMatrix a) {
    for (auto& x : a.a_) x *= c;
    return a;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_)
      throw matrix_shape_error("matrix product: " + a.shape_str() + " times " +
                               b.shape_str());
    ExactMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const BigInt& f = a(i, t);
        if (f.is_zero()) continue;  // adjacency powers are mostly zeros
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const BigInt& g = b(t, j);
          if (!g.is_zero()) r(i, j) += f * g;
        }
      }
    }
    return r;
  }

  // Repeated multiplication; this project never needs exponents beyond 4.
  ExactMatrix power(int e) const {
    require_square("power");
    if (e < 0) throw parameter_error("matrix power: negative exponent");
    ExactMatrix r = identity(rows_);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  BigInt trace() const {
    require_square("trace");
    BigInt t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  // Fraction-free Bareiss elimination. The pivot is the first nonzero entry
  // in the current column (exact arithmetic needs no magnitude pivoting);
  // each row swap flips the sign. Every division below is exact.
  BigInt determinant() const {
    require_square("determinant");
    const std::size_t m = rows_;
    if (m == 0) return 1;
    ExactMatrix w = *this;
    bool negate = false;
    BigInt prev = 1;
    for (std::size_t col = 0; col + 1 < m; ++col) {
      std::size_t piv = col;
      while (piv < m && w(piv, col).is_zero()) ++piv;
      if (piv == m) return 0;
      if (piv != col) {
        w.swap_rows(piv, col);
        negate = !negate;
      }
      const BigInt& p = w(col, col);
      for (std::size_t i = col + 1; i < m; ++i) {
        for (std::size_t j = col + 1; j < m; ++j)
          w(i, j) = (w(i, j) * p - w(i, col) * w(col, j)) / prev;
        w(i, col) = 0;
      }
      prev = w(col, col);
    }
    BigInt d = std::move(w(m - 1, m - 1));
    return negate ? -d : d;
  }

  // Rank over the rationals; same fraction-free update as determinant(), but
  // columns with no pivot are skipped instead of terminating.
  std::size_t rank() const {
    ExactMatrix w = *this;
    const std::size_t m = rows_;
    std::size_t r = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols_ && r < m; ++col) {
      std::size_t piv = r;
      while (piv < m && w(piv, col).is_zero()) ++piv;
      if (piv == m) continue;
      if (piv != r) w.swap_rows(piv, r);
      const BigInt& p = w(r, col);
      for (std::size_t i = r + 1; i < m; ++i) {
        for (std::size_t j = col + 1; j < cols_; ++j)
          w(i, j) = (w(i, j) * p - w(i, col) * w(r, j)) / prev;
        w(i, col) = 0;
      }
      prev = w(r, col);
      ++r;
    }
    return r;
  }

  // Copy with row `row` and column `col` deleted.
  ExactMatrix minor_matrix(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_)
      throw matrix_shape_error("minor: index out of range for " + shape_str());
    ExactMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
        if (j == col) continue;
        r(ri, rj) = (*this)(i, j);
        ++rj;
      }
      ++ri;
    }
    return r;
  }

  BigInt cofactor(std::size_t row, std::size_t col) const {
    BigInt d = minor_matrix(row, col).determinant();
    return ((row + col) % 2 == 0) ? d : -d;
  }

 private:
  std::string shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  void require_square(const char* op) const {
    if (rows_ != cols_)
      throw matrix_shape_error(std::string(op) + ": matrix is " + shape_str() +
                               ", square required");
  }

  void require_same_shape(const ExactMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw matrix_shape_error(std::string(op) + ": " + shape_str() + " vs " +
                               o.shape_str());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap_ranges(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_),
                     a_.begin() + static_cast<std::ptrdiff_t>(j * cols_));
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

// sum_i coeffs[i] * a^i evaluated by Horner's scheme on matrices; coeffs[0]
// is the constant term.
inline ExactMatrix eval_poly(const std::vector<BigInt>& coeffs, const ExactMatrix& a) {
  if (a.rows() != a.cols())
    throw matrix_shape_error("eval_poly: square matrix required");
  const std::size_t m = a.rows();
  ExactMatrix r(m, m);
  if (coeffs.empty()) return r;
  for (std::size_t i = 0; i < m; ++i) r(i, i) = coeffs.back();
  for (std::size_t d = coeffs.size() - 1; d-- > 0;) {
    r = r * a;
    for (std::size_t i = 0; i < m; ++i) r(i, i) += coeffs[d];
  }
  return r;
}

}  // namespace ucycle
