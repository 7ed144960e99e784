#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they check: plain enumeration, Laplace expansion, and rational
// Gaussian elimination.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "ucycle/exact_matrix.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// All k-permutations of [n] in lexicographic order, by direct backtracking.
inline std::vector<std::vector<int>> lex_kperms(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int s = 1; s <= n; ++s) {
      if (used[static_cast<std::size_t>(s)]) continue;
      used[static_cast<std::size_t>(s)] = true;
      cur.push_back(s);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(s)] = false;
    }
  };
  rec(rec);
  return out;
}

inline std::vector<int> rotated(const std::vector<int>& c, std::size_t r) {
  std::vector<int> out;
  out.reserve(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) out.push_back(c[(r + j) % c.size()]);
  return out;
}

// Least rotation by materializing all of them.
inline std::vector<int> min_rotation(const std::vector<int>& c) {
  std::vector<int> best = c;
  for (std::size_t r = 1; r < c.size(); ++r) best = std::min(best, rotated(c, r));
  return best;
}

// Determinant by cofactor expansion along the first row.
inline ucycle::BigInt det_cofactor(const ucycle::ExactMatrix& m) {
  const std::size_t sz = m.rows();
  if (sz == 0) return 1;
  if (sz == 1) return m(0, 0);
  ucycle::BigInt d = 0;
  for (std::size_t j = 0; j < sz; ++j) {
    if (m(0, j) == 0) continue;
    const ucycle::BigInt sub = det_cofactor(m.minor_matrix(0, j));
    d += (j % 2 == 0 ? m(0, j) : -m(0, j)) * sub;
  }
  return d;
}

// Rank by plain Gaussian elimination over the rationals.
inline std::size_t rank_rational(const ucycle::ExactMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> w(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = Rational(m(i, j));
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && w[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(w[piv], w[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (w[i][col] == 0) continue;
      const Rational f = w[i][col] / w[r][col];
      for (std::size_t j = col; j < cols; ++j) w[i][j] -= f * w[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
