#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ucycle/bigint.hpp"
#include "ucycle/digraph.hpp"
#include "ucycle/exact_matrix.hpp"

namespace ucycle {

// First failing entry of an entrywise matrix comparison; row/column labels
// are the vertex permutations.
struct Counterexample {
  std::string row, col;
  BigInt expected, got;
};

// Outcome of one verification. `check` uses the CLI token for the check
// ("thm1", "lemma2", ...) so reports are stable across surfaces.
struct CheckResult {
  std::string check;
  int n = 0;
  bool pass = false;
  std::string detail;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return pass; }
};

namespace detail {

// Entrywise comparison with vertex-labeled counterexamples.
inline bool matrices_equal(const ExactMatrix& got, const ExactMatrix& expected,
                           const TransitionDigraph& d,
                           std::optional<Counterexample>& out) {
  for (std::size_t i = 0; i < got.rows(); ++i) {
    for (std::size_t j = 0; j < got.cols(); ++j) {
      if (got(i, j) != expected(i, j)) {
        out = Counterexample{perm_digits(d.vertex(i)), perm_digits(d.vertex(j)),
                             expected(i, j), got(i, j)};
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// The k=2 transition digraph is the complete digraph on [n]: its Laplacian
// must equal nI - J entrywise, and the product of the nonzero Laplacian
// eigenvalues (n, taken n-1 times) must equal |V| * cof(L) = n^(n-1).
inline CheckResult verify_k2_laplacian(int n) {
  if (n < 3) throw parameter_error("k=2 Laplacian check needs n >= 3");
  CheckResult res;
  res.check = "thm1";
  res.n = n;
  const TransitionDigraph d(n, 2);
  const ExactMatrix lap = d.laplacian_matrix();
  const std::size_t m = d.vertex_count();
  const ExactMatrix expected =
      BigInt(n) * ExactMatrix::identity(m) - ExactMatrix::ones(m);
  if (!detail::matrices_equal(lap, expected, d, res.counterexample)) {
    res.detail = "Laplacian differs from nI - J";
    return res;
  }
  const BigInt cof = lap.cofactor(0, 0);
  const BigInt product = BigInt(m) * cof;
  const BigInt want = big_pow(n, n - 1);
  if (product != want) {
    res.detail = "|V| * cof(L) = " + product.str() + ", expected n^(n-1) = " +
                 want.str();
    return res;
  }
  res.pass = true;
  res.detail = "L = nI - J; cof(L) = " + cof.str() + ", |V| * cof(L) = n^(n-1) = " +
               product.str();
  return res;
}

// The adjacency matrix A of the k=3 transition digraph satisfies the quartic
// identity  A^4 + A^3 + (n-3)A^2 - A - (n-2)I = (n-2)(n-3)J,  verified here
// entrywise with exact arithmetic.
inline CheckResult verify_adjacency_polynomial(int n) {
  if (n < 4) throw parameter_error("adjacency polynomial check needs n >= 4");
  CheckResult res;
  res.check = "lemma2";
  res.n = n;
  const TransitionDigraph d(n, 3);
  const ExactMatrix a = d.adjacency_matrix();
  const ExactMatrix lhs = eval_poly({-(n - 2), -1, n - 3, 1, 1}, a);
  const ExactMatrix rhs =
      (BigInt(n - 2) * (n - 3)) * ExactMatrix::ones(d.vertex_count());
  if (!detail::matrices_equal(lhs, rhs, d, res.counterexample)) {
    res.detail = "quartic polynomial in A differs from (n-2)(n-3)J";
    return res;
  }
  res.pass = true;
  res.detail = "A^4 + A^3 + (n-3)A^2 - A - (n-2)I = (n-2)(n-3)J holds entrywise";
  return res;
}

// The seven relative positions two vertices ab, v of the k=3 digraph can be
// in; the walk counts between them depend only on the case.
enum class WalkCase : int {
  same = 0,          // (ab, ab)
  reversed = 1,      // (ab, ba)
  shared_first = 2,  // (ab, ac)
  first_as_second = 3,  // (ab, ca)
  second_as_first = 4,  // (ab, bc)
  shared_second = 5,    // (ab, cb)
  disjoint = 6,         // (ab, cd)
};

inline WalkCase classify_vertex_pair(const KPermutation& u, const KPermutation& v) {
  const int a = u[0], b = u[1], x = v[0], y = v[1];
  if (x == a && y == b) return WalkCase::same;
  if (x == b && y == a) return WalkCase::reversed;
  if (x == a) return WalkCase::shared_first;
  if (x == b) return WalkCase::second_as_first;
  if (y == a) return WalkCase::first_as_second;
  if (y == b) return WalkCase::shared_second;
  return WalkCase::disjoint;
}

inline const char* walk_case_pattern(WalkCase c) {
  static constexpr std::array<const char*, 7> names = {
      "(ab,ab)", "(ab,ba)", "(ab,ac)", "(ab,ca)", "(ab,bc)", "(ab,cb)", "(ab,cd)"};
  return names[static_cast<std::size_t>(c)];
}

// Expected (u,v)-entries of A, A^2, A^3, A^4 and of A^4 + A^3 + (n-3)A^2 - A
// for each case, as polynomials in n evaluated at the given n.
inline std::array<BigInt, 5> walk_case_expected(WalkCase c, int n) {
  const BigInt n2 = n - 2, n3 = n - 3, n4 = n - 4;
  switch (c) {
    case WalkCase::same:
      return {0, 0, n2, n2 * n3, n2 * n2};
    case WalkCase::reversed:
      return {0, 0, 0, n2 * n3, n2 * n3};
    case WalkCase::shared_first:
      return {0, 0, n3, n3 * n3, n2 * n3};
    case WalkCase::first_as_second:
      return {0, 1, n3, n3 * n4, n2 * n3};
    case WalkCase::second_as_first:
      return {1, 0, 0, n3 * n3 + n2, n2 * n3};
    case WalkCase::shared_second:
      return {0, 0, n3, n3 * n3, n2 * n3};
    case WalkCase::disjoint:
      return {0, 1, n4, n3 + n4 * n4, n2 * n3};
  }
  return {};
}

struct WalkCaseResult {
  std::string pattern;
  // Fixed witness with a,b,c,d = 1,2,3,4, for readable reports: the pair and
  // its observed entries of A, A^2, A^3, A^4 and the combined quartic.
  std::string witness_row, witness_col;
  std::array<BigInt, 5> witness_entries{};
  bool pass = true;
  std::optional<Counterexample> counterexample;
};

struct WalkTableResult {
  int n = 0;
  bool pass = false;
  std::array<WalkCaseResult, 7> cases;
};

// Checks the walk-count table two ways: the fixed witness pair of each case
// (a,b,c,d = 1,2,3,4, recorded in the result for readable failure output)
// and a full sweep classifying every ordered pair of k=3 vertices. Entries
// of A..A^4 and of the combined quartic are compared against the case
// polynomials; the first counterexample per case is kept.
inline WalkTableResult verify_walk_counts(int n) {
  if (n < 4) throw parameter_error("walk-count table needs n >= 4");
  WalkTableResult res;
  res.n = n;
  const TransitionDigraph d(n, 3);
  const ExactMatrix a1 = d.adjacency_matrix();
  const ExactMatrix a2 = a1 * a1;
  const ExactMatrix a3 = a2 * a1;
  const ExactMatrix a4 = a3 * a1;
  const ExactMatrix combo = eval_poly({0, -1, n - 3, 1, 1}, a1);
  const std::array<const ExactMatrix*, 5> powers = {&a1, &a2, &a3, &a4, &combo};

  const auto record = [&](std::size_t i, std::size_t j) {
    const WalkCase wc = classify_vertex_pair(d.vertex(i), d.vertex(j));
    const auto expected = walk_case_expected(wc, n);
    WalkCaseResult& cr = res.cases[static_cast<std::size_t>(wc)];
    for (std::size_t p = 0; p < powers.size(); ++p) {
      if ((*powers[p])(i, j) != expected[p] && cr.pass) {
        cr.pass = false;
        cr.counterexample =
            Counterexample{perm_digits(d.vertex(i)), perm_digits(d.vertex(j)),
                           expected[p], (*powers[p])(i, j)};
      }
    }
  };

  // Witness pairs in case order: (12,12) (12,21) (12,13) (12,31) (12,23)
  // (12,32) (12,34).
  const std::array<KPermutation, 7> witnesses = {
      KPermutation{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {3, 4}};
  const std::size_t row = rank_kperm({1, 2}, n);
  for (std::size_t c = 0; c < 7; ++c) {
    WalkCaseResult& cr = res.cases[c];
    cr.pattern = walk_case_pattern(static_cast<WalkCase>(c));
    const std::size_t col = rank_kperm(witnesses[c], n);
    cr.witness_row = perm_digits(d.vertex(row));
    cr.witness_col = perm_digits(d.vertex(col));
    for (std::size_t p = 0; p < powers.size(); ++p)
      cr.witness_entries[p] = (*powers[p])(row, col);
    record(row, col);
  }

  const std::size_t m = d.vertex_count();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) record(i, j);

  res.pass = true;
  for (const auto& cr : res.cases) res.pass = res.pass && cr.pass;
  return res;
}

// Eigenvalue multiplicities of the k=3 adjacency matrix and the trace checks
// that pin them down. s1, s2 count eigenvalues 1 and -1; s3 counts each
// member of the conjugate pair p, q with p+q = -1, pq = n-2.
struct MultiplicityReport {
  int n = 0;
  std::size_t s1 = 0, s2 = 0, s3 = 0;
  BigInt trace_a, trace_a2, trace_a3;
  bool matches_closed_forms = false;  // s1=(n-1)(n-2)/2, s2=n(n-3)/2, s3=n-1
  bool traces_ok = false;             // (0, 0, n(n-1)(n-2))
  bool spectrum_size_ok = false;      // 1 + s1 + s2 + 2 s3 = n(n-1)
  bool trace_system_ok = false;       // Newton power sums of p, q

  bool pass() const {
    return matches_closed_forms && traces_ok && spectrum_size_ok && trace_system_ok;
  }
};

// Multiplicities via kernel dimensions: s(lambda) = n(n-1) - rank(A - lambda I).
// That equals the algebraic multiplicity because
// (x-(n-2))(x-1)(x+1)(x^2+x+n-2) annihilates A and is squarefree for every
// n >= 4: n-2 is an integer >= 2, hence distinct from 1 and -1, and the
// quadratic factor has discriminant 9-4n < 0, so its roots are non-real and
// distinct from everything else. A is therefore diagonalizable and kernel
// dimensions are full multiplicities. The conjugate pair is handled jointly
// through the real matrix A^2 + A + (n-2)I, whose kernel has dimension 2*s3.
inline MultiplicityReport eigenvalue_multiplicities(int n) {
  if (n < 4) throw parameter_error("multiplicity analysis needs n >= 4");
  MultiplicityReport rep;
  rep.n = n;
  const TransitionDigraph d(n, 3);
  const std::size_t m = d.vertex_count();  // n(n-1)
  const ExactMatrix a = d.adjacency_matrix();
  const ExactMatrix eye = ExactMatrix::identity(m);
  rep.s1 = m - (a - eye).rank();
  rep.s2 = m - (a + eye).rank();
  const std::size_t pair_kernel = m - eval_poly({n - 2, 1, 1}, a).rank();
  rep.s3 = pair_kernel / 2;
  const ExactMatrix a2 = a * a;
  rep.trace_a = a.trace();
  rep.trace_a2 = a2.trace();
  rep.trace_a3 = (a2 * a).trace();

  rep.matches_closed_forms =
      pair_kernel % 2 == 0 &&
      rep.s1 == static_cast<std::size_t>((n - 1) * (n - 2) / 2) &&
      rep.s2 == static_cast<std::size_t>(n * (n - 3) / 2) &&
      rep.s3 == static_cast<std::size_t>(n - 1);
  rep.traces_ok = rep.trace_a == 0 && rep.trace_a2 == 0 &&
                  rep.trace_a3 == BigInt(n) * (n - 1) * (n - 2);
  rep.spectrum_size_ok = 1 + rep.s1 + rep.s2 + 2 * rep.s3 == m;

  // tr A^t = (n-2)^t + s1 - (-1)^t s2 + s3 (p^t + q^t), with the power sums
  // of the conjugate pair: p+q = -1, p^2+q^2 = 5-2n, p^3+q^3 = 3n-7.
  const BigInt s1 = rep.s1, s2 = rep.s2, s3 = rep.s3;
  const BigInt t1 = BigInt(n - 2) + s1 - s2 + s3 * BigInt(-1);
  const BigInt t2 = big_pow(n - 2, 2) + s1 + s2 + s3 * BigInt(5 - 2 * n);
  const BigInt t3 = big_pow(n - 2, 3) + s1 - s2 + s3 * BigInt(3 * n - 7);
  rep.trace_system_ok =
      t1 == rep.trace_a && t2 == rep.trace_a2 && t3 == rep.trace_a3;
  return rep;
}

// The product of the nonzero Laplacian eigenvalues for k=3 factors as
//   (n-3)^((n-1)(n-2)/2) * (n-1)^(n(n-3)/2) * [n(n-2)]^(n-1)
// (the conjugate eigenvalue pair contributes the integer n(n-2) per copy).
// The product is compared against |V| * cof(L), all in exact integers; no
// complex eigenvalue is ever represented.
inline CheckResult verify_k3_spectrum_product(int n) {
  if (n < 4) throw parameter_error("k=3 spectrum product check needs n >= 4");
  CheckResult res;
  res.check = "thm2";
  res.n = n;
  const TransitionDigraph d(n, 3);
  const BigInt cof = d.laplacian_matrix().cofactor(0, 0);
  const BigInt via_cofactor = BigInt(n) * (n - 1) * cof;
  const BigInt product = big_pow(n - 3, (n - 1) * (n - 2) / 2) *
                         big_pow(n - 1, n * (n - 3) / 2) *
                         big_pow(BigInt(n) * (n - 2), n - 1);
  res.pass = product == via_cofactor;
  res.detail = "eigenvalue product " + product.str() + ", |V| * cof(L) = " +
               via_cofactor.str();
  return res;
}

}  // namespace ucycle
