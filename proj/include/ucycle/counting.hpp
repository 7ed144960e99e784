#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/bigint.hpp"
#include "ucycle/digraph.hpp"
#include "ucycle/perm.hpp"

namespace ucycle {

// Caps for exhaustive tour enumeration. The defaults keep brute force in the
// seconds range: 20 arcs / 972000 tours at (5,2) is fine, while (5,3) already
// has 60 arcs and ~1.7e14 tours and must be refused.
struct TourBudget {
  std::size_t max_arcs = 40;
  std::uint64_t max_count = 100'000'000;
};

// A budget cap was hit. `partial` carries the exact number of tours counted
// (or cycles emitted) before the abort, a lower bound on the true total.
struct budget_error : std::runtime_error {
  BigInt partial;

  budget_error(const std::string& what, BigInt reached)
      : std::runtime_error(what), partial(std::move(reached)) {}
};

// Exact universal-cycle counts in closed form:
//   k=1:  (n-1)!
//   k=2:  n^(n-2) [(n-2)!]^n
//   k=3:  (n-3)^((n-1)(n-2)/2) (n-2)^(n-1) (n-1)^((n-1)(n-2)/2 - 2)
//           n^(n-2) [(n-3)!]^(n(n-1))
// No closed form is known for k >= 4; use count_matrix_tree there.
inline BigInt count_closed_form(int n, int k) {
  switch (k) {
    case 1:
      if (n < 2) throw parameter_error("closed form for k=1 needs n >= 2");
      return factorial(n - 1);
    case 2:
      if (n < 3) throw parameter_error("closed form for k=2 needs n >= 3");
      return big_pow(n, n - 2) * big_pow(factorial(n - 2), n);
    case 3: {
      if (n < 4) throw parameter_error("closed form for k=3 needs n >= 4");
      const int half = (n - 1) * (n - 2) / 2;
      return big_pow(n - 3, half) * big_pow(n - 2, n - 1) * big_pow(n - 1, half - 2) *
             big_pow(n, n - 2) * big_pow(factorial(n - 3), n * (n - 1));
    }
    default:
      throw parameter_error("no closed form implemented for k=" + std::to_string(k) +
                            "; use matrix_tree");
  }
}

// Eulerian-tour count of the transition digraph, which equals the number of
// universal cycles:
//
//   count = cof(L) * prod_v (outdeg(v) - 1)!
//
// where cof(L) is any cofactor of the Laplacian (all of them agree on a
// balanced digraph). cof(L) equals the product of the nonzero Laplacian
// eigenvalues divided by |V|, so the eigenvalues themselves (complex for
// k = 3) are never computed; the whole path stays in exact integers.
inline BigInt count_matrix_tree(int n, int k, std::size_t max_vertices = 5000) {
  if (k == 1)
    throw parameter_error("k=1 has no transition digraph; use the closed form (n-1)!");
  const BigInt nv = falling_factorial(n, k - 1);
  if (nv > max_vertices)
    throw budget_error("transition digraph has |V| = " + nv.str() +
                           " vertices, exceeding the cap of " +
                           std::to_string(max_vertices),
                       0);
  const TransitionDigraph d(n, k);
  const BigInt cof = d.laplacian_matrix().cofactor(0, 0);
  BigInt deg_prod = 1;
  for (std::size_t deg : d.degree_profile().out_degree)
    deg_prod *= factorial(static_cast<int>(deg) - 1);
  return cof * deg_prod;
}

namespace detail {

// Depth-first search over Eulerian trails that begin with the arc labeled by
// the lexicographically least k-permutation (1,2,...,k). Every Eulerian tour
// contains that arc exactly once, so pinning it counts each rotation class
// of tours exactly once, the convention under which tours correspond to
// universal cycles. Arcs are tried in ascending appended-symbol order, which
// makes the emission order lexicographic (see enumerate_all).
class TourSearch {
 public:
  TourSearch(const TransitionDigraph& d, std::uint64_t max_count,
             std::function<void(const std::vector<int>&)> on_tour)
      : d_(d), max_count_(max_count), on_tour_(std::move(on_tour)) {
    used_.resize(d.vertex_count());
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      used_[v].assign(d.out_arcs(v).size(), false);
    appended_.reserve(d.arc_count());
  }

  std::uint64_t run() {
    // Pin the first arc: out-arcs are sorted by appended symbol, so arc 0 of
    // vertex 0 is (1,...,k).
    const Arc& first = d_.out_arcs(0)[0];
    used_[0][0] = true;
    appended_.push_back(first.appended);
    extend(first.to, 1);
    return count_;
  }

 private:
  void extend(std::size_t v, std::size_t arcs_used) {
    if (arcs_used == d_.arc_count()) {
      // Balanced digraph: a trail using every arc necessarily closed up.
      if (count_ == max_count_)
        throw budget_error("tour enumeration aborted after reaching the cap of " +
                               std::to_string(max_count_) + " tours",
                           count_);
      ++count_;
      if (on_tour_) on_tour_(appended_);
      return;
    }
    const auto& arcs = d_.out_arcs(v);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (used_[v][i]) continue;
      used_[v][i] = true;
      appended_.push_back(arcs[i].appended);
      extend(arcs[i].to, arcs_used + 1);
      appended_.pop_back();
      used_[v][i] = false;
    }
  }

  const TransitionDigraph& d_;
  std::uint64_t max_count_;
  std::function<void(const std::vector<int>&)> on_tour_;
  std::vector<std::vector<bool>> used_;
  std::vector<int> appended_;
  std::uint64_t count_ = 0;
};

// The cyclic sequence spelled by a pinned-start tour, already in canonical
// rotation: the start vertex's symbols followed by the appended symbols of
// all but the closing k-1 arcs.
inline CyclicSequence tour_sequence(const TransitionDigraph& d,
                                    const std::vector<int>& appended) {
  CyclicSequence c = d.vertex(0);
  const std::size_t keep = appended.size() - (static_cast<std::size_t>(d.k()) - 1);
  c.insert(c.end(), appended.begin(), appended.begin() + static_cast<std::ptrdiff_t>(keep));
  return c;
}

inline void require_countable(int n, int k) {
  if (k < 1 || n < 2 || k >= n)
    throw parameter_error("universal cycles require 1 <= k < n; got n=" +
                          std::to_string(n) + ", k=" + std::to_string(k));
}

// Arc count (= cycle length) check that must run before the digraph is
// materialized, so absurd parameters fail fast instead of exhausting memory.
inline void require_arcs_within(int n, int k, std::size_t max_arcs) {
  const BigInt arcs = falling_factorial(n, k);
  if (arcs > max_arcs)
    throw budget_error("transition digraph has " + arcs.str() +
                           " arcs, exceeding the budget of " +
                           std::to_string(max_arcs),
                       0);
}

// k = 1 bypasses the digraph: a universal cycle for P(n,1) is just a cyclic
// arrangement of the n symbols, canonically written starting at 1.
template <typename Emit>
std::uint64_t for_each_k1_cycle(int n, const TourBudget& budget, Emit emit) {
  if (static_cast<std::size_t>(n) > budget.max_arcs)
    throw budget_error("cycle length " + std::to_string(n) +
                           " exceeds the budget of " + std::to_string(budget.max_arcs),
                       0);
  CyclicSequence c(static_cast<std::size_t>(n));
  std::iota(c.begin(), c.end(), 1);
  std::uint64_t count = 0;
  do {
    if (count == budget.max_count)
      throw budget_error("enumeration aborted after reaching the cap of " +
                             std::to_string(budget.max_count) + " cycles",
                         count);
    ++count;
    emit(c);
  } while (std::next_permutation(c.begin() + 1, c.end()));
  return count;
}

}  // namespace detail

// Exact count of Eulerian tours of the transition digraph by exhaustive
// backtracking, the independent oracle for the two algebraic counts. Tours
// are counted up to cyclic rotation (the start arc is fixed at the
// lexicographically least k-permutation).
inline BigInt count_bruteforce(int n, int k, const TourBudget& budget = {}) {
  detail::require_countable(n, k);
  if (k == 1) {
    // Check rather than assume: count the arrangements the validator accepts.
    std::uint64_t count = detail::for_each_k1_cycle(
        n, budget, [&](const CyclicSequence& c) {
          if (!is_universal_cycle(c, n, 1))
            throw std::logic_error("k=1 arrangement failed validation");
        });
    return count;
  }
  detail::require_arcs_within(n, k, budget.max_arcs);
  const TransitionDigraph d(n, k);
  detail::TourSearch search(d, budget.max_count, nullptr);
  return search.run();
}

// Streams every universal cycle for P(n,k) exactly once, each already in
// canonical rotation, in lexicographic order of canonical form. The canonical
// rotation of a universal cycle starts at its unique (1,2,...,k) window, which
// is exactly where the pinned-start search begins, so tours emerge canonical
// and ordered with no postprocessing.
inline void enumerate_all(int n, int k, const TourBudget& budget,
                          const std::function<void(const CyclicSequence&)>& emit) {
  detail::require_countable(n, k);
  if (k == 1) {
    detail::for_each_k1_cycle(n, budget, emit);
    return;
  }
  detail::require_arcs_within(n, k, budget.max_arcs);
  const TransitionDigraph d(n, k);
  detail::TourSearch search(d, budget.max_count, [&](const std::vector<int>& appended) {
    emit(detail::tour_sequence(d, appended));
  });
  search.run();
}

inline std::vector<CyclicSequence> enumerate_all(int n, int k,
                                                 const TourBudget& budget = {}) {
  std::vector<CyclicSequence> out;
  enumerate_all(n, k, budget, [&](const CyclicSequence& c) { out.push_back(c); });
  return out;
}

// One universal cycle via Hierholzer's algorithm (guaranteed to succeed on a
// balanced, strongly connected digraph). The seed permutes the arc-choice
// order at every vertex; a fixed seed gives a fixed cycle. k = 1 returns the
// identity arrangement. max_length caps the digraph that gets materialized.
inline CyclicSequence generate_cycle(int n, int k, std::uint64_t seed = 0,
                                     std::size_t max_length = 10'000'000) {
  detail::require_countable(n, k);
  if (k == 1) {
    CyclicSequence c(static_cast<std::size_t>(n));
    std::iota(c.begin(), c.end(), 1);
    return c;
  }
  detail::require_arcs_within(n, k, max_length);
  const TransitionDigraph d(n, k);

  // Per-vertex arc visit order, Fisher-Yates over the generator stream (kept
  // explicit so a seed selects the same cycle on every platform).
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> order(d.vertex_count());
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    order[v].resize(d.out_arcs(v).size());
    std::iota(order[v].begin(), order[v].end(), 0);
    for (std::size_t i = order[v].size(); i > 1; --i)
      std::swap(order[v][i - 1], order[v][rng() % i]);
  }

  std::vector<std::size_t> next_choice(d.vertex_count(), 0);
  std::vector<std::pair<std::size_t, const Arc*>> stack;  // vertex, arc used to enter
  std::vector<const Arc*> tour;
  tour.reserve(d.arc_count());
  stack.emplace_back(0, nullptr);
  while (!stack.empty()) {
    auto [v, entered_by] = stack.back();
    if (next_choice[v] < order[v].size()) {
      const Arc& a = d.out_arcs(v)[order[v][next_choice[v]++]];
      stack.emplace_back(a.to, &a);
    } else {
      stack.pop_back();
      if (entered_by) tour.push_back(entered_by);
    }
  }
  // tour is the Eulerian circuit in reverse; the cycle reads off the first
  // symbol of each arc's tail vertex.
  CyclicSequence c;
  c.reserve(tour.size());
  for (auto it = tour.rbegin(); it != tour.rend(); ++it)
    c.push_back(d.vertex((*it)->from)[0]);
  return c;
}

// The three independent counting paths for one (n,k), with pairwise
// agreement flags. Fields missing from a run stay disengaged.
struct CountReport {
  int n = 0, k = 0;
  std::optional<BigInt> closed_form;
  std::optional<BigInt> matrix_tree;
  std::optional<BigInt> brute_force;
  std::optional<bool> agree_closed_matrix;
  std::optional<bool> agree_closed_brute;
  std::optional<bool> agree_matrix_brute;

  bool all_agree() const {
    return agree_closed_matrix.value_or(true) && agree_closed_brute.value_or(true) &&
           agree_matrix_brute.value_or(true);
  }
};

// Runs every applicable path: closed form for k <= 3, matrix-tree for k >= 2,
// and brute force when it can finish. Brute force is skipped silently when
// the arc count is over budget or the count established by the other paths
// already exceeds the abort threshold.
inline CountReport count_all(int n, int k, const TourBudget& budget = {},
                             std::size_t max_vertices = 5000) {
  detail::require_countable(n, k);
  CountReport rep;
  rep.n = n;
  rep.k = k;
  if (k <= 3) rep.closed_form = count_closed_form(n, k);
  if (k >= 2) rep.matrix_tree = count_matrix_tree(n, k, max_vertices);
  const BigInt known = rep.closed_form ? *rep.closed_form : *rep.matrix_tree;
  if (falling_factorial(n, k) <= budget.max_arcs && known <= budget.max_count)
    rep.brute_force = count_bruteforce(n, k, budget);
  if (rep.closed_form && rep.matrix_tree)
    rep.agree_closed_matrix = (*rep.closed_form == *rep.matrix_tree);
  if (rep.closed_form && rep.brute_force)
    rep.agree_closed_brute = (*rep.closed_form == *rep.brute_force);
  if (rep.matrix_tree && rep.brute_force)
    rep.agree_matrix_brute = (*rep.matrix_tree == *rep.brute_force);
  return rep;
}

}  // namespace ucycle
