#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "ucycle/exact_matrix.hpp"
#include "ucycle/perm.hpp"

namespace ucycle {

// One arc of a transition digraph. The arc from u = i1..i(k-1) to
// v = i2..i(k-1)x stands for the k-permutation i1..i(k-1)x; `appended` is x.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  int appended = 0;
};

struct DegreeProfile {
  std::vector<std::size_t> out_degree, in_degree;

  bool balanced() const { return out_degree == in_degree; }
};

// Reachability in both directions from vertex 0. A single vertex (or empty
// graph) is trivially strongly connected.
inline bool strongly_connected(const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t m = succ.size();
  if (m <= 1) return true;
  std::vector<std::vector<std::size_t>> pred(m);
  for (std::size_t v = 0; v < m; ++v)
    for (std::size_t w : succ[v]) pred[w].push_back(v);
  auto reaches_all = [m](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(m, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t found = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          ++found;
          stack.push_back(w);
        }
      }
    }
    return found == m;
  };
  return reaches_all(succ) && reaches_all(pred);
}

// The transition digraph of P(n,k): vertices are the (k-1)-permutations of
// [n] in lexicographic order, and there is an arc u -> v exactly when v
// continues u by one fresh symbol (the windows of a universal cycle walk
// along these arcs). Arc labels are a bijection onto P(n,k). Immutable after
// construction.
class TransitionDigraph {
 public:
  // Requires 2 <= k < n. Universal cycles exist for every k < n; k = n is
  // rejected because the resulting digraph would have no Eulerian tour, and
  // k = 1 never needs a digraph at all.
  TransitionDigraph(int n, int k) : n_(n), k_(k) {
    if (k < 2 || k >= n)
      throw parameter_error(
          "transition digraph needs 2 <= k < n (universal cycles exist exactly "
          "for k < n; counting for k = 1 has a direct formula); got n=" +
          std::to_string(n) + ", k=" + std::to_string(k));
    const std::uint64_t nv = perm_count_u64(n, k - 1);
    verts_.reserve(nv);
    out_.resize(nv);
    for (std::uint64_t i = 0; i < nv; ++i)
      verts_.push_back(unrank_kperm(i, n, k - 1));
    std::vector<bool> in_tail(static_cast<std::size_t>(n) + 1, false);
    for (std::uint64_t i = 0; i < nv; ++i) {
      const KPermutation& u = verts_[i];
      for (int s : u) in_tail[static_cast<std::size_t>(s)] = true;
      KPermutation head(u.begin() + 1, u.end());
      head.push_back(0);
      for (int x = 1; x <= n; ++x) {
        if (in_tail[static_cast<std::size_t>(x)]) continue;
        head.back() = x;
        out_[i].push_back(Arc{i, rank_kperm(head, n), x});  // ascending in x
      }
      for (int s : u) in_tail[static_cast<std::size_t>(s)] = false;
      arc_count_ += out_[i].size();
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  const KPermutation& vertex(std::size_t i) const { return verts_[i]; }
  const std::vector<Arc>& out_arcs(std::size_t v) const { return out_[v]; }

  // The k-permutation the arc stands for.
  KPermutation arc_label(const Arc& a) const {
    KPermutation l = verts_[a.from];
    l.push_back(a.appended);
    return l;
  }

  DegreeProfile degree_profile() const {
    DegreeProfile p;
    p.out_degree.resize(verts_.size(), 0);
    p.in_degree.resize(verts_.size(), 0);
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      p.out_degree[v] = out_[v].size();
      for (const Arc& a : out_[v]) ++p.in_degree[a.to];
    }
    return p;
  }

  bool is_balanced() const { return degree_profile().balanced(); }

  bool is_strongly_connected() const {
    std::vector<std::vector<std::size_t>> succ(verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v)
      for (const Arc& a : out_[v]) succ[v].push_back(a.to);
    return strongly_connected(succ);
  }

  // 0/1 adjacency matrix in lexicographic vertex order.
  ExactMatrix adjacency_matrix() const {
    ExactMatrix a(verts_.size(), verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v)
      for (const Arc& arc : out_[v]) a(v, arc.to) = 1;
    return a;
  }

  // L = T - A with T the diagonal matrix of out-degrees; every row sums to 0.
  ExactMatrix laplacian_matrix() const {
    ExactMatrix l(verts_.size(), verts_.size());
    for (std::size_t v = 0; v < verts_.size(); ++v) {
      for (const Arc& arc : out_[v]) l(v, arc.to) -= 1;
      l(v, v) += static_cast<int>(out_[v].size());
    }
    return l;
  }

  // One arc per line, "u -> v : label", vertices in lexicographic order and
  // arcs by ascending appended symbol.
  void dump(std::ostream& os) const {
    for (std::size_t v = 0; v < verts_.size(); ++v)
      for (const Arc& a : out_[v])
        os << perm_digits(verts_[v]) << " -> " << perm_digits(verts_[a.to]) << " : "
           << perm_digits(arc_label(a)) << "\n";
  }

 private:
  int n_ = 0, k_ = 0;
  std::vector<KPermutation> verts_;
  std::vector<std::vector<Arc>> out_;
  std::size_t arc_count_ = 0;
};

}  // namespace ucycle
