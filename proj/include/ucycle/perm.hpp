#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ucycle/bigint.hpp"

namespace ucycle {

// Symbols are 1-based: a k-permutation draws k pairwise distinct values from
// [n] = {1, ..., n}. Ranks and vertex indices are 0-based throughout.
using KPermutation = std::vector<int>;

// A symbol sequence read cyclically; candidate universal cycle for P(n,k).
using CyclicSequence = std::vector<int>;

// Permutations render as concatenated decimal symbols ("231"); unambiguous
// for the desk-scale alphabets (n <= 9) this library targets.
inline std::string perm_digits(const KPermutation& p) {
  std::string s;
  for (int x : p) s += std::to_string(x);
  return s;
}

inline bool is_valid_kperm(const KPermutation& p, int n) {
  if (n < 1 || p.empty() || static_cast<int>(p.size()) > n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int s : p) {
    if (s < 1 || s > n || seen[static_cast<std::size_t>(s)]) return false;
    seen[static_cast<std::size_t>(s)] = true;
  }
  return true;
}

inline void require_valid_kperm(const KPermutation& p, int n) {
  if (!is_valid_kperm(p, n))
    throw validation_error("not a permutation of distinct symbols from [" +
                           std::to_string(n) + "]: (" + perm_digits(p) + ")");
}

// |P(n,k)| as a machine word, for dense indexing. Throws if the count does
// not fit; callers that only need the value should use falling_factorial.
inline std::uint64_t perm_count_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    const auto f = static_cast<std::uint64_t>(n - i);
    if (f != 0 && r > std::numeric_limits<std::uint64_t>::max() / f)
      throw parameter_error("|P(" + std::to_string(n) + "," + std::to_string(k) +
                            ")| does not fit in 64 bits; too large to rank");
    r *= f;
  }
  return r;
}

// Zero-based lexicographic rank of p among all |p|-permutations of [n].
// Inverse of unrank_kperm.
inline std::uint64_t rank_kperm(const KPermutation& p, int n) {
  require_valid_kperm(p, n);
  const int k = static_cast<int>(p.size());
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::uint64_t r = 0;
  for (int i = 0; i < k; ++i) {
    std::uint64_t smaller = 0;
    for (int s = 1; s < p[static_cast<std::size_t>(i)]; ++s)
      if (!used[static_cast<std::size_t>(s)]) ++smaller;
    r += smaller * perm_count_u64(n - i - 1, k - i - 1);
    used[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])] = true;
  }
  return r;
}

inline KPermutation unrank_kperm(std::uint64_t r, int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw parameter_error("unrank needs 1 <= k <= n; got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
  if (r >= perm_count_u64(n, k))
    throw std::out_of_range("rank " + std::to_string(r) + " out of range for P(" +
                            std::to_string(n) + "," + std::to_string(k) + ")");
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  KPermutation p;
  p.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const std::uint64_t suffix = perm_count_u64(n - i - 1, k - i - 1);
    const auto idx = static_cast<std::size_t>(r / suffix);
    r %= suffix;
    p.push_back(avail[idx]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return p;
}

enum class CycleDefect {
  none,
  bad_parameters,
  wrong_length,
  symbol_out_of_range,
  repeated_symbol_in_window,
  repeated_window,
};

// Verdict of a universal-cycle check. On failure `defect`, `pos` (and
// `first_pos` for a repeated window) identify the first violation scanning
// cyclic windows from position 0.
struct CycleCheck {
  bool ok = false;
  CycleDefect defect = CycleDefect::none;
  std::size_t pos = 0;        // offending window position
  std::size_t first_pos = 0;  // earlier occurrence, for repeated_window
  std::string message;

  explicit operator bool() const { return ok; }
};

// True iff the sequence has length |P(n,k)|, every cyclic window of k
// consecutive symbols is a k-permutation, and all windows are pairwise
// distinct. Never throws: malformed input yields a structured failure.
// A cycle and its reversal are distinct universal cycles; no identification
// is performed here.
inline CycleCheck is_universal_cycle(const CyclicSequence& c, int n, int k) {
  CycleCheck res;
  if (n < 1 || k < 1 || k > n) {
    res.defect = CycleDefect::bad_parameters;
    res.message = "parameters need 1 <= k <= n; got n=" + std::to_string(n) +
                  ", k=" + std::to_string(k);
    return res;
  }
  const BigInt want = falling_factorial(n, k);
  if (BigInt(c.size()) != want) {
    res.defect = CycleDefect::wrong_length;
    res.message = "length " + std::to_string(c.size()) + ", expected |P(n,k)| = " +
                  want.str();
    return res;
  }
  const std::size_t m = c.size();
  std::map<KPermutation, std::size_t> first_seen;
  std::vector<bool> in_window(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t i = 0; i < m; ++i) {
    KPermutation w(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
      w[static_cast<std::size_t>(j)] = c[(i + static_cast<std::size_t>(j)) % m];
    for (int x : w) {
      if (x < 1 || x > n) {
        res.defect = CycleDefect::symbol_out_of_range;
        res.pos = i;
        res.message = "window at position " + std::to_string(i) +
                      " contains out-of-range symbol " + std::to_string(x);
        return res;
      }
    }
    bool dup = false;
    for (int x : w) {
      if (in_window[static_cast<std::size_t>(x)]) dup = true;
      in_window[static_cast<std::size_t>(x)] = true;
    }
    for (int x : w) in_window[static_cast<std::size_t>(x)] = false;
    if (dup) {
      res.defect = CycleDefect::repeated_symbol_in_window;
      res.pos = i;
      res.message = "window (" + perm_digits(w) + ") at position " +
                    std::to_string(i) + " repeats a symbol";
      return res;
    }
    auto [it, inserted] = first_seen.emplace(std::move(w), i);
    if (!inserted) {
      res.defect = CycleDefect::repeated_window;
      res.pos = i;
      res.first_pos = it->second;
      res.message = "window (" + perm_digits(it->first) + ") repeated at positions " +
                    std::to_string(it->second) + "/" + std::to_string(i);
      return res;
    }
  }
  res.ok = true;
  return res;
}

// Lexicographically least rotation. Two sequences are rotation-equivalent
// iff their canonical rotations coincide; the map is idempotent.
inline CyclicSequence canonical_rotation(const CyclicSequence& c) {
  if (c.empty()) throw validation_error("canonical rotation of an empty sequence");
  const std::size_t m = c.size();
  std::size_t best = 0;
  for (std::size_t cand = 1; cand < m; ++cand) {
    for (std::size_t j = 0; j < m; ++j) {
      const int a = c[(cand + j) % m];
      const int b = c[(best + j) % m];
      if (a != b) {
        if (a < b) best = cand;
        break;
      }
    }
  }
  CyclicSequence out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = c[(best + j) % m];
  return out;
}

// Cycle text format: symbols as decimal integers separated by single spaces,
// no trailing separator.
inline std::string cycle_line(const CyclicSequence& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

inline CyclicSequence parse_cycle_line(const std::string& line) {
  std::istringstream in(line);
  CyclicSequence c;
  int x = 0;
  while (in >> x) c.push_back(x);
  if (!in.eof())
    throw validation_error("unparseable cycle line: expected space-separated integers");
  return c;
}

}  // namespace ucycle
