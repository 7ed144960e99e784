// Acceptance suite: every release gate in one binary, one pass/fail line per
// criterion. All comparisons are exact integer equalities. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ucycle/ucycle.hpp"

namespace {

using namespace ucycle;
using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int number, const std::string& title, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  bool ok = false;
  const auto start = Clock::now();
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_s > 0 && secs >= time_limit_s) {
    ok = false;
    note += (note.empty() ? "" : "; ") + std::string("exceeded time limit of ") +
            std::to_string(time_limit_s) + "s";
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << number << "] " << title << " ("
            << secs << "s)";
  if (!note.empty()) std::cout << " :: " << note;
  std::cout << "\n"
            << std::flush;
}

BigInt k2_closed(int n) { return big_pow(n, n - 2) * big_pow(factorial(n - 2), n); }

BigInt k3_closed(int n) {
  const int half = (n - 1) * (n - 2) / 2;
  return big_pow(n - 3, half) * big_pow(n - 2, n - 1) * big_pow(n - 1, half - 2) *
         big_pow(n, n - 2) * big_pow(factorial(n - 3), n * (n - 1));
}

}  // namespace

int main() {
  criterion(1, "k=2 counts: brute force = matrix-tree = closed form, n=3,4,5", 30,
            [](std::string& note) {
              const BigInt expected[] = {3, 256, 972000};
              for (int n = 3; n <= 5; ++n) {
                const BigInt closed = k2_closed(n);
                const BigInt mt = count_matrix_tree(n, 2);
                const BigInt bf = count_bruteforce(n, 2);
                if (closed != expected[n - 3] || mt != closed || bf != closed) {
                  note = "n=" + std::to_string(n) + ": closed=" + closed.str() +
                         " matrix_tree=" + mt.str() + " brute=" + bf.str();
                  return false;
                }
              }
              return true;
            });

  criterion(2, "k=2 counts at scale: matrix-tree = closed form, n=6,7,8", 10,
            [](std::string& note) {
              for (int n = 6; n <= 8; ++n) {
                const BigInt closed = k2_closed(n);
                const BigInt mt = count_matrix_tree(n, 2);
                if (mt != closed) {
                  note = "n=" + std::to_string(n) + ": matrix_tree=" + mt.str() +
                         " closed=" + closed.str();
                  return false;
                }
              }
              return true;
            });

  criterion(3, "k=3 counts: brute force = matrix-tree = 384 at n=4", 10,
            [](std::string& note) {
              const BigInt mt = count_matrix_tree(4, 3);
              const BigInt bf = count_bruteforce(4, 3);
              if (mt != 384 || bf != 384) {
                note = "matrix_tree=" + mt.str() + " brute=" + bf.str();
                return false;
              }
              return true;
            });

  criterion(4, "k=3 counts at scale: matrix-tree = closed form, n=5,6,7", 60,
            [](std::string& note) {
              if (k3_closed(5) != BigInt("173946175488000")) {
                note = "closed form at n=5 is not 173946175488000";
                return false;
              }
              for (int n = 5; n <= 7; ++n) {
                const BigInt closed = k3_closed(n);
                const BigInt mt = count_matrix_tree(n, 3);
                if (mt != closed) {
                  note = "n=" + std::to_string(n) + ": matrix_tree=" + mt.str() +
                         " closed=" + closed.str();
                  return false;
                }
              }
              return true;
            });

  criterion(5, "quartic adjacency identity holds entrywise, n=4..8", 60,
            [](std::string& note) {
              for (int n = 4; n <= 8; ++n) {
                const CheckResult r = verify_adjacency_polynomial(n);
                if (!r.pass) {
                  note = "n=" + std::to_string(n) + ": " + r.detail;
                  return false;
                }
              }
              return true;
            });

  criterion(6, "walk-count table: all seven cases over the full pair sweep, n=5..8",
            0, [](std::string& note) {
              for (int n = 5; n <= 8; ++n) {
                const WalkTableResult r = verify_walk_counts(n);
                if (!r.pass) {
                  for (const auto& c : r.cases)
                    if (!c.pass) note += c.pattern + std::string(" ");
                  note = "n=" + std::to_string(n) + " failing cases: " + note;
                  return false;
                }
              }
              return true;
            });

  criterion(7, "eigenvalue multiplicities and traces via exact ranks, n=4..8", 0,
            [](std::string& note) {
              for (int n = 4; n <= 8; ++n) {
                const MultiplicityReport r = eigenvalue_multiplicities(n);
                const bool closed =
                    r.s1 == static_cast<std::size_t>((n - 1) * (n - 2) / 2) &&
                    r.s2 == static_cast<std::size_t>(n * (n - 3) / 2) &&
                    r.s3 == static_cast<std::size_t>(n - 1);
                const bool traces = r.trace_a == 0 && r.trace_a2 == 0 &&
                                    r.trace_a3 == BigInt(n) * (n - 1) * (n - 2);
                if (!closed || !traces || !r.pass()) {
                  note = "n=" + std::to_string(n) + ": s1=" + std::to_string(r.s1) +
                         " s2=" + std::to_string(r.s2) + " s3=" + std::to_string(r.s3);
                  return false;
                }
              }
              return true;
            });

  criterion(8, "k=3 Laplacian eigenvalue product = |V| * cof(L), n=4..8", 0,
            [](std::string& note) {
              for (int n = 4; n <= 8; ++n) {
                const CheckResult r = verify_k3_spectrum_product(n);
                if (!r.pass) {
                  note = "n=" + std::to_string(n) + ": " + r.detail;
                  return false;
                }
              }
              return true;
            });

  criterion(9, "construction round-trip: 100 seeds per (n,k), k < n <= 6", 0,
            [](std::string& note) {
              const CycleCheck paper =
                  is_universal_cycle({1, 2, 3, 4, 1, 3, 2, 4, 2, 1, 4, 3}, 4, 2);
              if (!paper.ok) {
                note = "documented (4,2) example rejected: " + paper.message;
                return false;
              }
              for (int n = 2; n <= 6; ++n) {
                for (int k = 1; k < n; ++k) {
                  for (std::uint64_t seed = 0; seed < 100; ++seed) {
                    const CycleCheck res =
                        is_universal_cycle(generate_cycle(n, k, seed), n, k);
                    if (!res.ok) {
                      note = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                             " seed=" + std::to_string(seed) + ": " + res.message;
                      return false;
                    }
                  }
                }
              }
              return true;
            });

  criterion(10, "enumeration is complete: 3 / 256 / 384 distinct canonical cycles",
            0, [](std::string& note) {
              const std::vector<std::pair<std::pair<int, int>, std::size_t>> want =
                  {{{3, 2}, 3}, {{4, 2}, 256}, {{4, 3}, 384}};
              for (const auto& [nk, expected] : want) {
                std::set<CyclicSequence> seen;
                std::size_t emitted = 0;
                enumerate_all(nk.first, nk.second, TourBudget{},
                              [&](const CyclicSequence& c) {
                                ++emitted;
                                seen.insert(canonical_rotation(c));
                              });
                if (emitted != expected || seen.size() != expected) {
                  note = "(" + std::to_string(nk.first) + "," +
                         std::to_string(nk.second) + "): emitted " +
                         std::to_string(emitted) + ", distinct " +
                         std::to_string(seen.size()) + ", expected " +
                         std::to_string(expected);
                  return false;
                }
              }
              return true;
            });

  criterion(11, "digraphs balanced + strongly connected, out-degree n-k+1, n<=7",
            0, [](std::string& note) {
              for (int n = 3; n <= 7; ++n) {
                for (int k = 2; k < n; ++k) {
                  const TransitionDigraph d(n, k);
                  const DegreeProfile prof = d.degree_profile();
                  bool degrees_ok = prof.balanced();
                  for (std::size_t deg : prof.out_degree)
                    degrees_ok = degrees_ok && deg == static_cast<std::size_t>(n - k + 1);
                  if (!degrees_ok || !d.is_strongly_connected()) {
                    note = "n=" + std::to_string(n) + " k=" + std::to_string(k);
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(12, "k=4 self-consistency: all cofactors of (5,4) and (6,4) agree", 0,
            [](std::string& note) {
              BigInt counts[2];
              int idx = 0;
              for (int n : {5, 6}) {
                counts[idx++] = count_matrix_tree(n, 4);
                const ExactMatrix l = TransitionDigraph(n, 4).laplacian_matrix();
                const BigInt first = l.cofactor(0, 0);
                for (std::size_t i = 1; i < l.rows(); ++i) {
                  if (l.cofactor(i, i) != first) {
                    note = "n=" + std::to_string(n) + ": cofactor " +
                           std::to_string(i) + " differs";
                    return false;
                  }
                }
              }
              note = "count(5,4)=" + counts[0].str() + ", count(6,4)=" + counts[1].str();
              return true;
            });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}
