#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "ucycle/digraph.hpp"

using namespace ucycle;

TEST_CASE("k=2 digraphs are complete digraphs", "[digraph]") {
  const TransitionDigraph d(4, 2);
  CHECK(d.vertex_count() == 4);
  CHECK(d.arc_count() == 12);
  for (std::size_t v = 0; v < d.vertex_count(); ++v)
    CHECK(d.out_arcs(v).size() == 3);

  const ExactMatrix expect_a =
      ExactMatrix::ones(4) - ExactMatrix::identity(4);
  CHECK(d.adjacency_matrix() == expect_a);
  const ExactMatrix expect_l =
      BigInt(4) * ExactMatrix::identity(4) - ExactMatrix::ones(4);
  CHECK(d.laplacian_matrix() == expect_l);

  const TransitionDigraph d3(3, 2);
  CHECK(d3.vertex_count() == 3);
  CHECK(d3.arc_count() == 6);
  CHECK(d3.adjacency_matrix() ==
        ExactMatrix::ones(3) - ExactMatrix::identity(3));
}

TEST_CASE("k=3 digraph shape", "[digraph]") {
  const TransitionDigraph d(4, 3);
  CHECK(d.vertex_count() == 12);
  CHECK(d.arc_count() == 24);

  const ExactMatrix a = d.adjacency_matrix();
  for (std::size_t i = 0; i < 12; ++i) {
    BigInt row_sum = 0;
    for (std::size_t j = 0; j < 12; ++j) row_sum += a(i, j);
    CHECK(row_sum == 2);  // out-degree n-2
  }

  const ExactMatrix l = d.laplacian_matrix();
  for (std::size_t i = 0; i < 12; ++i) {
    BigInt row_sum = 0;
    for (std::size_t j = 0; j < 12; ++j) {
      row_sum += l(i, j);
      if (i == j)
        CHECK(l(i, j) == 2);
      else
        CHECK((l(i, j) == 0 || l(i, j) == -1));
    }
    CHECK(row_sum == 0);
  }
}

TEST_CASE("arc labels biject onto P(n,k)", "[digraph]") {
  for (auto [n, k] : {std::pair{4, 2}, {4, 3}, {5, 3}, {5, 4}}) {
    const TransitionDigraph d(n, k);
    std::vector<KPermutation> labels;
    for (std::size_t v = 0; v < d.vertex_count(); ++v)
      for (const Arc& a : d.out_arcs(v)) labels.push_back(d.arc_label(a));
    std::sort(labels.begin(), labels.end());
    CHECK(labels == oracle::lex_kperms(n, k));
  }
}

TEST_CASE("every transition digraph is balanced and strongly connected",
          "[digraph]") {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      const TransitionDigraph d(n, k);
      INFO("n=" << n << " k=" << k);
      CHECK(BigInt(d.vertex_count()) == falling_factorial(n, k - 1));
      CHECK(BigInt(d.arc_count()) == falling_factorial(n, k));
      const DegreeProfile prof = d.degree_profile();
      CHECK(prof.balanced());
      for (std::size_t deg : prof.out_degree)
        CHECK(deg == static_cast<std::size_t>(n - k + 1));
      CHECK(d.is_balanced());
      CHECK(d.is_strongly_connected());
    }
  }
}

TEST_CASE("out-of-range parameters are rejected", "[digraph]") {
  CHECK_THROWS_AS(TransitionDigraph(4, 1), parameter_error);
  CHECK_THROWS_AS(TransitionDigraph(4, 4), parameter_error);
  CHECK_THROWS_AS(TransitionDigraph(4, 5), parameter_error);
  CHECK_THROWS_WITH(TransitionDigraph(3, 3),
                    Catch::Matchers::ContainsSubstring("k < n"));
}

TEST_CASE("degenerate connectivity and balance checks", "[digraph]") {
  CHECK(strongly_connected({}));
  CHECK(strongly_connected({{}}));            // one vertex, no arcs
  CHECK_FALSE(strongly_connected({{}, {}}));  // two isolated vertices
  CHECK(strongly_connected({{1}, {0}}));
  CHECK_FALSE(strongly_connected({{1}, {}}));

  DegreeProfile empty;
  CHECK(empty.balanced());
  DegreeProfile skewed{{1, 0}, {0, 1}};
  CHECK_FALSE(skewed.balanced());
}

TEST_CASE("digraph dump format", "[digraph]") {
  std::ostringstream os;
  TransitionDigraph(3, 2).dump(os);
  CHECK(os.str() ==
        "1 -> 2 : 12\n"
        "1 -> 3 : 13\n"
        "2 -> 1 : 21\n"
        "2 -> 3 : 23\n"
        "3 -> 1 : 31\n"
        "3 -> 2 : 32\n");

  std::ostringstream os43;
  TransitionDigraph(4, 3).dump(os43);
  const std::string dump = os43.str();
  CHECK(dump.find("12 -> 23 : 123\n") != std::string::npos);
  CHECK(dump.find("12 -> 24 : 124\n") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 24);
}
