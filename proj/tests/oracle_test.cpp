#include "doctest.h"

#include <algorithm>
#include <array>

#include "equicolor/generate.hpp"
#include "equicolor/oracle.hpp"
#include "test_support.hpp"

using namespace equicolor;

namespace {

// independent ground truth by brute force over all k^n labelings
bool naive_equitable(const Graph& g, int k) {
  int n = g.order();
  std::vector<int> label(n, 0);
  while (true) {
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (label[u] == label[v]) proper = false;
    if (proper) {
      std::vector<int> size(k, 0);
      for (int v = 0; v < n; ++v) ++size[label[v]];
      auto [mn, mx] = std::minmax_element(size.begin(), size.end());
      if (*mn >= 1 && *mx - *mn <= 1) return true;
    }
    int i = 0;
    while (i < n && label[i] == k - 1) label[i++] = 0;
    if (i == n) return false;
    ++label[i];
  }
}

int naive_alpha(const Graph& g) {
  int n = g.order();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ind = true;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) ind = false;
    if (ind) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

}  // namespace

TEST_CASE("equitable decisions on K_33") {
  Graph g = testsup::k33();
  auto two = decide_equitable(g, 2);
  REQUIRE(two.has_value());
  CHECK(verify(g, *two, 2).ok());

  CHECK_FALSE(decide_equitable(g, 3).has_value());

  auto four = decide_equitable(g, 4);
  REQUIRE(four.has_value());
  CHECK(verify(g, *four, 4).ok());
}

TEST_CASE("equitable decisions on odd cycles and cliques") {
  Graph c5 = generate(GenSpec::parse("cycle:5"));
  CHECK_FALSE(decide_equitable(c5, 2).has_value());
  auto three = decide_equitable(c5, 3);
  REQUIRE(three.has_value());
  CHECK(verify(c5, *three, 3).ok());

  Graph k6 = generate(GenSpec::parse("complete:6"));
  for (int k = 1; k < 6; ++k) CHECK_FALSE(decide_equitable(k6, k).has_value());
  CHECK(decide_equitable(k6, 6).has_value());
}

TEST_CASE("exact parameters of named graphs") {
  ExactParams c5 = exact_params(generate(GenSpec::parse("cycle:5")));
  CHECK(c5.chi == 3);
  CHECK(c5.chi_eq == 3);
  CHECK(c5.chi_eq_star == 3);
  CHECK(c5.alpha == 2);
  CHECK(exact_params_to_json(c5) ==
        R"({"chi":3,"chi_eq":3,"chi_eq_star":3,"alpha":2})");

  // the classic witness that the equitable threshold can exceed chi_eq:
  // K_33 colors equitably with 2 classes but not with 3
  ExactParams k33 = exact_params(testsup::k33());
  CHECK(k33.chi == 2);
  CHECK(k33.chi_eq == 2);
  CHECK(k33.chi_eq_star == 4);
  CHECK(k33.alpha == 3);

  ExactParams k6 = exact_params(generate(GenSpec::parse("complete:6")));
  CHECK(k6.chi == 6);
  CHECK(k6.chi_eq == 6);
  CHECK(k6.chi_eq_star == 6);
  CHECK(k6.alpha == 1);

  ExactParams p4 = exact_params(generate(GenSpec::parse("path:4")));
  CHECK(p4.chi == 2);
  CHECK(p4.chi_eq == 2);
  CHECK(p4.chi_eq_star == 2);
  CHECK(p4.alpha == 2);
}

TEST_CASE("oracle agrees with naive enumeration on all 4-vertex graphs") {
  const std::array<std::pair<int, int>, 6> pairs = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    Graph g = Graph::from_edges(4, edges);
    CAPTURE(mask);
    for (int k = 1; k <= 4; ++k) {
      auto got = decide_equitable(g, k);
      CHECK(got.has_value() == naive_equitable(g, k));
      if (got) CHECK(verify(g, *got, k).ok());
    }
    CHECK(independence_number(g) == naive_alpha(g));
  }
}

TEST_CASE("independence numbers") {
  CHECK(independence_number(generate(GenSpec::parse("cycle:5"))) == 2);
  CHECK(independence_number(testsup::k33()) == 3);
  CHECK(independence_number(Graph(5)) == 5);
  CHECK(independence_number(generate(GenSpec::parse("complete:6"))) == 1);
}

TEST_CASE("order cap guards against runaway searches") {
  Graph p17 = generate(GenSpec::parse("path:17"));
  CHECK_THROWS_AS(decide_equitable(p17, 9), precondition_error);
  OracleLimits wide{20};
  auto c = decide_equitable(p17, 9, wide);
  REQUIRE(c.has_value());
  CHECK(verify(p17, *c, 9).ok());

  Graph c5 = generate(GenSpec::parse("cycle:5"));
  CHECK_THROWS_AS(decide_equitable(c5, 6), precondition_error);
  CHECK_THROWS_AS(decide_equitable(c5, 0), precondition_error);
}

TEST_CASE("degenerate orders") {
  ExactParams empty = exact_params(Graph(0));
  CHECK(empty.chi == 0);
  CHECK(empty.chi_eq == 0);
  CHECK(empty.chi_eq_star == 0);
  CHECK(empty.alpha == 0);

  ExactParams one = exact_params(Graph(1));
  CHECK(one.chi == 1);
  CHECK(one.chi_eq == 1);
  CHECK(one.chi_eq_star == 1);
  CHECK(one.alpha == 1);
}
