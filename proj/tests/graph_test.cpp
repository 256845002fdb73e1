#include "doctest.h"

#include <algorithm>

#include "equicolor/generate.hpp"
#include "equicolor/graph.hpp"
#include "test_support.hpp"

using namespace equicolor;

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.empty());
  CHECK(s.count() == 0);
  CHECK(s.first() == -1);
  s.set(0);
  s.set(69);
  s.set(64);
  CHECK(s.count() == 3);
  CHECK(s.test(64));
  CHECK_FALSE(s.test(63));
  CHECK(s.first() == 0);
  CHECK(s.next(0) == 64);
  CHECK(s.next(64) == 69);
  CHECK(s.next(69) == -1);
  CHECK(s.last() == 69);
  CHECK(s.to_vector() == std::vector<int>{0, 64, 69});
  s.reset(64);
  CHECK(s.count() == 2);
  CHECK(s.next(0) == 69);
}

TEST_CASE("vertex set algebra") {
  VertexSet a(10, {1, 3, 5});
  VertexSet b(10, {3, 5, 7});
  CHECK((a | b).to_vector() == std::vector<int>{1, 3, 5, 7});
  CHECK((a & b).to_vector() == std::vector<int>{3, 5});
  CHECK((a - b).to_vector() == std::vector<int>{1});
  CHECK(a.intersects(b));
  CHECK_FALSE(a.intersects(VertexSet(10, {0, 2})));
  CHECK(a.contains_all(VertexSet(10, {1, 5})));
  CHECK_FALSE(a.contains_all(b));
  CHECK(a == VertexSet(10, {1, 3, 5}));
}

TEST_CASE("graph construction and degrees") {
  Graph g = testsup::chorded_c7();
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 8);
  CHECK(g.adjacent(0, 3));
  CHECK(g.adjacent(3, 0));
  CHECK_FALSE(g.adjacent(1, 3));
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 2);
  CHECK(g.max_degree() == 3);
  CHECK(g.neighbors(3).to_vector() == std::vector<int>{0, 2, 4});

  auto edges = g.edges();
  CHECK(edges.size() == 8);
  CHECK(std::is_sorted(edges.begin(), edges.end()));
  for (auto [u, v] : edges) CHECK(u < v);
}

TEST_CASE("components ordered by smallest member") {
  Graph g = testsup::two_triangles();
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].to_vector() == std::vector<int>{0, 1, 2});
  CHECK(comps[1].to_vector() == std::vector<int>{3, 4, 5});

  Graph lone(1);
  auto single = components(lone);
  REQUIRE(single.size() == 1);
  CHECK(single[0].to_vector() == std::vector<int>{0});
}

TEST_CASE("edges between vertex sets") {
  Graph g = testsup::chorded_c7();
  CHECK(edges_between(g, VertexSet(7, {3}), VertexSet(7, {1, 4, 6})) == 1);
  CHECK(edges_between(g, VertexSet(7, {0, 1, 2}), VertexSet(7, {3, 4})) == 2);

  Graph tt = testsup::two_triangles();
  VertexSet tri(6, {0, 1, 2});
  // both arguments the same set: just the internal edge count
  CHECK(edges_between(tt, tri, tri) == 3);
  CHECK(edges_between(tt, tri, VertexSet(6, {3, 4, 5})) == 0);
  // overlap counts each edge once
  CHECK(edges_between(tt, VertexSet(6, {0, 1}), VertexSet(6, {1, 2})) == 3);
}

TEST_CASE("degree window") {
  SUBCASE("chorded 7-cycle is inside") {
    WindowStatus ws = window_check(testsup::chorded_c7());
    CHECK(ws.order == 7);
    CHECK(ws.max_degree == 3);
    CHECK(ws.in_window);
    CHECK_FALSE(ws.forbidden_component.has_value());
  }
  SUBCASE("K_33 just misses 2*max_degree < order") {
    WindowStatus ws = window_check(testsup::k33());
    CHECK(ws.max_degree == 3);
    CHECK_FALSE(ws.in_window);
  }
  SUBCASE("3-cube is inside") {
    Graph q3 = generate(GenSpec::parse("hypercube:3"));
    WindowStatus ws = window_check(q3);
    CHECK(ws.order == 8);
    CHECK(ws.max_degree == 3);
    CHECK(ws.in_window);
    CHECK_FALSE(ws.forbidden_component.has_value());
  }
  SUBCASE("C_7 falls below the degree floor") {
    CHECK_FALSE(window_check(generate(GenSpec::parse("cycle:7"))).in_window);
  }
  SUBCASE("small orders are excluded") {
    CHECK_FALSE(window_check(generate(GenSpec::parse("cycle:5"))).in_window);
  }
  SUBCASE("K_4 plus K_3 is inside but has a forbidden component") {
    WindowStatus ws = window_check(testsup::k4_plus_k3());
    CHECK(ws.in_window);
    REQUIRE(ws.forbidden_component.has_value());
    CHECK(ws.forbidden_component->to_vector() ==
          std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("complete graphs are their own forbidden component") {
    WindowStatus ws = window_check(generate(GenSpec::parse("complete:6")));
    CHECK_FALSE(ws.in_window);
    REQUIRE(ws.forbidden_component.has_value());
    CHECK(ws.forbidden_component->count() == 6);
  }
}
