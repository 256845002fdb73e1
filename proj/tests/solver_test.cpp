#include "doctest.h"

#include <algorithm>

#include "equicolor/generate.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/solver.hpp"
#include "test_support.hpp"

using namespace equicolor;

namespace {

std::vector<int> sorted_sizes(const Coloring& c) {
  std::vector<int> sizes;
  for (const auto& cls : c.classes()) sizes.push_back(cls.count());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

TEST_CASE("full pipeline on the chorded 7-cycle") {
  Graph g = testsup::chorded_c7();
  SolveOutcome out = equitable_delta(g);
  REQUIRE(out.ok());
  REQUIRE(out.result.has_value());
  CHECK(out.result->k == 3);
  CHECK(out.sigma == 3);
  CHECK(out.result->after_search == Profile{2, 0, 1});
  CHECK(out.result->after_split == Profile{2, 0, 1});
  CHECK(out.result->after_balance == Profile{1, 2, 0});
  CHECK(sorted_sizes(out.result->coloring) == std::vector<int>{2, 2, 3});
  CHECK(verify(g, out.result->coloring, 3).ok());
  CHECK_FALSE(out.stall.has_value());
}

TEST_CASE("full pipeline on the 3-cube") {
  Graph g = generate(GenSpec::parse("hypercube:3"));
  SolveOutcome out = equitable_delta(g);
  REQUIRE(out.ok());
  CHECK(out.result->k == 3);
  CHECK(out.result->after_search == Profile{2, 1, 0});
  CHECK(out.result->after_balance == Profile{2, 1, 0});
  CHECK(out.result->trace.steps.size() >= 1);
  CHECK(sorted_sizes(out.result->coloring) == std::vector<int>{2, 3, 3});
  CHECK(verify(g, out.result->coloring, 3).ok());
}

TEST_CASE("window refusals") {
  SUBCASE("K_33 sits on the boundary") {
    SolveOutcome out = equitable_delta(testsup::k33());
    CHECK(out.status == SolveStatus::out_of_window);
    CHECK_FALSE(out.result.has_value());
    REQUIRE(out.window.has_value());
    CHECK_FALSE(out.window->in_window);
    CHECK(solve_outcome_to_json(out) ==
          R"({"status":"out_of_window",)"
          R"("window":{"order":6,"max_degree":3,"in_window":false,)"
          R"("forbidden_component":null},)"
          R"("message":"degree window requires |G|>=6, 3*max_degree>=|G|+1 )"
          R"(and 2*max_degree<|G|; got |G|=6, max_degree=3"})");
  }
  SUBCASE("small graphs are refused") {
    CHECK(equitable_delta(generate(GenSpec::parse("cycle:5"))).status ==
          SolveStatus::out_of_window);
  }
  SUBCASE("a complete component of the wrong size blocks the pipeline") {
    SolveOutcome out = equitable_delta(testsup::k4_plus_k3());
    CHECK(out.status == SolveStatus::forbidden_component);
    REQUIRE(out.window.has_value());
    CHECK(out.window->in_window);
    REQUIRE(out.window->forbidden_component.has_value());
    CHECK(out.window->forbidden_component->to_vector() ==
          std::vector<int>{0, 1, 2, 3});
  }
}

TEST_CASE("requested k routes through the right path") {
  Graph g = testsup::chorded_c7();
  SUBCASE("k equal to max degree matches the main pipeline") {
    SolveOutcome out = equitable_k(g, 3);
    REQUIRE(out.ok());
    CHECK(out.sigma == 3);
    CHECK(sorted_sizes(out.result->coloring) == std::vector<int>{2, 2, 3});
    CHECK(verify(g, out.result->coloring, 3).ok());
  }
  SUBCASE("k above max degree always succeeds") {
    SolveOutcome out = equitable_k(g, 4);
    REQUIRE(out.ok());
    CHECK_FALSE(out.sigma.has_value());
    CHECK(out.result->after_search == std::nullopt);
    CHECK(sorted_sizes(out.result->coloring) ==
          std::vector<int>{1, 2, 2, 2});
    CHECK(verify(g, out.result->coloring, 4).ok());
  }
  SUBCASE("k equal to the order gives all singletons") {
    SolveOutcome out = equitable_k(g, 7);
    REQUIRE(out.ok());
    CHECK(sorted_sizes(out.result->coloring) ==
          std::vector<int>{1, 1, 1, 1, 1, 1, 1});
  }
  SUBCASE("k below what the search reaches is unsupported") {
    SolveOutcome out = equitable_k(g, 1);
    CHECK(out.status == SolveStatus::unsupported);
    CHECK(out.sigma == 3);
    CHECK(out.message.find("not a proof") != std::string::npos);
  }
  SUBCASE("k outside 1..n is invalid") {
    CHECK(equitable_k(g, 0).status == SolveStatus::invalid_k);
    CHECK(equitable_k(g, 8).status == SolveStatus::invalid_k);
    CHECK(equitable_k(g, -2).status == SolveStatus::invalid_k);
  }
}

TEST_CASE("K_6 with k=3 is unsupported, not refuted") {
  Graph k6 = generate(GenSpec::parse("complete:6"));
  SolveOutcome out = equitable_k(k6, 3);
  CHECK(out.status == SolveStatus::unsupported);
  CHECK(out.sigma == 6);

  SolveOutcome full = equitable_k(k6, 6);
  REQUIRE(full.ok());
  CHECK(sorted_sizes(full.result->coloring) ==
        std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("window gating happens after the search") {
  // sigma = 2 <= k, so the request survives to the window check and is
  // reported as out of window rather than unsupported
  Graph g = testsup::k33();
  SolveOutcome out = equitable_k(g, 3);
  CHECK(out.status == SolveStatus::out_of_window);
  CHECK(out.sigma == 2);

  SolveOutcome viaHeuristic = equitable_k(g, 4);
  REQUIRE(viaHeuristic.ok());
  CHECK(sorted_sizes(viaHeuristic.result->coloring) ==
        std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("balanced recoloring above the degree bound") {
  SUBCASE("complete graph") {
    Graph k4 = generate(GenSpec::parse("complete:4"));
    Coloring c = hs_delta_plus_one(k4);
    CHECK(verify(k4, c, 4).ok());
    CHECK(sorted_sizes(c) == std::vector<int>{1, 1, 1, 1});
  }
  SUBCASE("odd cycle") {
    Graph c5 = generate(GenSpec::parse("cycle:5"));
    Coloring c = hs_delta_plus_one(c5);
    CHECK(verify(c5, c, 3).ok());
    CHECK(sorted_sizes(c) == std::vector<int>{1, 2, 2});
  }
  SUBCASE("bipartite") {
    Graph g = testsup::k33();
    Coloring c = hs_delta_plus_one(g);
    CHECK(verify(g, c, 4).ok());
    CHECK(sorted_sizes(c) == std::vector<int>{1, 1, 2, 2});
  }
  SUBCASE("single vertex") {
    Graph one(1);
    Coloring c = hs_delta_plus_one(one);
    CHECK(verify(one, c, 1).ok());
  }
  SUBCASE("hub with many isolated vertices") {
    Graph g = testsup::hub13();
    Coloring c = hs_equitable(g, 7);
    CHECK(verify(g, c, 7).ok());
    CHECK(sorted_sizes(c) == std::vector<int>{1, 2, 2, 2, 2, 2, 2});
  }
  SUBCASE("preconditions") {
    Graph c5 = generate(GenSpec::parse("cycle:5"));
    CHECK_THROWS_AS(hs_equitable(c5, 2), precondition_error);
    CHECK_THROWS_AS(hs_equitable(c5, 6), precondition_error);
    CHECK_THROWS_AS(hs_equitable(Graph(0), 1), precondition_error);
  }
}

TEST_CASE("balanced recoloring succeeds on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generate(GenSpec::parse("gnp:12:0.3"), seed);
    int k = g.max_degree() + 1;
    if (k > g.order()) continue;
    Coloring c = hs_equitable(g, k);
    CAPTURE(seed);
    CHECK(verify(g, c, k).ok());
  }
}

TEST_CASE("stall certificates serialize") {
  StallCertificate cert;
  cert.graph = testsup::k33();
  std::vector<VertexSet> classes = {VertexSet(6, {0, 1, 2}),
                                    VertexSet(6, {3, 4, 5})};
  cert.coloring = Coloring(6, classes);
  cert.profile = Profile{2, 0, 0};
  cert.radius = 4;
  cert.audit = audit_maximal_properties(cert.graph, cert.coloring);
  CHECK(stall_certificate_to_json(cert) ==
        R"({"graph6":"EFz_","order":6,"max_degree":3,"radius":4,)"
        R"("sigma":2,"profile":[2,0,0],"classes":[[0,1,2],[3,4,5]],)"
        R"("audit":{"clean":true,"violations":[]}})");
}

TEST_CASE("outcome json carries the stage profiles") {
  Graph g = testsup::chorded_c7();
  std::string j = solve_outcome_to_json(equitable_delta(g));
  CHECK(j.find(R"("status":"ok")") != std::string::npos);
  CHECK(j.find(R"("k":3)") != std::string::npos);
  CHECK(j.find(R"("after_search":[2,0,1])") != std::string::npos);
  CHECK(j.find(R"("after_split":[2,0,1])") != std::string::npos);
  CHECK(j.find(R"("after_balance":[1,2,0])") != std::string::npos);
  CHECK(j.find(R"("sigma":3)") != std::string::npos);
  // byte-identical across repeated runs
  CHECK(j == solve_outcome_to_json(equitable_delta(g)));
}
