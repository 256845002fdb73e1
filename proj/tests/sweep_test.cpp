#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "equicolor/formats.hpp"
#include "equicolor/sweep.hpp"
#include "test_support.hpp"

using namespace equicolor;

TEST_CASE("sweep buckets every line") {
  std::vector<std::string> lines = {
      to_graph6(testsup::chorded_c7()),    // solvable
      to_graph6(testsup::k33()),           // out of window
      to_graph6(testsup::k4_plus_k3()),    // forbidden component
      "!!!",                               // parse failure
      to_graph6(testsup::two_triangles()), // out of window
  };
  SweepReport rep = sweep(lines);
  CHECK(rep.total == 5);
  CHECK(rep.solved == 1);
  CHECK(rep.out_of_window == 2);
  CHECK(rep.forbidden_component == 1);
  CHECK(rep.parse_failures == 1);
  CHECK(rep.stalls == 0);
  CHECK(rep.verify_failures == 0);
  CHECK(rep.clean());
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].index == 3);
  CHECK(rep.failures[0].kind == "parse");
  CHECK(rep.elapsed_seconds < 0);

  std::string j = sweep_to_json(rep);
  CHECK(j.find("\"elapsed_seconds\"") == std::string::npos);
  CHECK(j.find("\"clean\":true") != std::string::npos);
}

TEST_CASE("sweep output does not depend on the thread count") {
  auto lines = testsup::load_lines(testsup::fixture_path("graphs_n7.g6"), 300);
  SweepOptions serial;
  SweepOptions wide;
  wide.jobs = 4;
  std::string a = sweep_to_json(sweep(lines, serial));
  std::string b = sweep_to_json(sweep(lines, wide));
  CHECK(a == b);
  CHECK(a == sweep_to_json(sweep(lines, serial)));
}

TEST_CASE("oracle cross-checking stays quiet on good output") {
  auto lines = testsup::load_lines(testsup::fixture_path("graphs_n7.g6"), 120);
  SweepOptions opts;
  opts.oracle_check = true;
  SweepReport rep = sweep(lines, opts);
  CHECK(rep.oracle_failures == 0);
  CHECK(rep.clean());
}

TEST_CASE("timing is opt-in") {
  std::vector<std::string> lines = {to_graph6(testsup::chorded_c7())};
  SweepOptions opts;
  opts.timing = true;
  SweepReport rep = sweep(lines, opts);
  CHECK(rep.elapsed_seconds >= 0);
  CHECK(sweep_to_json(rep).find("\"elapsed_seconds\"") != std::string::npos);
  CHECK(sweep_summary(rep).find("elapsed") != std::string::npos);
}

TEST_CASE("every order-6 graph misses the degree window") {
  auto lines = testsup::load_lines(testsup::fixture_path("graphs_n6.g6"));
  REQUIRE(lines.size() == 156);
  SweepReport rep = sweep(lines, SweepOptions{.jobs = 4});
  CHECK(rep.total == 156);
  CHECK(rep.out_of_window == 156);
  CHECK(rep.solved == 0);
  CHECK(rep.forbidden_component == 0);
  CHECK(rep.clean());
}

TEST_CASE("sweep_file skips blank lines") {
  std::string path = "sweep_test_input.g6";
  {
    std::ofstream out(path);
    out << to_graph6(testsup::chorded_c7()) << "\n\n"
        << to_graph6(testsup::k33()) << "\n\n";
  }
  SweepReport rep = sweep_file(path);
  CHECK(rep.total == 2);
  CHECK(rep.solved == 1);
  CHECK(rep.out_of_window == 1);
  std::remove(path.c_str());

  CHECK_THROWS_AS(sweep_file("does_not_exist.g6"), precondition_error);
}

TEST_CASE("summary table lists the buckets") {
  std::vector<std::string> lines = {to_graph6(testsup::chorded_c7())};
  std::string text = sweep_summary(sweep(lines));
  CHECK(text.find("graphs") != std::string::npos);
  CHECK(text.find("solved") != std::string::npos);
  CHECK(text.find("clean") != std::string::npos);
  CHECK(text.find("elapsed") == std::string::npos);
}
