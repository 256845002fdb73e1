#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "equicolor/graph.hpp"

namespace equicolor {

// Parsed generator description, e.g. "complete:6", "cycle:7", "path:4",
// "complete_bipartite:3:3", "hypercube:3", "gnp:12:0.35",
// "gnp_window:12:0.35".  gnp_window rejection-samples gnp until the result
// lands inside the degree window, up to retry_cap attempts.
struct GenSpec {
  enum class Kind {
    complete,
    cycle,
    path,
    complete_bipartite,
    hypercube,
    gnp,
    gnp_window,
  };
  Kind kind = Kind::complete;
  int a = 0;
  int b = 0;
  double p = 0.0;
  int retry_cap = 1000;

  static GenSpec parse(std::string_view text);
};

// Deterministic for a fixed spec and seed, independent of platform: edge
// draws come from a fixed mapping of mt19937_64 output, not from
// distribution classes with unspecified algorithms.
Graph generate(const GenSpec& spec, std::uint64_t seed = 0);

}  // namespace equicolor
