#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "equicolor/graph.hpp"

namespace equicolor {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimacsOptions {
  // When true, a header edge count that disagrees with the edges actually
  // read is an error; otherwise it is collected as a warning.
  bool strict_edge_count = false;
  std::vector<std::string>* warnings = nullptr;
};

// DIMACS .col: "p edge N M" header, "e U V" lines (1-indexed), "c" comments.
// Duplicate edge lines are harmless.
Graph parse_dimacs(std::istream& in, const DimacsOptions& opts = {});
Graph parse_dimacs(const std::string& text, const DimacsOptions& opts = {});

// graph6, one graph per line (no ">>graph6<<" header).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// {"n": ..., "edges": [[u, v], ...]} with edges sorted, u < v.
std::string graph_to_json(const Graph& g);

}  // namespace equicolor
