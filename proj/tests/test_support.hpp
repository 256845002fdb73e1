#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "equicolor/formats.hpp"
#include "equicolor/graph.hpp"

namespace testsup {

inline std::string fixture_path(const std::string& name) {
  return std::string(EQUICOLOR_FIXTURE_DIR) + "/" + name;
}

inline std::vector<std::string> load_lines(const std::string& path,
                                           long long limit = -1) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    lines.push_back(line);
    if (limit >= 0 && static_cast<long long>(lines.size()) >= limit) break;
  }
  return lines;
}

// C_7 plus the chord {0,3}: 7 vertices, max degree 3, inside the window.
inline equicolor::Graph chorded_c7() {
  return equicolor::Graph::from_edges(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {0, 3}});
}

// A star K_{1,6} padded with six isolated vertices: max degree 6 on 13
// vertices, handy because singletons pile up around the hub.
inline equicolor::Graph hub13() {
  return equicolor::Graph::from_edges(
      13, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}});
}

inline equicolor::Graph k33() {
  return equicolor::Graph::from_edges(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
          {2, 3}, {2, 4}, {2, 5}});
}

inline equicolor::Graph two_triangles() {
  return equicolor::Graph::from_edges(6,
                                      {{0, 1}, {0, 2}, {1, 2},
                                       {3, 4}, {3, 5}, {4, 5}});
}

inline equicolor::Graph k4_plus_k3() {
  return equicolor::Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2},
                                          {1, 3}, {2, 3},
                                          {4, 5}, {4, 6}, {5, 6}});
}

}  // namespace testsup
