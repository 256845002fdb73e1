#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace equicolor {

// Thrown when a caller violates a documented precondition.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal invariant breaks; indicates a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Subset of vertex ids [0, universe), packed 64 per word.  Membership tests
// and set algebra are word-parallel, which is what keeps the move search and
// the audit cheap.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> vs);

  int universe() const { return universe_; }
  bool test(int v) const {
    return (words_[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
  }
  void set(int v) { words_[static_cast<unsigned>(v) >> 6] |= 1ull << (v & 63); }
  void reset(int v) {
    words_[static_cast<unsigned>(v) >> 6] &= ~(1ull << (v & 63));
  }
  void clear();

  int count() const;
  bool empty() const;
  bool intersects(const VertexSet& o) const;
  bool contains_all(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& o) const = default;

  // Iteration in ascending vertex order: first() then next(prev); -1 ends.
  int first() const;
  int next(int after) const;
  int last() const;

  std::vector<int> to_vector() const;

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Simple undirected graph: loopless, no multi-edges, vertices 0..order-1.
// Adjacency lives in per-vertex bit sets.  Treat instances as immutable once
// built; every algorithm here takes const references and shares them freely
// across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  static Graph from_edges(int order,
                          const std::vector<std::pair<int, int>>& edges);

  int order() const { return order_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  int max_degree() const;
  std::int64_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  bool operator==(const Graph& o) const = default;

 private:
  int order_ = 0;
  std::vector<VertexSet> adj_;
};

// Result of the degree-window test.  in_window means
//   order >= 6  and  3*max_degree >= order+1  and  2*max_degree < order,
// evaluated in exact integer arithmetic.  forbidden_component is set iff some
// connected component has exactly max_degree+1 vertices, each of degree
// max_degree inside it (i.e. the component is a complete graph on
// max_degree+1 vertices); its presence rules the constructive pipeline out.
struct WindowStatus {
  int order = 0;
  int max_degree = 0;
  bool in_window = false;
  std::optional<VertexSet> forbidden_component;
};

WindowStatus window_check(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// Number of edges with one endpoint in x and the other in y.  Each unordered
// edge counts once if it meets the condition in either orientation; in
// particular an edge with both endpoints in x∩y counts once, and
// edges_between(g, s, s) is just the edge count inside s.
int edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace equicolor
