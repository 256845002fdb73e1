#include "equicolor/graph.hpp"

#include <bit>
#include <queue>

namespace equicolor {

VertexSet::VertexSet(int universe)
    : universe_(universe),
      words_(static_cast<std::size_t>(universe + 63) / 64, 0) {
  if (universe < 0) throw precondition_error("VertexSet: negative universe");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> vs)
    : VertexSet(universe) {
  for (int v : vs) {
    if (v < 0 || v >= universe_)
      throw precondition_error("VertexSet: vertex out of range");
    set(v);
  }
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  std::size_t k = std::min(words_.size(), o.words_.size());
  for (std::size_t i = 0; i < k; ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

bool VertexSet::contains_all(const VertexSet& o) const {
  for (std::size_t i = 0; i < o.words_.size(); ++i) {
    std::uint64_t w = i < words_.size() ? words_[i] : 0;
    if (o.words_[i] & ~w) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
    words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i)
    words_[i] &= ~o.words_[i];
  return *this;
}

int VertexSet::first() const { return next(-1); }

int VertexSet::next(int after) const {
  int start = after + 1;
  if (start >= universe_) return -1;
  std::size_t w = static_cast<unsigned>(start) >> 6;
  std::uint64_t cur = words_[w] & (~0ull << (start & 63));
  while (true) {
    if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
    if (++w >= words_.size()) return -1;
    cur = words_[w];
  }
}

int VertexSet::last() const {
  for (std::size_t w = words_.size(); w-- > 0;)
    if (words_[w])
      return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]);
  return -1;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw precondition_error("Graph: negative order");
  adj_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

Graph Graph::from_edges(int order,
                        const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw precondition_error("add_edge: vertex out of range");
  if (u == v) throw precondition_error("add_edge: loops are not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
  return d;
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
      out.emplace_back(u, v);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (int v = 0; v < g.order(); ++v) {
    if (seen.test(v)) continue;
    VertexSet comp(g.order());
    std::queue<int> q;
    q.push(v);
    seen.set(v);
    comp.set(v);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      const VertexSet& nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (!seen.test(w)) {
          seen.set(w);
          comp.set(w);
          q.push(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

WindowStatus window_check(const Graph& g) {
  WindowStatus ws;
  ws.order = g.order();
  ws.max_degree = g.max_degree();
  ws.in_window = ws.order >= 6 && 3 * ws.max_degree >= ws.order + 1 &&
                 2 * ws.max_degree < ws.order;
  for (const VertexSet& comp : components(g)) {
    if (comp.count() != ws.max_degree + 1) continue;
    bool complete = true;
    for (int v = comp.first(); v >= 0 && complete; v = comp.next(v))
      complete = (g.neighbors(v) & comp).count() == ws.max_degree;
    if (complete) {
      ws.forbidden_component = comp;
      break;
    }
  }
  return ws;
}

int edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  int total = 0;
  for (int u = x.first(); u >= 0; u = x.next(u))
    total += (g.neighbors(u) & y).count();
  // Edges inside x∩y were counted from both endpoints; keep them at one.
  VertexSet both = x & y;
  int inner = 0;
  for (int u = both.first(); u >= 0; u = both.next(u))
    inner += (g.neighbors(u) & both).count();
  return total - inner / 2;
}

}  // namespace equicolor
