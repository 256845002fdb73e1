#include "equicolor/search.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include <json.hpp>

#include "class_exchange.hpp"

namespace equicolor {

namespace {

struct LocalInstance {
  std::vector<int> verts;          // global ids, ascending
  std::vector<std::uint32_t> adj;  // adjacency among local indices
};

LocalInstance localize(const Graph& g, const VertexSet& u) {
  LocalInstance li;
  li.verts = u.to_vector();
  int m = static_cast<int>(li.verts.size());
  li.adj.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(li.verts[i], li.verts[j])) {
        li.adj[i] |= 1u << j;
        li.adj[j] |= 1u << i;
      }
  return li;
}

// Depth-first enumeration of partitions of `remaining` into independent
// blocks of size <= 3, proposing for the lowest vertex its triples, then
// pairs, then the singleton.  Accepts the first partition that beats
// (r0, s0) in (r, then s); the bound below only discards subtrees that
// cannot possibly beat it, so acceptance order is unaffected.
struct RepartitionSearch {
  const LocalInstance& li;
  int r0, s0;
  std::vector<std::uint32_t> blocks;

  bool can_still_beat(int r_acc, int s_acc, int rem_count) const {
    if (r_acc > r0) return true;
    int max_triples = rem_count / 3;
    if (r_acc + max_triples > r0) return true;
    if (r_acc + max_triples == r0) {
      int leftover = rem_count - 3 * (r0 - r_acc);
      return s_acc + leftover / 2 > s0;
    }
    return false;
  }

  bool run(std::uint32_t remaining, int r_acc, int s_acc) {
    if (remaining == 0) return r_acc > r0 || (r_acc == r0 && s_acc > s0);
    if (!can_still_beat(r_acc, s_acc, std::popcount(remaining))) return false;
    int v = std::countr_zero(remaining);
    std::uint32_t rest = remaining & ~(1u << v);
    std::uint32_t free_v = rest & ~li.adj[v];

    for (std::uint32_t am = free_v; am; am &= am - 1) {
      int a = std::countr_zero(am);
      std::uint32_t free_ab = free_v & ~li.adj[a] & ~((2u << a) - 1);
      for (std::uint32_t bm = free_ab; bm; bm &= bm - 1) {
        int b = std::countr_zero(bm);
        std::uint32_t block = (1u << v) | (1u << a) | (1u << b);
        blocks.push_back(block);
        if (run(remaining & ~block, r_acc + 1, s_acc)) return true;
        blocks.pop_back();
      }
    }
    for (std::uint32_t am = free_v; am; am &= am - 1) {
      int a = std::countr_zero(am);
      std::uint32_t block = (1u << v) | (1u << a);
      blocks.push_back(block);
      if (run(remaining & ~block, r_acc, s_acc + 1)) return true;
      blocks.pop_back();
    }
    blocks.push_back(1u << v);
    if (run(rest, r_acc, s_acc)) return true;
    blocks.pop_back();
    return false;
  }
};

}  // namespace

Coloring trivial_coloring(const Graph& g) {
  std::vector<VertexSet> classes;
  classes.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    VertexSet s(g.order());
    s.set(v);
    classes.push_back(std::move(s));
  }
  return Coloring(g.order(), std::move(classes));
}

std::optional<Move> find_improving_move(const Graph& g, const Coloring& c,
                                        int radius) {
  if (radius < 1) throw precondition_error("find_improving_move: radius < 1");
  Profile p0 = profile_of(c);  // also enforces class sizes 1..3
  int kc = c.class_count();

  for (int rho = 1; rho <= std::min(radius, kc); ++rho) {
    std::vector<int> idx(rho);
    for (int i = 0; i < rho; ++i) idx[i] = i;
    while (true) {
      VertexSet u(c.order());
      int r0 = 0, s0 = 0, t0 = 0;
      for (int i : idx) {
        u |= c.class_at(i);
        switch (c.class_at(i).count()) {
          case 3: ++r0; break;
          case 2: ++s0; break;
          default: ++t0; break;
        }
      }

      if (u.count() > 31)
        throw precondition_error(
            "find_improving_move: class union exceeds 31 vertices; lower "
            "the radius");
      LocalInstance li = localize(g, u);
      RepartitionSearch rs{li, r0, s0, {}};
      std::uint32_t full = (1u << li.verts.size()) - 1;
      if (rs.run(full, 0, 0)) {
        Move m;
        m.sources = idx;
        int r1 = 0, s1 = 0, t1 = 0;
        for (std::uint32_t bm : rs.blocks) {
          VertexSet block(c.order());
          for (std::uint32_t w = bm; w; w &= w - 1)
            block.set(li.verts[std::countr_zero(w)]);
          switch (block.count()) {
            case 3: ++r1; break;
            case 2: ++s1; break;
            default: ++t1; break;
          }
          m.replacement.push_back(std::move(block));
        }
        m.before = p0;
        m.after = Profile{p0.r - r0 + r1, p0.s - s0 + s1, p0.t - t0 + t1};
        return m;
      }

      // next ascending rho-combination of {0..kc-1}
      int i = rho - 1;
      while (i >= 0 && idx[i] == kc - rho + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < rho; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Coloring apply_move(const Coloring& c, const Move& m) {
  detail::check_exchange(c, m.sources, m.replacement, "apply_move");
  for (const auto& b : m.replacement)
    if (b.count() > 3)
      throw precondition_error("apply_move: replacement block larger than 3");
  return detail::replace_classes(c, m.sources, m.replacement);
}

SearchResult run_local_search(const Graph& g, const Coloring& start,
                              const SearchOptions& opts) {
  long long budget = opts.move_budget >= 0
                         ? opts.move_budget
                         : std::max<long long>(1, 4LL * g.order() * g.order());
  SearchResult res{start, Trace{profile_of(start), {}}};
  while (auto m = find_improving_move(g, res.coloring, opts.radius)) {
    if (static_cast<long long>(res.trace.steps.size()) >= budget)
      throw internal_error(
          "run_local_search: move budget exceeded; the (r,s) ascent should "
          "have terminated long ago");
    res.coloring = apply_move(res.coloring, *m);
    res.trace.steps.push_back(std::move(*m));
  }
  return res;
}

std::string trace_to_json(const Trace& t) {
  nlohmann::ordered_json j;
  j["initial"] = {t.initial.r, t.initial.s, t.initial.t};
  j["steps"] = nlohmann::ordered_json::array();
  for (const Move& m : t.steps) {
    nlohmann::ordered_json step;
    step["sources"] = m.sources;
    auto blocks = nlohmann::ordered_json::array();
    for (const auto& b : m.replacement) blocks.push_back(b.to_vector());
    step["blocks"] = std::move(blocks);
    step["after"] = {m.after.r, m.after.s, m.after.t};
    j["steps"].push_back(std::move(step));
  }
  return j.dump();
}

}  // namespace equicolor
