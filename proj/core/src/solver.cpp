#include "equicolor/solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "equicolor/formats.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/reduce.hpp"

namespace equicolor {

namespace {

using nlohmann::ordered_json;

ordered_json profile_json(const Profile& p) {
  return ordered_json::array({p.r, p.s, p.t});
}

ordered_json opt_profile_json(const std::optional<Profile>& p) {
  if (!p) return nullptr;
  return profile_json(*p);
}

ordered_json classes_json(const Coloring& c) {
  auto arr = ordered_json::array();
  for (const auto& cls : c.classes()) arr.push_back(cls.to_vector());
  return arr;
}

std::string window_message(const WindowStatus& ws) {
  return "degree window requires |G|>=6, 3*max_degree>=|G|+1 and "
         "2*max_degree<|G|; got |G|=" +
         std::to_string(ws.order) +
         ", max_degree=" + std::to_string(ws.max_degree);
}

// One greedy-plus-rebalance attempt at an equitable k-coloring.  Returns an
// empty optional when the rebalancing gets stuck, in which case the caller
// retries with a different vertex order.
class BalanceAttempt {
 public:
  BalanceAttempt(const Graph& g, int k, const std::vector<int>& order)
      : g_(g), k_(k), members_(k, VertexSet(g.order())), sizes_(k, 0) {
    for (int v : order) {
      int best = -1;
      for (int c = 0; c < k_; ++c) {
        if (g_.neighbors(v).intersects(members_[c])) continue;
        if (best == -1 || sizes_[c] < sizes_[best]) best = c;
      }
      // k >= max_degree+1 guarantees a free class
      members_[best].set(v);
      ++sizes_[best];
    }
  }

  std::optional<Coloring> run() {
    long long budget = 1LL * g_.order() * g_.order() + 16;
    while (budget-- > 0) {
      auto [mn, mx] = std::minmax_element(sizes_.begin(), sizes_.end());
      if (*mx - *mn <= 1) {
        std::vector<VertexSet> classes(members_.begin(), members_.end());
        return Coloring(g_.order(), std::move(classes));
      }
      if (!rebalance_once(*mn)) return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  bool movable(int v, int c) const {
    return !g_.neighbors(v).intersects(members_[c]);
  }

  void move(int v, int from, int to) {
    members_[from].reset(v);
    members_[to].set(v);
    --sizes_[from];
    ++sizes_[to];
  }

  // Walk the BFS tree from `cls` back to a surplus class, collecting the
  // recorded hops; they apply in collected order (target end first).
  std::vector<std::array<int, 3>> path_moves(int cls) const {
    std::vector<std::array<int, 3>> moves;
    for (int cur = cls; parent_class_[cur] != -1; cur = parent_class_[cur])
      moves.push_back({parent_vertex_[cur], parent_class_[cur], cur});
    return moves;
  }

  bool apply_checked(const std::vector<std::array<int, 3>>& moves) {
    for (auto [v, from, to] : moves) {
      if (!members_[from].test(v) || !movable(v, to)) return false;
      move(v, from, to);
    }
    return true;
  }

  // One unit of surplus flows from a size>=min+2 class to a size==min
  // class, directly along movability edges if possible, otherwise through
  // a swap that first evicts the single blocking vertex of an almost-free
  // class.  Fails only if neither exists.
  bool rebalance_once(int min_size) {
    parent_class_.assign(k_, -1);
    parent_vertex_.assign(k_, -1);
    std::vector<bool> visited(k_, false);
    std::vector<int> queue;
    for (int c = 0; c < k_; ++c)
      if (sizes_[c] >= min_size + 2) {
        visited[c] = true;
        queue.push_back(c);
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int a = queue[head];
      for (int b = 0; b < k_; ++b) {
        if (visited[b]) continue;
        int mover = -1;
        for (int v = members_[a].first(); v != -1; v = members_[a].next(v))
          if (movable(v, b)) {
            mover = v;
            break;
          }
        if (mover == -1) continue;
        visited[b] = true;
        parent_class_[b] = a;
        parent_vertex_[b] = mover;
        if (sizes_[b] == min_size) return apply_checked(path_moves(b));
        queue.push_back(b);
      }
    }

    // Stuck: look for u in a reachable class A whose entry to some class V
    // is blocked by exactly one vertex y, with y itself movable into a
    // minimum class T.  Shifting surplus into A, evicting y to T and
    // sliding u into V has the same net effect as a direct path.
    for (int a = 0; a < k_; ++a) {
      if (!visited[a]) continue;
      for (int u = members_[a].first(); u != -1; u = members_[a].next(u))
        for (int v = 0; v < k_; ++v) {
          if (v == a) continue;
          VertexSet blockers = g_.neighbors(u) & members_[v];
          if (blockers.count() != 1) continue;
          int y = blockers.first();
          for (int t = 0; t < k_; ++t) {
            if (t == v || t == a || sizes_[t] != min_size) continue;
            if (!movable(y, t)) continue;
            auto moves = path_moves(a);
            moves.insert(moves.begin(), {u, a, v});
            moves.insert(moves.begin(), {y, v, t});
            return apply_checked(moves);
          }
        }
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<VertexSet> members_;
  std::vector<int> sizes_;
  std::vector<int> parent_class_;
  std::vector<int> parent_vertex_;
};

constexpr int kBalanceRestarts = 24;

}  // namespace

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::ok: return "ok";
    case SolveStatus::out_of_window: return "out_of_window";
    case SolveStatus::forbidden_component: return "forbidden_component";
    case SolveStatus::stall: return "stall";
    case SolveStatus::unsupported: return "unsupported";
    case SolveStatus::invalid_k: return "invalid_k";
  }
  return "?";
}

Coloring hs_equitable(const Graph& g, int k) {
  int n = g.order();
  if (n < 1) throw precondition_error("hs_equitable: empty graph");
  if (k < g.max_degree() + 1 || k > n)
    throw precondition_error(
        "hs_equitable: k must be in [max_degree+1, |G|]");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int restart = 0; restart < kBalanceRestarts; ++restart) {
    if (restart > 0) {
      std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^
                          static_cast<std::uint64_t>(restart));
      std::iota(order.begin(), order.end(), 0);
      for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(order[i], order[j]);
      }
    }
    BalanceAttempt attempt(g, k, order);
    if (auto c = attempt.run()) {
      VerifyReport vr = verify(g, *c, k);
      if (!vr.ok())
        throw internal_error("hs_equitable: produced coloring fails checks");
      return *c;
    }
  }

  // The heuristic never gets here in practice; exhaustive search settles it
  // (an equitable k-coloring provably exists for k > max_degree).
  OracleLimits no_cap{g.order()};
  if (auto c = decide_equitable(g, k, no_cap)) return *c;
  throw internal_error(
      "hs_equitable: exhaustive search found no equitable coloring with "
      "k > max_degree classes on " + to_graph6(g) +
      "; this contradicts a guaranteed existence result");
}

Coloring hs_delta_plus_one(const Graph& g) {
  return hs_equitable(g, g.max_degree() + 1);
}

SolveOutcome equitable_delta(const Graph& g, const SolveOptions& opts) {
  SolveOutcome out;
  WindowStatus ws = window_check(g);
  out.window = ws;
  if (!ws.in_window) {
    out.status = SolveStatus::out_of_window;
    out.message = window_message(ws);
    return out;
  }
  if (ws.forbidden_component) {
    out.status = SolveStatus::forbidden_component;
    out.message = "a component is a complete graph on max_degree+1 vertices";
    return out;
  }

  SearchResult sr =
      run_local_search(g, trivial_coloring(g), SearchOptions{opts.radius, -1});
  Profile after_search = profile_of(sr.coloring);
  out.sigma = after_search.class_count();
  if (after_search.class_count() > ws.max_degree) {
    out.status = SolveStatus::stall;
    out.stall = StallCertificate{g, sr.coloring, after_search, opts.radius,
                                 audit_maximal_properties(g, sr.coloring)};
    out.message =
        "move-closed coloring kept " +
        std::to_string(after_search.class_count()) + " classes, above " +
        std::to_string(ws.max_degree);
    return out;
  }

  Coloring split = split_to(g, sr.coloring, ws.max_degree);
  Profile after_split = profile_of(split);
  Coloring balanced = balance(g, split);
  Profile after_balance = profile_of(balanced);
  if (!verify(g, balanced, ws.max_degree).ok())
    throw internal_error("equitable_delta: output failed verification on " +
                         to_graph6(g));
  out.result = SolveResult{std::move(balanced), ws.max_degree, after_search,
                           after_split, after_balance, std::move(sr.trace)};
  return out;
}

SolveOutcome equitable_k(const Graph& g, int k, const SolveOptions& opts) {
  SolveOutcome out;
  if (k < 1 || k > g.order()) {
    out.status = SolveStatus::invalid_k;
    out.message = "k must be between 1 and |G| (classes are nonempty)";
    return out;
  }
  if (k >= g.max_degree() + 1) {
    SolveResult res;
    res.coloring = hs_equitable(g, k);
    res.k = k;
    out.result = std::move(res);
    return out;
  }

  SearchResult sr =
      run_local_search(g, trivial_coloring(g), SearchOptions{opts.radius, -1});
  Profile ps = profile_of(sr.coloring);
  out.sigma = ps.class_count();
  if (k < ps.class_count()) {
    out.status = SolveStatus::unsupported;
    out.message = "requested k is below the achieved class-count bound " +
                  std::to_string(ps.class_count()) +
                  "; not a proof that no equitable k-coloring exists";
    return out;
  }
  WindowStatus ws = window_check(g);
  out.window = ws;
  if (!ws.in_window) {
    out.status = SolveStatus::out_of_window;
    out.message = window_message(ws);
    return out;
  }
  if (ws.forbidden_component) {
    out.status = SolveStatus::forbidden_component;
    out.message = "a component is a complete graph on max_degree+1 vertices";
    return out;
  }

  Coloring split = split_to(g, sr.coloring, k);
  Profile after_split = profile_of(split);
  Coloring balanced = balance(g, split);
  Profile after_balance = profile_of(balanced);
  if (!verify(g, balanced, k).ok())
    throw internal_error("equitable_k: output failed verification on " +
                         to_graph6(g));
  out.result = SolveResult{std::move(balanced), k, ps, after_split,
                           after_balance, std::move(sr.trace)};
  return out;
}

std::string stall_certificate_to_json(const StallCertificate& cert) {
  ordered_json j;
  j["graph6"] = to_graph6(cert.graph);
  j["order"] = cert.graph.order();
  j["max_degree"] = cert.graph.max_degree();
  j["radius"] = cert.radius;
  j["sigma"] = cert.profile.class_count();
  j["profile"] = profile_json(cert.profile);
  j["classes"] = classes_json(cert.coloring);
  j["audit"] = ordered_json::parse(audit_report_to_json(cert.audit));
  return j.dump();
}

std::string solve_outcome_to_json(const SolveOutcome& o) {
  ordered_json j;
  j["status"] = solve_status_name(o.status);
  if (o.sigma) j["sigma"] = *o.sigma;
  if (o.result) {
    j["k"] = o.result->k;
    j["classes"] = classes_json(o.result->coloring);
    j["profile"] = opt_profile_json(try_profile_of(o.result->coloring));
    ordered_json stages;
    stages["after_search"] = opt_profile_json(o.result->after_search);
    stages["after_split"] = opt_profile_json(o.result->after_split);
    stages["after_balance"] = opt_profile_json(o.result->after_balance);
    j["profiles"] = std::move(stages);
  }
  if (o.window && o.status != SolveStatus::ok) {
    ordered_json w;
    w["order"] = o.window->order;
    w["max_degree"] = o.window->max_degree;
    w["in_window"] = o.window->in_window;
    w["forbidden_component"] =
        o.window->forbidden_component
            ? ordered_json(o.window->forbidden_component->to_vector())
            : ordered_json(nullptr);
    j["window"] = std::move(w);
  }
  if (o.stall)
    j["stall"] = ordered_json::parse(stall_certificate_to_json(*o.stall));
  if (!o.message.empty()) j["message"] = o.message;
  return j.dump();
}

}  // namespace equicolor
