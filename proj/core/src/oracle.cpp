#include "equicolor/oracle.hpp"

#include <algorithm>

#include <json.hpp>

namespace equicolor {

namespace {

// Backtracking over proper colorings with at most k classes, with the
// equitable size quotas optional.  Branches on the unassigned vertex with
// the fewest feasible classes; identical empty classes are collapsed by
// always trying only the first of them.
struct ColorSearch {
  const Graph& g;
  int k;
  int lo = 0;       // floor(n/k); every class ends between lo and lo+1
  int ceil_m = 0;   // how many classes may reach lo+1
  bool quotas = false;
  std::vector<VertexSet> members;
  std::vector<int> sizes;
  std::vector<int> assign;
  int at_ceil = 0;
  int assigned = 0;

  ColorSearch(const Graph& gr, int kk, bool use_quotas)
      : g(gr), k(kk), quotas(use_quotas) {
    int n = g.order();
    if (use_quotas) {
      lo = n / k;
      ceil_m = n % k;
    }
    members.assign(k, VertexSet(n));
    sizes.assign(k, 0);
    assign.assign(n, -1);
  }

  bool feasible(int v, int c) const {
    if (g.neighbors(v).intersects(members[c])) return false;
    if (!quotas) return true;
    if (sizes[c] < lo) return true;
    return sizes[c] == lo && at_ceil < ceil_m;
  }

  // Feasible classes for v with empty-class symmetry breaking applied.
  void candidates(int v, std::vector<int>& out) const {
    out.clear();
    bool empty_seen = false;
    for (int c = 0; c < k; ++c) {
      if (sizes[c] == 0) {
        if (empty_seen) continue;
        empty_seen = true;
      }
      if (feasible(v, c)) out.push_back(c);
    }
  }

  bool solve() {
    if (assigned == g.order()) return true;
    int best_v = -1;
    std::vector<int> cand, best_cand;
    for (int v = 0; v < g.order(); ++v) {
      if (assign[v] != -1) continue;
      candidates(v, cand);
      if (cand.empty()) return false;
      if (best_v == -1 || cand.size() < best_cand.size()) {
        best_v = v;
        best_cand = cand;
        if (best_cand.size() == 1) break;
      }
    }
    for (int c : best_cand) {
      members[c].set(best_v);
      if (quotas && ++sizes[c] == lo + 1) ++at_ceil;
      if (!quotas) ++sizes[c];
      assign[best_v] = c;
      ++assigned;
      if (solve()) return true;
      --assigned;
      assign[best_v] = -1;
      if (quotas && sizes[c]-- == lo + 1) --at_ceil;
      if (!quotas) --sizes[c];
      members[c].reset(best_v);
    }
    return false;
  }
};

void check_cap(const Graph& g, const OracleLimits& limits, const char* what) {
  if (g.order() > limits.max_order)
    throw precondition_error(std::string(what) +
                             ": graph exceeds the brute-force order cap");
}

bool properly_colorable(const Graph& g, int k) {
  if (g.order() == 0) return true;
  ColorSearch cs(g, k, false);
  return cs.solve();
}

int alpha_rec(const Graph& g, VertexSet p, int have, int& best) {
  int v = p.first();
  if (v == -1) {
    best = std::max(best, have);
    return have;
  }
  if (have + p.count() <= best) return best;  // cannot beat the incumbent
  VertexSet without = p;
  without.reset(v);
  alpha_rec(g, without - g.neighbors(v), have + 1, best);
  if (g.neighbors(v).intersects(p)) alpha_rec(g, without, have, best);
  return best;
}

}  // namespace

std::optional<Coloring> decide_equitable(const Graph& g, int k,
                                         const OracleLimits& limits) {
  if (k < 1 || k > g.order())
    throw precondition_error("decide_equitable: k must be in [1, |G|]");
  check_cap(g, limits, "decide_equitable");
  ColorSearch cs(g, k, true);
  if (!cs.solve()) return std::nullopt;
  return Coloring(g.order(), std::move(cs.members));
}

int independence_number(const Graph& g, const OracleLimits& limits) {
  check_cap(g, limits, "independence_number");
  VertexSet all(g.order());
  for (int v = 0; v < g.order(); ++v) all.set(v);
  int best = 0;
  alpha_rec(g, all, 0, best);
  return best;
}

ExactParams exact_params(const Graph& g, const OracleLimits& limits) {
  check_cap(g, limits, "exact_params");
  ExactParams p;
  int n = g.order();
  if (n == 0) return p;

  for (int k = 1; k <= n; ++k)
    if (properly_colorable(g, k)) {
      p.chi = k;
      break;
    }

  std::vector<bool> eq(n + 1, false);
  for (int k = 1; k <= n; ++k) eq[k] = decide_equitable(g, k, limits).has_value();
  for (int k = 1; k <= n; ++k)
    if (eq[k]) {
      p.chi_eq = k;
      break;
    }
  int k = n;
  while (k >= 1 && eq[k]) --k;
  p.chi_eq_star = k + 1;

  p.alpha = independence_number(g, limits);
  return p;
}

std::string exact_params_to_json(const ExactParams& p) {
  nlohmann::ordered_json j;
  j["chi"] = p.chi;
  j["chi_eq"] = p.chi_eq;
  j["chi_eq_star"] = p.chi_eq_star;
  j["alpha"] = p.alpha;
  return j.dump();
}

}  // namespace equicolor
