#include "equicolor/audit.hpp"

#include <algorithm>

#include <json.hpp>

namespace equicolor {

namespace {

int deg_into(const Graph& g, int v, const VertexSet& s) {
  return (g.neighbors(v) & s).count();
}

// Number of connected components of the subgraph induced by s, each of
// which must be a clique of a size listed in `sizes` (as a multiset).
bool induces_disjoint_cliques(const Graph& g, const VertexSet& s,
                              std::vector<int> sizes) {
  std::vector<int> found;
  VertexSet seen(s.universe());
  for (int v = s.first(); v != -1; v = s.next(v)) {
    if (seen.test(v)) continue;
    VertexSet comp(s.universe());
    comp.set(v);
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(x) & s;
      for (int y = nb.first(); y != -1; y = nb.next(y))
        if (!comp.test(y)) {
          comp.set(y);
          stack.push_back(y);
        }
    }
    int n = comp.count();
    if (edges_between(g, comp, comp) != n * (n - 1) / 2) return false;
    found.push_back(n);
    seen |= comp;
  }
  std::sort(found.begin(), found.end());
  std::sort(sizes.begin(), sizes.end());
  return found == sizes;
}

struct Auditor {
  const Graph& g;
  const Coloring& c;
  std::vector<int> xs, us, ws;  // class indices by size 3 / 2 / 1
  AuditReport report;

  void flag(int stmt, std::vector<int> cls, std::vector<int> verts,
            std::string detail) {
    report.violations.push_back(
        {stmt, std::move(cls), std::move(verts), std::move(detail)});
  }

  int wvert(int wi) const { return c.class_at(wi).first(); }

  void check1() {
    for (std::size_t a = 0; a < ws.size(); ++a)
      for (std::size_t b = a + 1; b < ws.size(); ++b) {
        int va = wvert(ws[a]), vb = wvert(ws[b]);
        if (!g.adjacent(va, vb))
          flag(1, {ws[a], ws[b]}, {va, vb}, "non-adjacent singletons");
      }
  }

  void check2() {
    for (int wi : ws)
      for (int uj : us)
        if (deg_into(g, wvert(wi), c.class_at(uj)) == 0)
          flag(2, {wi, uj}, {wvert(wi)}, "singleton with no edge to a pair");
  }

  // Shared by checks 3 and 4: a singleton with exactly one edge into the
  // class pins that endpoint for every other singleton.
  void pinned_endpoint_check(int stmt, const std::vector<int>& others) {
    for (int wi : ws) {
      int w = wvert(wi);
      for (int ci : others) {
        VertexSet hit = g.neighbors(w) & c.class_at(ci);
        if (hit.count() != 1) continue;
        int b = hit.first();
        for (int wk : ws) {
          int w2 = wvert(wk);
          if (w2 != b && !g.adjacent(w2, b))
            flag(stmt, {wi, ci, wk}, {w, b, w2},
                 "pinned endpoint missed by another singleton");
        }
      }
    }
  }

  void check5() {
    for (int xi : xs) {
      const VertexSet& x = c.class_at(xi);
      for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = a + 1; b < ws.size(); ++b) {
          int da = deg_into(g, wvert(ws[a]), x);
          int db = deg_into(g, wvert(ws[b]), x);
          if (da + db < 2)
            flag(5, {xi, ws[a], ws[b]}, {wvert(ws[a]), wvert(ws[b])},
                 "two singletons send fewer than 2 edges into a triple");
          else if (da + db == 2 && da != 1)
            flag(5, {xi, ws[a], ws[b]}, {wvert(ws[a]), wvert(ws[b])},
                 "exactly 2 edges into a triple but not split 1+1");
        }
    }
  }

  void check6() {
    for (int wi : ws) {
      int w = wvert(wi);
      for (int xi : xs) {
        const VertexSet& x = c.class_at(xi);
        if (deg_into(g, w, x) != 0) continue;
        VertexSet wx = x;
        wx.set(w);
        for (int uj : us) {
          const VertexSet& u = c.class_at(uj);
          if (edges_between(g, x, u) < 3)
            flag(6, {wi, xi, uj}, {w}, "edge-free singleton/triple but "
                 "fewer than 3 triple-to-pair edges");
          if (edges_between(g, wx, u) < 4)
            flag(6, {wi, xi, uj}, {w}, "edge-free singleton/triple but "
                 "fewer than 4 edges into the pair");
          bool concentrated = false;
          for (int b = u.first(); b != -1; b = u.next(b))
            if (deg_into(g, b, wx) >= 3) concentrated = true;
          if (!concentrated)
            flag(6, {wi, xi, uj}, {w},
                 "no pair endpoint receives 3 edges from singleton+triple");
        }
      }
    }
  }

  void check7() {
    for (std::size_t a = 0; a < us.size(); ++a)
      for (std::size_t b = a + 1; b < us.size(); ++b) {
        VertexSet s = c.class_at(us[a]) | c.class_at(us[b]);
        std::vector<std::pair<int, int>> edges;
        for (int v = s.first(); v != -1; v = s.next(v))
          for (int w = s.next(v); w != -1; w = s.next(w))
            if (g.adjacent(v, w)) edges.emplace_back(v, w);
        bool matched = false;
        for (std::size_t i = 0; i < edges.size() && !matched; ++i)
          for (std::size_t j = i + 1; j < edges.size() && !matched; ++j) {
            auto [p, q] = edges[i];
            auto [x, y] = edges[j];
            if (p != x && p != y && q != x && q != y) matched = true;
          }
        if (!matched)
          flag(7, {us[a], us[b]}, {}, "two pairs without a 2-matching");
      }
  }

  void check8() {
    if (us.empty()) return;
    for (std::size_t a = 0; a < us.size(); ++a)
      for (std::size_t b = a + 1; b < us.size(); ++b)
        if (edges_between(g, c.class_at(us[a]), c.class_at(us[b])) != 2)
          return;  // hypothesis fails, nothing to audit
    VertexSet all(c.order());
    for (int uj : us) all |= c.class_at(uj);
    int s = static_cast<int>(us.size());
    if (!induces_disjoint_cliques(g, all, {s, s}))
      flag(8, us, {}, "pairs with all cross-counts 2 do not induce two "
           "disjoint cliques");
  }

  void check9() {
    for (int xi : xs) {
      const VertexSet& x = c.class_at(xi);
      for (std::size_t j = 0; j < us.size(); ++j) {
        const VertexSet& u = c.class_at(us[j]);
        if (edges_between(g, x, u) != 0) continue;
        VertexSet xu = x | u;
        for (int wi : ws) {
          int w = wvert(wi);
          if (deg_into(g, w, x) < 2 || deg_into(g, w, xu) < 4)
            flag(9, {xi, us[j], wi}, {w},
                 "singleton too loosely tied to an edge-free triple/pair");
        }
        for (std::size_t j2 = 0; j2 < us.size(); ++j2) {
          if (j2 == j) continue;
          const VertexSet& u2 = c.class_at(us[j2]);
          for (int v = u2.first(); v != -1; v = u2.next(v))
            if (deg_into(g, v, x) < 2 || deg_into(g, v, xu) < 4)
              flag(9, {xi, us[j], us[j2]}, {v},
                   "other-pair vertex too loosely tied to an edge-free "
                   "triple/pair");
          if (edges_between(g, x, u2) < 4)
            flag(9, {xi, us[j], us[j2]}, {},
                 "triple sends fewer than 4 edges to the other pair");
        }
      }
    }
  }

  void check10() {
    for (int xi : xs)
      for (std::size_t j = 0; j < us.size(); ++j) {
        if (edges_between(g, c.class_at(xi), c.class_at(us[j])) != 1)
          continue;
        for (std::size_t j2 = 0; j2 < us.size(); ++j2)
          if (j2 != j &&
              edges_between(g, c.class_at(xi), c.class_at(us[j2])) < 3)
            flag(10, {xi, us[j], us[j2]}, {},
                 "single-edge pair next to a pair with fewer than 3 edges");
      }
  }

  void check11() {
    for (int xi : xs)
      for (std::size_t a = 0; a < us.size(); ++a)
        for (std::size_t b = a + 1; b < us.size(); ++b) {
          VertexSet uu = c.class_at(us[a]) | c.class_at(us[b]);
          if (edges_between(g, c.class_at(xi), uu) < 4)
            flag(11, {xi, us[a], us[b]}, {},
                 "triple sends fewer than 4 edges to a pair of pairs");
        }
  }

  void check12() {
    for (int xi : xs)
      for (std::size_t a = 0; a < us.size(); ++a)
        for (std::size_t b = a + 1; b < us.size(); ++b) {
          const VertexSet& x = c.class_at(xi);
          const VertexSet& u1 = c.class_at(us[a]);
          const VertexSet& u2 = c.class_at(us[b]);
          if (edges_between(g, x, u1) != 2 || edges_between(g, x, u2) != 2 ||
              edges_between(g, u1, u2) != 2)
            continue;
          if (!induces_disjoint_cliques(g, x | u1 | u2, {1, 3, 3}))
            flag(12, {xi, us[a], us[b]}, {},
                 "2/2/2 triple-pair-pair does not induce a point plus two "
                 "triangles");
        }
  }

  void check13() {
    for (int wi : ws)
      for (std::size_t a = 0; a < us.size(); ++a)
        for (std::size_t b = a + 1; b < us.size(); ++b) {
          int w = wvert(wi);
          const VertexSet& u1 = c.class_at(us[a]);
          const VertexSet& u2 = c.class_at(us[b]);
          if (deg_into(g, w, u1) != 1 || deg_into(g, w, u2) != 1 ||
              edges_between(g, u1, u2) != 2)
            continue;
          VertexSet s = u1 | u2;
          s.set(w);
          if (!induces_disjoint_cliques(g, s, {2, 3}))
            flag(13, {wi, us[a], us[b]}, {w},
                 "1/1/2 singleton-pair-pair does not induce an edge plus a "
                 "triangle");
        }
  }
};

}  // namespace

AuditReport audit_maximal_properties(const Graph& g, const Coloring& c) {
  Auditor a{g, c, {}, {}, {}, {}};
  for (int i = 0; i < c.class_count(); ++i) {
    int sz = c.class_at(i).count();
    if (sz > 3)
      throw precondition_error(
          "audit_maximal_properties: class sizes must be at most 3");
    (sz == 3 ? a.xs : sz == 2 ? a.us : a.ws).push_back(i);
  }
  a.check1();
  a.check2();
  a.pinned_endpoint_check(3, a.us);
  a.pinned_endpoint_check(4, a.xs);
  a.check5();
  a.check6();
  a.check7();
  a.check8();
  a.check9();
  a.check10();
  a.check11();
  a.check12();
  a.check13();
  return a.report;
}

std::string audit_report_to_json(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["clean"] = r.clean();
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) {
    nlohmann::ordered_json jv;
    jv["statement"] = v.statement;
    jv["classes"] = v.classes;
    jv["vertices"] = v.vertices;
    jv["detail"] = v.detail;
    j["violations"].push_back(std::move(jv));
  }
  return j.dump();
}

}  // namespace equicolor
