#include "equicolor/reduce.hpp"

#include <algorithm>

#include "class_exchange.hpp"

namespace equicolor {

namespace {

void check_degree_conditions(const Graph& g, const Coloring& c,
                             const Profile& p, const char* what) {
  if (c.order() != g.order())
    throw precondition_error(std::string(what) +
                             ": coloring and graph orders differ");
  if (p.vertex_count() != g.order())
    throw precondition_error(std::string(what) +
                             ": coloring does not cover the graph");
  if (2 * g.max_degree() >= g.order())
    throw precondition_error(std::string(what) +
                             ": needs 2*max_degree < |G|");
  if (p.class_count() > g.max_degree())
    throw precondition_error(std::string(what) +
                             ": needs class count <= max_degree");
}

VertexSet singleton(int order, int v) {
  VertexSet s(order);
  s.set(v);
  return s;
}

}  // namespace

const char* reduction_case_name(ReductionCase c) {
  switch (c) {
    case ReductionCase::singleton_pair: return "singleton_pair";
    case ReductionCase::triple_singleton: return "triple_singleton";
    case ReductionCase::mixed_pair: return "mixed_pair";
  }
  return "?";
}

Coloring split_to(const Graph& g, const Coloring& c, int m) {
  Profile p = profile_of(c);
  check_degree_conditions(g, c, p, "split_to");
  if (m < p.class_count() || m > g.max_degree())
    throw precondition_error("split_to: m outside [class count, max_degree]");
  int q = m - p.class_count();
  if (q == 0) return c;
  if (q >= p.r)
    throw precondition_error(
        "split_to: would need to split more triples than exist; the degree "
        "hypothesis must have been violated upstream");

  std::vector<VertexSet> classes;
  classes.reserve(m);
  std::vector<VertexSet> singles;
  int left = q;
  for (int i = 0; i < c.class_count(); ++i) {
    const VertexSet& cls = c.class_at(i);
    if (left > 0 && cls.count() == 3) {
      int z = cls.last();
      VertexSet pair = cls;
      pair.reset(z);
      classes.push_back(std::move(pair));
      singles.push_back(singleton(c.order(), z));
      --left;
    } else {
      classes.push_back(cls);
    }
  }
  for (auto& s : singles) classes.push_back(std::move(s));
  return Coloring(c.order(), std::move(classes));
}

ReductionStep balance_step(const Graph& g, const Coloring& c) {
  Profile p = profile_of(c);
  check_degree_conditions(g, c, p, "balance_step");
  if (p.t < 1)
    throw precondition_error("balance_step: no singleton class to eliminate");
  if (p.r <= p.t)
    throw internal_error(
        "balance_step: r <= t despite the degree preconditions; the profile "
        "arithmetic r - t = |G| - 2(r+s+t) rules this out");

  std::vector<int> triples, pairs, singles;
  for (int i = 0; i < c.class_count(); ++i)
    switch (c.class_at(i).count()) {
      case 3: triples.push_back(i); break;
      case 2: pairs.push_back(i); break;
      default: singles.push_back(i); break;
    }
  Profile after{p.r - 1, p.s + 2, p.t - 1};

  // Two singletons that tolerate each other become a pair; the first triple
  // splits to keep the class count.
  for (std::size_t a = 0; a < singles.size(); ++a)
    for (std::size_t b = a + 1; b < singles.size(); ++b) {
      int va = c.class_at(singles[a]).first();
      int vb = c.class_at(singles[b]).first();
      if (g.adjacent(va, vb)) continue;
      const VertexSet& x = c.class_at(triples[0]);
      int z = x.last();
      VertexSet xpair = x;
      xpair.reset(z);
      VertexSet merged = singleton(c.order(), va);
      merged.set(vb);
      ReductionStep step;
      step.case_tag = ReductionCase::singleton_pair;
      step.touched = {triples[0], singles[a], singles[b]};
      std::sort(step.touched.begin(), step.touched.end());
      step.replacement = {std::move(xpair), singleton(c.order(), z),
                          std::move(merged)};
      step.before = p;
      step.after = after;
      return step;
    }

  // A singleton with a non-neighbor inside a triple pairs up with it.
  for (int xi : triples)
    for (int wk : singles) {
      const VertexSet& x = c.class_at(xi);
      int w = c.class_at(wk).first();
      int z = -1;
      for (int v = x.first(); v != -1; v = x.next(v))
        if (!g.adjacent(w, v)) {
          z = v;
          break;
        }
      if (z == -1) continue;
      VertexSet xpair = x;
      xpair.reset(z);
      VertexSet zw = singleton(c.order(), z);
      zw.set(w);
      ReductionStep step;
      step.case_tag = ReductionCase::triple_singleton;
      step.touched = {std::min(xi, wk), std::max(xi, wk)};
      step.replacement = {std::move(xpair), std::move(zw)};
      step.before = p;
      step.after = after;
      return step;
    }

  // Every singleton is glued to every triple, so a degree count promises a
  // pair U with at most one edge to some {x, w}; the four vertices then
  // fall apart into two independent pairs.
  for (int xi : triples)
    for (int wk : singles) {
      const VertexSet& x = c.class_at(xi);
      int xv = x.first();
      int w = c.class_at(wk).first();
      for (int uj : pairs) {
        const VertexSet& u = c.class_at(uj);
        if ((g.neighbors(xv) & u).count() + (g.neighbors(w) & u).count() > 1)
          continue;
        int u1 = u.first(), u2 = u.last();
        const std::pair<std::pair<int, int>, std::pair<int, int>>
            matchings[3] = {{{xv, w}, {u1, u2}},
                            {{xv, u1}, {w, u2}},
                            {{xv, u2}, {w, u1}}};
        for (const auto& [pa, pb] : matchings) {
          if (g.adjacent(pa.first, pa.second) ||
              g.adjacent(pb.first, pb.second))
            continue;
          VertexSet rest = x;
          rest.reset(xv);
          VertexSet a = singleton(c.order(), pa.first);
          a.set(pa.second);
          VertexSet b = singleton(c.order(), pb.first);
          b.set(pb.second);
          ReductionStep step;
          step.case_tag = ReductionCase::mixed_pair;
          step.touched = {xi, uj, wk};
          std::sort(step.touched.begin(), step.touched.end());
          step.replacement = {std::move(rest), std::move(a), std::move(b)};
          step.before = p;
          step.after = after;
          return step;
        }
      }
    }

  throw internal_error(
      "balance_step: no reduction case applies; for a proper coloring under "
      "the degree preconditions the case analysis cannot run out");
}

Coloring apply_reduction(const Coloring& c, const ReductionStep& step) {
  detail::check_exchange(c, step.touched, step.replacement, "apply_reduction");
  for (const auto& b : step.replacement)
    if (b.count() > 3)
      throw precondition_error(
          "apply_reduction: replacement block larger than 3");
  return detail::replace_classes(c, step.touched, step.replacement);
}

Coloring balance(const Graph& g, const Coloring& c,
                 std::vector<ReductionStep>* steps_out) {
  Profile p = profile_of(c);
  check_degree_conditions(g, c, p, "balance");
  int t0 = p.t;
  Coloring cur = c;
  for (int i = 0; i < t0; ++i) {
    ReductionStep step = balance_step(g, cur);
    Profile expect{step.before.r - 1, step.before.s + 2, step.before.t - 1};
    if (!(step.after == expect))
      throw internal_error("balance: step delta is not (-1,+2,-1)");
    cur = apply_reduction(cur, step);
    if (!(profile_of(cur) == expect))
      throw internal_error("balance: applied step missed its profile");
    if (steps_out) steps_out->push_back(std::move(step));
  }
  Profile fin = profile_of(cur);
  if (!(fin == Profile{p.r - t0, p.s + 2 * t0, 0}))
    throw internal_error("balance: final profile is not (r-t, s+2t, 0)");
  return cur;
}

}  // namespace equicolor
