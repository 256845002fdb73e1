#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// A repartition of the union of a few color classes.  `sources` are class
// indices into the coloring the move was generated for (ascending);
// `replacement` partitions exactly the union of those classes into
// independent blocks of size 1..3.  Applying it must raise the coloring's
// profile in (r, then s) order; `before`/`after` record that.
struct Move {
  std::vector<int> sources;
  std::vector<VertexSet> replacement;
  Profile before;
  Profile after;
};

struct Trace {
  Profile initial;
  std::vector<Move> steps;
};

struct SearchOptions {
  int radius = 4;
  // < 0 selects the default budget of 4*order^2 moves.  The (r, s) ascent
  // bounds real runs far below that; hitting the budget means a bug.
  long long move_budget = -1;
};

struct SearchResult {
  Coloring coloring;
  Trace trace;
};

// One singleton class per vertex: profile (0, 0, |G|).
Coloring trivial_coloring(const Graph& g);

// Deterministic first-improvement scan: radii 1..radius in order, class
// tuples in ascending lexicographic order, and within a tuple's union the
// repartitions in a fixed order that proposes triples before pairs before
// singletons.  Returns the first move whose profile delta is positive in
// (r, then s), or nothing if the coloring is move-closed at this radius.
std::optional<Move> find_improving_move(const Graph& g, const Coloring& c,
                                        int radius = 4);

// Removes the source classes (which must still match the move's recorded
// union) and appends the replacement blocks in order.
Coloring apply_move(const Coloring& c, const Move& m);

// Repeats find_improving_move/apply_move until closure.  The result admits
// no improving move at the given radius, and the trace's profiles strictly
// increase in (r, then s) step over step.
SearchResult run_local_search(const Graph& g, const Coloring& start,
                              const SearchOptions& opts = {});

std::string trace_to_json(const Trace& t);

}  // namespace equicolor
