#pragma once

#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// Which of the three singleton-elimination constructions fired:
//   singleton_pair   merge two non-adjacent singletons, splitting the first
//                    triple to pay for the extra class
//   triple_singleton a singleton has a non-neighbor z inside some triple;
//                    {z, w} becomes a pair and the rest of the triple another
//   mixed_pair       a pair U with at most one edge to {x, w} lets
//                    {x,w} ∪ U fall apart into two independent pairs
enum class ReductionCase { singleton_pair, triple_singleton, mixed_pair };

const char* reduction_case_name(ReductionCase c);

// A single profile-(−1,+2,−1) rewrite: remove the `touched` classes, append
// the `replacement` blocks.
struct ReductionStep {
  ReductionCase case_tag = ReductionCase::singleton_pair;
  std::vector<int> touched;
  std::vector<VertexSet> replacement;
  Profile before;
  Profile after;
};

// Splits triples into pair + singleton until the coloring has exactly m
// classes.  Requires profile (r,s,t) with r+s+t <= m <= max degree and
// 2*max_degree < |G|; the result has profile (r−q, s+q, t+q) with
// q = m−(r+s+t).  The q lowest-index triples are split, each losing its
// highest vertex to a fresh singleton class appended at the end.
Coloring split_to(const Graph& g, const Coloring& c, int m);

// Finds the first applicable reduction, trying the three cases in order and
// scanning classes by ascending index within each.  Requires t >= 1 plus
// split_to's degree conditions; under those, the case analysis cannot run
// out (a fourth outcome would contradict a degree count), so exhausting it
// throws internal_error.
ReductionStep balance_step(const Graph& g, const Coloring& c);

Coloring apply_reduction(const Coloring& c, const ReductionStep& step);

// Runs balance_step until no singleton class remains: exactly t steps,
// ending at profile (r−t, s+2t, 0) with the class count unchanged.  The
// result is equitable (every class has size 2 or 3).  Pass steps_out to
// collect the individual rewrites.
Coloring balance(const Graph& g, const Coloring& c,
                 std::vector<ReductionStep>* steps_out = nullptr);

}  // namespace equicolor
