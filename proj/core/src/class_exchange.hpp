#pragma once

#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

// Internal helpers for the two operations that rewrite a coloring by
// swapping whole classes out: the move search and the reduction steps.

namespace equicolor::detail {

// Drop the given classes, append the blocks.  Callers have already
// validated the exchange via check_exchange.
inline Coloring replace_classes(const Coloring& c, const std::vector<int>& drop,
                                const std::vector<VertexSet>& blocks) {
  std::vector<bool> dropped(c.class_count(), false);
  for (int i : drop) dropped[i] = true;
  std::vector<VertexSet> classes;
  classes.reserve(c.class_count() - drop.size() + blocks.size());
  for (int i = 0; i < c.class_count(); ++i)
    if (!dropped[i]) classes.push_back(c.class_at(i));
  for (const auto& b : blocks) classes.push_back(b);
  return Coloring(c.order(), std::move(classes));
}

// Rejects out-of-range or unsorted source indices and any replacement that
// is not an exact repartition of the sources' union (the "stale" case).
inline void check_exchange(const Coloring& c, const std::vector<int>& sources,
                           const std::vector<VertexSet>& blocks,
                           const char* what) {
  if (sources.empty())
    throw precondition_error(std::string(what) + ": no source classes");
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (sources[i] < 0 || sources[i] >= c.class_count())
      throw precondition_error(std::string(what) +
                               ": source class index out of range");
    if (i > 0 && sources[i] <= sources[i - 1])
      throw precondition_error(std::string(what) +
                               ": source indices must strictly ascend");
  }
  VertexSet united(c.order());
  for (int i : sources) united |= c.class_at(i);
  VertexSet covered(c.order());
  int covered_count = 0;
  for (const auto& b : blocks) {
    if (b.universe() != c.order() || b.empty())
      throw precondition_error(std::string(what) + ": bad replacement block");
    if (covered.intersects(b))
      throw precondition_error(std::string(what) +
                               ": replacement blocks overlap");
    covered |= b;
    covered_count += b.count();
  }
  if (!(covered == united) || covered_count != united.count())
    throw precondition_error(
        std::string(what) +
        ": stale exchange, replacement does not repartition the sources");
}

}  // namespace equicolor::detail
