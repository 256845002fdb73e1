#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

// Class-size census of a coloring whose classes all have size 1, 2 or 3:
// r triples, s pairs, t singletons.
struct Profile {
  int r = 0;
  int s = 0;
  int t = 0;
  int class_count() const { return r + s + t; }
  int vertex_count() const { return 3 * r + 2 * s + t; }
  bool operator==(const Profile&) const = default;
};

// Orders profiles by r, then s; t never participates.  Profiles that agree
// on (r, s) are equivalent, hence the weak ordering.
std::weak_ordering lex_compare(const Profile& a, const Profile& b);

// A partition-shaped value: an ordered sequence of nonempty vertex sets over
// [0, order).  Construction checks only that classes are nonempty and in
// range; whether they are disjoint, cover every vertex, and respect the
// graph is verify()'s job, so colorings loaded from untrusted files can be
// represented and then reported on.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int order, std::vector<VertexSet> classes);

  int order() const { return order_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<VertexSet>& classes() const { return classes_; }
  const VertexSet& class_at(int i) const { return classes_[i]; }
  // Index of the first class containing v, or -1.
  int class_of(int v) const { return class_of_[v]; }
  bool operator==(const Coloring&) const = default;

 private:
  int order_ = 0;
  std::vector<VertexSet> classes_;
  std::vector<int> class_of_;
};

Profile profile_of(const Coloring& c);  // throws if some size is outside 1..3
std::optional<Profile> try_profile_of(const Coloring& c);

struct VerifyReport {
  bool proper = false;      // no class contains an edge
  bool equitable = false;   // size_spread <= 1
  bool universe_ok = false; // classes partition [0, order)
  int class_count = 0;
  int size_spread = 0;
  std::optional<int> expected_k;
  bool k_matches = true;
  std::vector<std::pair<int, int>> bad_edges;        // edges inside a class
  std::vector<std::pair<int, int>> bad_class_pairs;  // |size_i - size_j| > 1
  std::vector<int> missing;
  std::vector<int> duplicated;
  std::vector<int> out_of_range;  // class members that are not vertices of g
  bool ok() const {
    return proper && equitable && universe_ok && k_matches;
  }
};

VerifyReport verify(const Graph& g, const Coloring& c,
                    std::optional<int> expected_k = std::nullopt);

// {"k": ..., "classes": [[...], ...], "profile": [r,s,t] or null}
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const std::string& text);
std::string verify_report_to_json(const VerifyReport& r);

}  // namespace equicolor
