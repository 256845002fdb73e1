#pragma once

#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// One failed structural check.  `statement` is the check's id (1..13, see
// audit_maximal_properties); `classes` are the class indices the check was
// instantiated with and `vertices` the concrete witnesses inside them.
struct AuditViolation {
  int statement = 0;
  std::vector<int> classes;
  std::vector<int> vertices;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditViolation> violations;
  bool clean() const { return violations.empty(); }
};

// Checks the thirteen adjacency facts that any move-closed coloring with
// class sizes in {1,2,3} has to satisfy; every violation corresponds to a
// small repartition the local search would have taken.  Writing X for
// triples, U for pairs and w for singleton classes, with ||A,B|| counting
// edges between A and B:
//
//   1  all singletons are mutually adjacent
//   2  ||w,U|| >= 1 for every singleton and pair
//   3  if ||w,U|| = 1 via endpoint b, every singleton is adjacent to b
//   4  if ||w,X|| = 1 via endpoint b, every singleton is adjacent to b
//   5  ||{w,w'},X|| >= 2, and equality forces a 1+1 split
//   6  ||w,X|| = 0 forces ||X,U|| >= 3, ||w∪X,U|| >= 4, and >= 3 edges
//      from w∪X into a single endpoint of U, for every pair U
//   7  every two pairs carry a 2-matching between them
//   8  if ||U,U'|| = 2 for all pair-pairs, the pairs induce two disjoint
//      cliques, one per transversal
//   9  ||X,U|| = 0 forces, for every singleton w, ||w,X|| >= 2 and
//      ||w,X∪U|| >= 4; and for every vertex c of every other pair,
//      ||c,X|| >= 2 and ||c,X∪U|| >= 4 (hence ||X,U'|| >= 4)
//  10  ||X,U|| = 1 forces ||X,U'|| >= 3 for every other pair U'
//  11  ||X,U∪U'|| >= 4 for every triple and two pairs
//  12  ||X,U|| = ||X,U'|| = ||U,U'|| = 2 forces the seven vertices to
//      induce an isolated vertex plus two disjoint triangles
//  13  ||w,U|| = ||w,U'|| = 1 with ||U,U'|| = 2 forces the five vertices
//      to induce a disjoint edge plus triangle
//
// Checks are evaluated in implication form over all applicable class
// tuples; a hypothesis that never holds produces no violation.
AuditReport audit_maximal_properties(const Graph& g, const Coloring& c);

std::string audit_report_to_json(const AuditReport& r);

}  // namespace equicolor
