#pragma once

#include <optional>
#include <string>

#include "equicolor/audit.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/search.hpp"

namespace equicolor {

enum class SolveStatus {
  ok,
  out_of_window,        // degree window |G|>=6, 3Δ>=|G|+1, 2Δ<|G| fails
  forbidden_component,  // some component is a complete graph on Δ+1 vertices
  stall,                // move-closed coloring kept more than Δ classes
  unsupported,          // requested k below the achieved class count; the
                        // constructive path cannot reach it (not a proof
                        // that no equitable k-coloring exists)
  invalid_k,            // k < 1 or k > |G|
};

const char* solve_status_name(SolveStatus s);

// A move-closed coloring that still has more than Δ classes on a graph
// inside the degree window.  The pipeline's guarantee says this cannot
// happen; if it ever does, this artifact is the interesting output, so it
// carries everything needed to replay: the graph, the coloring, the search
// radius, and the structural audit of the final coloring.
struct StallCertificate {
  Graph graph;
  Coloring coloring;
  Profile profile;
  int radius = 4;
  AuditReport audit;
};

struct SolveResult {
  Coloring coloring;
  int k = 0;
  std::optional<Profile> after_search;
  std::optional<Profile> after_split;
  std::optional<Profile> after_balance;
  Trace trace;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::ok;
  std::optional<SolveResult> result;        // set iff status == ok
  std::optional<WindowStatus> window;       // set when the window was checked
  std::optional<StallCertificate> stall;    // set iff status == stall
  std::optional<int> sigma;                 // class count of the move-closed
                                            // coloring, when a search ran
  std::string message;
  bool ok() const { return status == SolveStatus::ok; }
};

struct SolveOptions {
  int radius = 4;
};

// The main pipeline: check the degree window and the forbidden-component
// condition, run the local search from the all-singletons coloring, insist
// the closure uses at most Δ classes (else: stall certificate), then split
// to exactly Δ classes and eliminate singletons.  On success the coloring
// is proper and equitable with exactly Δ classes.
SolveOutcome equitable_delta(const Graph& g, const SolveOptions& opts = {});

// Equitable k-coloring for a requested k.  k >= Δ+1 always succeeds via the
// balanced-recoloring fallback.  Below that, the local search runs first:
// k under the achieved class count is reported unsupported; otherwise the
// split/balance path applies (and needs the degree window).
SolveOutcome equitable_k(const Graph& g, int k, const SolveOptions& opts = {});

// Proper equitable coloring with exactly Δ+1 classes; works on every
// nonempty graph.  Class sizes are ⌈|G|/(Δ+1)⌉ and ⌊|G|/(Δ+1)⌋.
Coloring hs_delta_plus_one(const Graph& g);

// Same contract for any class count k with Δ+1 <= k <= |G|.
Coloring hs_equitable(const Graph& g, int k);

std::string solve_outcome_to_json(const SolveOutcome& o);
std::string stall_certificate_to_json(const StallCertificate& cert);

}  // namespace equicolor
