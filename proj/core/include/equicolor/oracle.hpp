#pragma once

#include <optional>
#include <string>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

// Brute force is only sane on small graphs; the cap makes accidental big
// inputs an error instead of a hang.  Callers that know what they are doing
// (the balanced-recoloring fallback, spot checks) pass a larger cap.
struct OracleLimits {
  int max_order = 16;
};

// Exhaustive backtracking over proper colorings with the class-size
// multiset forced to ⌈n/k⌉ / ⌊n/k⌋.  Returns a witness iff an equitable
// k-coloring exists; an empty result is a definitive "no".
std::optional<Coloring> decide_equitable(const Graph& g, int k,
                                         const OracleLimits& limits = {});

struct ExactParams {
  int chi = 0;          // least k with a proper k-coloring
  int chi_eq = 0;       // least k with an equitable k-coloring
  int chi_eq_star = 0;  // least m with equitable k-colorings for ALL k >= m
  int alpha = 0;        // independence number
};

// All four by brute force.  chi_eq_star is exact because equitable
// k-colorings are checked for every k up to |G| (they provably exist from
// Δ+1 on, and that is re-verified here rather than assumed).
ExactParams exact_params(const Graph& g, const OracleLimits& limits = {});

int independence_number(const Graph& g, const OracleLimits& limits = {});

std::string exact_params_to_json(const ExactParams& p);

}  // namespace equicolor
