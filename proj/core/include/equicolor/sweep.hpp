#pragma once

#include <string>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

struct SweepOptions {
  int jobs = 1;
  int radius = 4;
  // Cross-check each solved instance against the exhaustive oracle
  // (skipped for graphs above oracle_cap vertices).
  bool oracle_check = false;
  int oracle_cap = 16;
  // Timing is opt-in so that default reports are byte-identical across
  // runs and machines.
  bool timing = false;
};

struct SweepFailure {
  long long index = 0;  // 0-based position in the corpus
  std::string graph6;
  std::string kind;  // "parse" | "stall" | "verify" | "oracle"
  std::string detail;
};

// Every corpus line lands in exactly one bucket, so the counters sum to
// `total`.  A clean sweep has no stalls, no verification failures and no
// oracle disagreements; skips (out-of-window, forbidden component, parse
// failures) are expected and merely counted.
struct SweepReport {
  long long total = 0;
  long long solved = 0;
  long long out_of_window = 0;
  long long forbidden_component = 0;
  long long stalls = 0;
  long long verify_failures = 0;
  long long oracle_failures = 0;
  long long parse_failures = 0;
  std::vector<SweepFailure> failures;
  double elapsed_seconds = -1;  // < 0 when timing is off
  bool clean() const {
    return stalls == 0 && verify_failures == 0 && oracle_failures == 0;
  }
};

// Runs the full pipeline on every graph6 line, distributing work over
// `jobs` threads.  The merged report is deterministic: counters are sums
// and failure records are sorted by corpus index, so thread scheduling
// never shows through.
SweepReport sweep(const std::vector<std::string>& graph6_lines,
                  const SweepOptions& opts = {});
SweepReport sweep_file(const std::string& path, const SweepOptions& opts = {});

std::string sweep_to_json(const SweepReport& r);
std::string sweep_summary(const SweepReport& r);

}  // namespace equicolor
