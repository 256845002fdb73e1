#include "equicolor/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "equicolor/formats.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/solver.hpp"

namespace equicolor {

namespace {

using nlohmann::ordered_json;

void classify_line(long long index, const std::string& line,
                   const SweepOptions& opts, SweepReport& rep) {
  ++rep.total;
  Graph g(0);
  try {
    g = parse_graph6(line);
  } catch (const parse_error& e) {
    ++rep.parse_failures;
    rep.failures.push_back({index, line, "parse", e.what()});
    return;
  }
  try {
    SolveOutcome o = equitable_delta(g, SolveOptions{opts.radius});
    switch (o.status) {
      case SolveStatus::out_of_window:
        ++rep.out_of_window;
        return;
      case SolveStatus::forbidden_component:
        ++rep.forbidden_component;
        return;
      case SolveStatus::stall:
        ++rep.stalls;
        rep.failures.push_back({index, line, "stall", o.message});
        return;
      case SolveStatus::ok:
        break;
      default:
        ++rep.verify_failures;
        rep.failures.push_back(
            {index, line, "verify",
             std::string("unexpected status ") + solve_status_name(o.status)});
        return;
    }
    VerifyReport vr = verify(g, o.result->coloring, g.max_degree());
    if (!vr.ok()) {
      ++rep.verify_failures;
      rep.failures.push_back({index, line, "verify",
                              "proper=" + std::to_string(vr.proper) +
                                  " equitable=" + std::to_string(vr.equitable) +
                                  " k_matches=" + std::to_string(vr.k_matches)});
      return;
    }
    if (opts.oracle_check && g.order() <= opts.oracle_cap) {
      if (!decide_equitable(g, g.max_degree())) {
        ++rep.oracle_failures;
        rep.failures.push_back(
            {index, line, "oracle",
             "pipeline solved it but exhaustive search found nothing"});
        return;
      }
    }
    ++rep.solved;
  } catch (const std::exception& e) {
    ++rep.verify_failures;
    rep.failures.push_back({index, line, "verify", e.what()});
  }
}

void merge_into(SweepReport& into, SweepReport&& part) {
  into.total += part.total;
  into.solved += part.solved;
  into.out_of_window += part.out_of_window;
  into.forbidden_component += part.forbidden_component;
  into.stalls += part.stalls;
  into.verify_failures += part.verify_failures;
  into.oracle_failures += part.oracle_failures;
  into.parse_failures += part.parse_failures;
  into.failures.insert(into.failures.end(),
                       std::make_move_iterator(part.failures.begin()),
                       std::make_move_iterator(part.failures.end()));
}

}  // namespace

SweepReport sweep(const std::vector<std::string>& graph6_lines,
                  const SweepOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  long long n = static_cast<long long>(graph6_lines.size());
  int jobs = std::max(1, opts.jobs);
  if (n < 2 * jobs) jobs = 1;

  SweepReport rep;
  if (jobs == 1) {
    for (long long i = 0; i < n; ++i)
      classify_line(i, graph6_lines[i], opts, rep);
  } else {
    std::vector<SweepReport> parts(jobs);
    std::vector<std::thread> workers;
    long long chunk = (n + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      long long lo = w * chunk;
      long long hi = std::min(n, lo + chunk);
      workers.emplace_back([&, lo, hi, w] {
        for (long long i = lo; i < hi; ++i)
          classify_line(i, graph6_lines[i], opts, parts[w]);
      });
    }
    for (auto& t : workers) t.join();
    for (auto& part : parts) merge_into(rep, std::move(part));
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) {
              return a.index < b.index;
            });
  if (opts.timing) {
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return rep;
}

SweepReport sweep_file(const std::string& path, const SweepOptions& opts) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return sweep(lines, opts);
}

std::string sweep_to_json(const SweepReport& r) {
  ordered_json j;
  j["total"] = r.total;
  j["solved"] = r.solved;
  j["out_of_window"] = r.out_of_window;
  j["forbidden_component"] = r.forbidden_component;
  j["stalls"] = r.stalls;
  j["verify_failures"] = r.verify_failures;
  j["oracle_failures"] = r.oracle_failures;
  j["parse_failures"] = r.parse_failures;
  j["clean"] = r.clean();
  auto arr = ordered_json::array();
  for (const auto& f : r.failures) {
    ordered_json fj;
    fj["index"] = f.index;
    fj["graph6"] = f.graph6;
    fj["kind"] = f.kind;
    fj["detail"] = f.detail;
    arr.push_back(std::move(fj));
  }
  j["failures"] = std::move(arr);
  if (r.elapsed_seconds >= 0) j["elapsed_seconds"] = r.elapsed_seconds;
  return j.dump();
}

std::string sweep_summary(const SweepReport& r) {
  std::ostringstream out;
  auto row = [&](const char* label, long long value) {
    out << std::left << std::setw(22) << label << value << "\n";
  };
  row("graphs", r.total);
  row("solved", r.solved);
  row("out of window", r.out_of_window);
  row("forbidden component", r.forbidden_component);
  row("stalls", r.stalls);
  row("verify failures", r.verify_failures);
  row("oracle failures", r.oracle_failures);
  row("parse failures", r.parse_failures);
  out << std::left << std::setw(22) << "clean" << (r.clean() ? "yes" : "no")
      << "\n";
  if (r.elapsed_seconds >= 0) {
    out << std::left << std::setw(22) << "elapsed"
        << std::fixed << std::setprecision(2) << r.elapsed_seconds << " s\n";
  }
  return out.str();
}

}  // namespace equicolor
