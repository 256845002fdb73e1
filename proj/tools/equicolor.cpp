#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "equicolor/audit.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/formats.hpp"
#include "equicolor/generate.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/oracle.hpp"
#include "equicolor/search.hpp"
#include "equicolor/solver.hpp"
#include "equicolor/sweep.hpp"

using ojson = nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw equicolor::precondition_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  throw equicolor::parse_error("input holds no graph");
}

equicolor::Graph load_graph_text(const std::string& text, std::string format,
                                 const std::string& path_hint) {
  if (format == "auto") {
    if (ends_with(path_hint, ".col") || ends_with(path_hint, ".dimacs")) {
      format = "col";
    } else if (ends_with(path_hint, ".g6") || ends_with(path_hint, ".graph6")) {
      format = "g6";
    } else {
      format = first_line(text).find(' ') != std::string::npos ? "col" : "g6";
    }
  }
  if (format == "col") return equicolor::parse_dimacs(text);
  return equicolor::parse_graph6(first_line(text));
}

struct InputArgs {
  std::string path;
  std::string gen_spec;
  std::string format = "auto";
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--in", path, "graph file (graph6 or DIMACS .col; - for stdin)");
    auto* gen = cmd->add_option("--gen", gen_spec,
                                "generator spec, e.g. gnp:12:0.35 or cycle:7");
    cmd->add_option("--input-format", format, "g6 | col | auto")
        ->check(CLI::IsMember({"g6", "col", "auto"}));
    cmd->add_option("--seed", seed, "seed for --gen");
    in->excludes(gen);
    gen->excludes(in);
  }

  equicolor::Graph load() const {
    if (!gen_spec.empty()) {
      return equicolor::generate(equicolor::GenSpec::parse(gen_spec), seed);
    }
    if (path.empty()) {
      throw equicolor::precondition_error("no input: pass --in or --gen");
    }
    return load_graph_text(slurp(path), format, path);
  }
};

std::string to_dimacs(const equicolor::Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

std::string cert_dir_or_default(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("EQUICOLOR_CERT_DIR")) {
    if (*env) return env;
  }
  return "certificates";
}

std::string write_stall_certificate(const equicolor::StallCertificate& cert,
                                    const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::string body = equicolor::stall_certificate_to_json(cert);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : body) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
  auto final_path = std::filesystem::path(dir) /
                    ("stall-" + std::to_string(cert.graph.order()) + "-" + hex +
                     ".json");
  auto tmp_path = final_path;
  tmp_path += ".tmp";
  {
    std::ofstream out(tmp_path, std::ios::binary);
    out << body << "\n";
  }
  std::filesystem::rename(tmp_path, final_path);
  return final_path.string();
}

void summary_row(std::ostream& out, const std::string& label,
                 const std::string& value) {
  out << std::left << std::setw(16) << label << value << "\n";
}

int run_color(const InputArgs& input, bool has_k, int k, int radius,
              bool with_trace, const std::string& format,
              const std::string& cert_dir) {
  equicolor::Graph g = input.load();
  equicolor::SolveOptions opts;
  opts.radius = radius;
  equicolor::SolveOutcome o = has_k ? equicolor::equitable_k(g, k, opts)
                                    : equicolor::equitable_delta(g, opts);

  std::string cert_path;
  if (o.stall) cert_path = write_stall_certificate(*o.stall, cert_dir_or_default(cert_dir));

  if (format == "json") {
    ojson j = ojson::parse(equicolor::solve_outcome_to_json(o));
    if (with_trace && o.result) {
      j["trace"] = ojson::parse(equicolor::trace_to_json(o.result->trace));
    }
    if (!cert_path.empty()) j["certificate_path"] = cert_path;
    std::cout << j.dump() << "\n";
  } else {
    summary_row(std::cout, "status", equicolor::solve_status_name(o.status));
    if (o.sigma) summary_row(std::cout, "search classes", std::to_string(*o.sigma));
    if (o.result) {
      summary_row(std::cout, "k", std::to_string(o.result->k));
      std::ostringstream sizes;
      for (const auto& cls : o.result->coloring.classes()) {
        if (sizes.tellp() > 0) sizes << " ";
        sizes << cls.count();
      }
      summary_row(std::cout, "sizes", sizes.str());
    }
    if (!cert_path.empty()) summary_row(std::cout, "certificate", cert_path);
    if (!o.message.empty()) summary_row(std::cout, "message", o.message);
  }

  switch (o.status) {
    case equicolor::SolveStatus::ok:
      return 0;
    case equicolor::SolveStatus::stall:
      return 2;
    default:
      return 1;
  }
}

int run_verify(const std::string& graph_path, const std::string& graph_format,
               const std::string& coloring_path, bool has_k, int k) {
  equicolor::Graph g = load_graph_text(slurp(graph_path), graph_format, graph_path);
  equicolor::Coloring c = equicolor::coloring_from_json(slurp(coloring_path));
  auto expected = has_k ? std::optional<int>(k) : std::nullopt;
  equicolor::VerifyReport rep = equicolor::verify(g, c, expected);
  std::cout << equicolor::verify_report_to_json(rep) << "\n";
  return rep.ok() ? 0 : 1;
}

int run_audit(const std::string& graph_path, const std::string& graph_format,
              const std::string& coloring_path, int radius) {
  equicolor::Graph g = load_graph_text(slurp(graph_path), graph_format, graph_path);
  equicolor::Coloring c;
  if (!coloring_path.empty()) {
    c = equicolor::coloring_from_json(slurp(coloring_path));
  } else {
    equicolor::SearchOptions opts;
    opts.radius = radius;
    c = equicolor::run_local_search(g, equicolor::trivial_coloring(g), opts).coloring;
  }
  equicolor::AuditReport rep = equicolor::audit_maximal_properties(g, c);
  ojson out;
  out["classes"] = c.class_count();
  auto p = equicolor::try_profile_of(c);
  out["profile"] = p ? ojson::array({p->r, p->s, p->t}) : ojson(nullptr);
  out["audit"] = ojson::parse(equicolor::audit_report_to_json(rep));
  std::cout << out.dump() << "\n";
  return 0;
}

int run_oracle(const InputArgs& input, bool has_k, int k, bool params, int cap) {
  equicolor::Graph g = input.load();
  equicolor::OracleLimits limits;
  limits.max_order = cap;
  if (params) {
    std::cout << equicolor::exact_params_to_json(equicolor::exact_params(g, limits))
              << "\n";
    return 0;
  }
  if (!has_k) throw equicolor::precondition_error("pass --k or --params");
  auto witness = equicolor::decide_equitable(g, k, limits);
  ojson j;
  j["exists"] = witness.has_value();
  j["witness"] =
      witness ? ojson::parse(equicolor::coloring_to_json(*witness)) : ojson(nullptr);
  std::cout << j.dump() << "\n";
  return 0;
}

int run_sweep(const std::string& fixtures, int jobs, int radius, bool oracle,
              int oracle_cap, bool timing, long long limit,
              const std::string& format) {
  std::ifstream in(fixtures);
  if (!in) throw equicolor::precondition_error("cannot open " + fixtures);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
    if (limit >= 0 && static_cast<long long>(lines.size()) >= limit) break;
  }
  equicolor::SweepOptions opts;
  opts.jobs = jobs;
  opts.radius = radius;
  opts.oracle_check = oracle;
  opts.oracle_cap = oracle_cap;
  opts.timing = timing;
  equicolor::SweepReport rep = equicolor::sweep(lines, opts);
  if (format == "json") {
    std::cout << equicolor::sweep_to_json(rep) << "\n";
  } else {
    std::cout << equicolor::sweep_summary(rep);
  }
  if (!rep.clean()) return 2;
  if (rep.parse_failures > 0) return 1;
  return 0;
}

int run_gen(const std::string& spec, std::uint64_t seed, int count,
            const std::string& format, const std::string& out_path) {
  if (count > 1 && format != "g6") {
    throw equicolor::precondition_error("--count above 1 needs --format g6");
  }
  equicolor::GenSpec parsed = equicolor::GenSpec::parse(spec);
  std::ostringstream out;
  for (int i = 0; i < count; ++i) {
    equicolor::Graph g = equicolor::generate(parsed, seed + static_cast<std::uint64_t>(i));
    if (format == "g6") {
      out << equicolor::to_graph6(g) << "\n";
    } else if (format == "col") {
      out << to_dimacs(g);
    } else {
      out << equicolor::graph_to_json(g) << "\n";
    }
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw equicolor::precondition_error("cannot open " + out_path);
    file << out.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equitable graph coloring toolkit"};
  app.require_subcommand(1);

  auto* color = app.add_subcommand(
      "color", "color a graph equitably (max-degree classes by default)");
  InputArgs color_in;
  color_in.attach(color);
  int color_k = 0;
  auto* color_k_opt = color->add_option("--k", color_k, "requested class count");
  int color_radius = 4;
  color->add_option("--radius", color_radius, "search radius (classes per move)");
  bool color_trace = false;
  color->add_flag("--trace", color_trace, "include the move trace (json output)");
  std::string color_format = "json";
  color->add_option("--format", color_format, "json | summary")
      ->check(CLI::IsMember({"json", "summary"}));
  std::string color_cert_dir;
  color->add_option("--cert-dir", color_cert_dir,
                    "where stall certificates land (default: $EQUICOLOR_CERT_DIR "
                    "or ./certificates)");

  auto* verify = app.add_subcommand("verify", "check a coloring against a graph");
  std::string verify_graph, verify_coloring;
  std::string verify_format = "auto";
  verify->add_option("--graph", verify_graph, "graph file")->required();
  verify->add_option("--coloring", verify_coloring, "coloring json file")->required();
  verify->add_option("--input-format", verify_format, "g6 | col | auto")
      ->check(CLI::IsMember({"g6", "col", "auto"}));
  int verify_k = 0;
  auto* verify_k_opt = verify->add_option("--k", verify_k, "expected class count");

  auto* audit = app.add_subcommand(
      "audit", "structural checks on a move-closed coloring");
  std::string audit_graph, audit_coloring;
  std::string audit_format = "auto";
  audit->add_option("--graph", audit_graph, "graph file")->required();
  audit->add_option("--coloring", audit_coloring,
                    "coloring json file (default: run the local search)");
  audit->add_option("--input-format", audit_format, "g6 | col | auto")
      ->check(CLI::IsMember({"g6", "col", "auto"}));
  int audit_radius = 4;
  audit->add_option("--radius", audit_radius, "search radius");

  auto* oracle = app.add_subcommand("oracle", "exhaustive checks on small graphs");
  InputArgs oracle_in;
  oracle_in.attach(oracle);
  int oracle_k = 0;
  auto* oracle_k_opt = oracle->add_option("--k", oracle_k, "class count to decide");
  bool oracle_params = false;
  oracle->add_flag("--params", oracle_params,
                   "report chromatic and independence parameters");
  int oracle_cap = 16;
  oracle->add_option("--cap", oracle_cap, "largest order the oracle accepts");

  auto* sweep = app.add_subcommand("sweep", "run the pipeline over a graph6 corpus");
  std::string sweep_fixtures;
  sweep->add_option("--fixtures", sweep_fixtures, "graph6 file, one graph per line")
      ->required();
  int sweep_jobs = 1;
  sweep->add_option("--jobs", sweep_jobs, "worker threads");
  int sweep_radius = 4;
  sweep->add_option("--radius", sweep_radius, "search radius");
  bool sweep_oracle = false;
  sweep->add_flag("--oracle", sweep_oracle, "cross-check solved graphs exhaustively");
  int sweep_oracle_cap = 16;
  sweep->add_option("--oracle-cap", sweep_oracle_cap,
                    "skip the oracle above this order");
  bool sweep_timing = false;
  sweep->add_flag("--timing", sweep_timing, "measure elapsed time");
  long long sweep_limit = -1;
  sweep->add_option("--limit", sweep_limit, "only read this many lines");
  std::string sweep_format = "summary";
  sweep->add_option("--format", sweep_format, "json | summary")
      ->check(CLI::IsMember({"json", "summary"}));

  auto* gen = app.add_subcommand("gen", "emit generated graphs");
  std::string gen_spec;
  gen->add_option("--spec", gen_spec, "generator spec, e.g. gnp_window:12:0.35")
      ->required();
  std::uint64_t gen_seed = 0;
  gen->add_option("--seed", gen_seed, "first seed");
  int gen_count = 1;
  gen->add_option("--count", gen_count, "graphs to emit (seeds count up from --seed)");
  std::string gen_format = "g6";
  gen->add_option("--format", gen_format, "g6 | col | json")
      ->check(CLI::IsMember({"g6", "col", "json"}));
  std::string gen_out;
  gen->add_option("--out", gen_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (*color) {
      return run_color(color_in, color_k_opt->count() > 0, color_k, color_radius,
                       color_trace, color_format, color_cert_dir);
    }
    if (*verify) {
      return run_verify(verify_graph, verify_format, verify_coloring,
                        verify_k_opt->count() > 0, verify_k);
    }
    if (*audit) {
      return run_audit(audit_graph, audit_format, audit_coloring, audit_radius);
    }
    if (*oracle) {
      return run_oracle(oracle_in, oracle_k_opt->count() > 0, oracle_k,
                        oracle_params, oracle_cap);
    }
    if (*sweep) {
      return run_sweep(sweep_fixtures, sweep_jobs, sweep_radius, sweep_oracle,
                       sweep_oracle_cap, sweep_timing, sweep_limit, sweep_format);
    }
    if (*gen) {
      return run_gen(gen_spec, gen_seed, gen_count, gen_format, gen_out);
    }
  } catch (const equicolor::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
