#include "equicolor/formats.hpp"

#include <istream>
#include <sstream>

#include <json.hpp>

namespace equicolor {

Graph parse_dimacs(std::istream& in, const DimacsOptions& opts) {
  std::string line;
  bool have_header = false;
  long declared_edges = 0;
  long seen_edges = 0;
  Graph g;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;
    if (tag == "p") {
      if (have_header)
        throw parse_error("dimacs line " + std::to_string(lineno) +
                          ": duplicate problem line");
      std::string kind;
      long n = -1, m = -1;
      if (!(ls >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        throw parse_error("dimacs line " + std::to_string(lineno) +
                          ": malformed problem line (want 'p edge N M')");
      g = Graph(static_cast<int>(n));
      declared_edges = m;
      have_header = true;
      continue;
    }
    if (tag == "e") {
      if (!have_header)
        throw parse_error("dimacs line " + std::to_string(lineno) +
                          ": edge before problem line");
      long u = 0, v = 0;
      if (!(ls >> u >> v))
        throw parse_error("dimacs line " + std::to_string(lineno) +
                          ": malformed edge line");
      if (u < 1 || v < 1 || u > g.order() || v > g.order())
        throw parse_error("dimacs line " + std::to_string(lineno) +
                          ": vertex index out of range");
      // 1-indexed on disk, 0-indexed in memory
      if (!g.adjacent(static_cast<int>(u) - 1, static_cast<int>(v) - 1))
        ++seen_edges;
      g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
      continue;
    }
    throw parse_error("dimacs line " + std::to_string(lineno) +
                      ": unknown directive '" + tag + "'");
  }
  if (!have_header) throw parse_error("dimacs: missing problem line");
  if (seen_edges != declared_edges) {
    std::string msg = "dimacs: header declares " +
                      std::to_string(declared_edges) + " edges, found " +
                      std::to_string(seen_edges);
    if (opts.strict_edge_count) throw parse_error(msg);
    if (opts.warnings) opts.warnings->push_back(msg);
  }
  return g;
}

Graph parse_dimacs(const std::string& text, const DimacsOptions& opts) {
  std::istringstream in(text);
  return parse_dimacs(in, opts);
}

namespace {

// graph6 packs the upper triangle column by column, six bits per printable
// character offset by 63.
constexpr int kG6Offset = 63;

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw parse_error("graph6: empty line");
  std::size_t pos = 0;
  long n;
  if (line[0] != '~') {
    n = line[0] - kG6Offset;
    pos = 1;
  } else if (line.size() >= 4 && line[1] != '~') {
    n = 0;
    for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[i] - kG6Offset);
    pos = 4;
  } else if (line.size() >= 8) {
    n = 0;
    for (int i = 2; i <= 7; ++i) n = (n << 6) | (line[i] - kG6Offset);
    pos = 8;
  } else {
    throw parse_error("graph6: truncated order prefix");
  }
  if (n < 0) throw parse_error("graph6: bad order");
  long bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != need)
    throw parse_error("graph6: wrong line length for order " +
                      std::to_string(n));
  Graph g(static_cast<int>(n));
  long k = 0;
  int col = 1, row = 0;
  for (std::size_t i = pos; i < line.size(); ++i) {
    int c = line[i] - kG6Offset;
    if (c < 0 || c > 63)
      throw parse_error("graph6: character out of range");
    for (int b = 5; b >= 0 && k < bits; --b, ++k) {
      if ((c >> b) & 1) g.add_edge(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Offset + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6)
      out.push_back(static_cast<char>(kG6Offset + ((n >> s) & 63)));
  } else {
    throw precondition_error("to_graph6: order too large");
  }
  long bits = n * (n - 1) / 2;
  int acc = 0, filled = 0;
  int col = 1, row = 0;
  for (long k = 0; k < bits; ++k) {
    acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(kG6Offset + acc));
      acc = 0;
      filled = 0;
    }
    if (++row == col) {
      row = 0;
      ++col;
    }
  }
  if (filled) out.push_back(static_cast<char>(kG6Offset + (acc << (6 - filled))));
  return out;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto arr = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  j["edges"] = std::move(arr);
  return j.dump();
}

}  // namespace equicolor
