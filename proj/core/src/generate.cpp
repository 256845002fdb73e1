#include "equicolor/generate.hpp"

#include <charconv>
#include <random>
#include <vector>

#include "equicolor/formats.hpp"

namespace equicolor {

namespace {

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      out.push_back(text);
      return out;
    }
    out.push_back(text.substr(0, colon));
    text.remove_prefix(colon + 1);
  }
}

int parse_int(std::string_view f, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc{} || ptr != f.data() + f.size() || value < 0)
    throw parse_error(std::string("generator spec: bad ") + what);
  return value;
}

double parse_prob(std::string_view f) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
  if (ec != std::errc{} || ptr != f.data() + f.size() || value < 0 ||
      value > 1)
    throw parse_error("generator spec: probability must be in [0,1]");
  return value;
}

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph gnp(int n, double p, std::mt19937_64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit_draw(rng) < p) g.add_edge(u, v);
  return g;
}

}  // namespace

GenSpec GenSpec::parse(std::string_view text) {
  auto fields = split_fields(text);
  auto want = [&](std::size_t k) {
    if (fields.size() != k + 1)
      throw parse_error("generator spec: wrong number of fields in '" +
                        std::string(text) + "'");
  };
  GenSpec spec;
  std::string_view name = fields[0];
  if (name == "complete") {
    spec.kind = Kind::complete;
    want(1);
    spec.a = parse_int(fields[1], "order");
  } else if (name == "cycle") {
    spec.kind = Kind::cycle;
    want(1);
    spec.a = parse_int(fields[1], "order");
    if (spec.a < 3) throw parse_error("generator spec: cycle needs >= 3");
  } else if (name == "path") {
    spec.kind = Kind::path;
    want(1);
    spec.a = parse_int(fields[1], "order");
  } else if (name == "complete_bipartite") {
    spec.kind = Kind::complete_bipartite;
    want(2);
    spec.a = parse_int(fields[1], "side a");
    spec.b = parse_int(fields[2], "side b");
  } else if (name == "hypercube") {
    spec.kind = Kind::hypercube;
    want(1);
    spec.a = parse_int(fields[1], "dimension");
    if (spec.a > 20) throw parse_error("generator spec: dimension too large");
  } else if (name == "gnp" || name == "gnp_window") {
    spec.kind = name == "gnp" ? Kind::gnp : Kind::gnp_window;
    want(2);
    spec.a = parse_int(fields[1], "order");
    spec.p = parse_prob(fields[2]);
  } else {
    throw parse_error("generator spec: unknown kind '" + std::string(name) +
                      "'");
  }
  return spec;
}

Graph generate(const GenSpec& spec, std::uint64_t seed) {
  switch (spec.kind) {
    case GenSpec::Kind::complete: {
      Graph g(spec.a);
      for (int u = 0; u < spec.a; ++u)
        for (int v = u + 1; v < spec.a; ++v) g.add_edge(u, v);
      return g;
    }
    case GenSpec::Kind::cycle: {
      Graph g(spec.a);
      for (int v = 0; v < spec.a; ++v) g.add_edge(v, (v + 1) % spec.a);
      return g;
    }
    case GenSpec::Kind::path: {
      Graph g(spec.a);
      for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case GenSpec::Kind::complete_bipartite: {
      Graph g(spec.a + spec.b);
      for (int u = 0; u < spec.a; ++u)
        for (int v = 0; v < spec.b; ++v) g.add_edge(u, spec.a + v);
      return g;
    }
    case GenSpec::Kind::hypercube: {
      int n = 1 << spec.a;
      Graph g(n);
      for (int u = 0; u < n; ++u)
        for (int d = 0; d < spec.a; ++d)
          if (u < (u ^ (1 << d))) g.add_edge(u, u ^ (1 << d));
      return g;
    }
    case GenSpec::Kind::gnp: {
      std::mt19937_64 rng(seed);
      return gnp(spec.a, spec.p, rng);
    }
    case GenSpec::Kind::gnp_window: {
      std::mt19937_64 rng(seed);
      for (int attempt = 0; attempt < spec.retry_cap; ++attempt) {
        Graph g = gnp(spec.a, spec.p, rng);
        if (window_check(g).in_window) return g;
      }
      throw precondition_error(
          "gnp_window: retry cap exhausted; the requested order and density "
          "may not be able to land in the degree window");
    }
  }
  throw internal_error("generate: unhandled kind");
}

}  // namespace equicolor
