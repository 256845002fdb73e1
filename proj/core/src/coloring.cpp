#include "equicolor/coloring.hpp"

#include <algorithm>

#include <json.hpp>

#include "equicolor/formats.hpp"

namespace equicolor {

std::weak_ordering lex_compare(const Profile& a, const Profile& b) {
  if (a.r != b.r) return a.r <=> b.r;
  if (a.s != b.s) return a.s <=> b.s;
  return std::weak_ordering::equivalent;
}

Coloring::Coloring(int order, std::vector<VertexSet> classes)
    : order_(order), classes_(std::move(classes)) {
  if (order < 0) throw precondition_error("Coloring: negative order");
  class_of_.assign(static_cast<std::size_t>(order), -1);
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].empty())
      throw precondition_error("Coloring: empty class " + std::to_string(i));
    for (int v = classes_[i].first(); v >= 0; v = classes_[i].next(v)) {
      if (v >= order_)
        throw precondition_error("Coloring: vertex out of range");
      if (class_of_[v] < 0) class_of_[v] = static_cast<int>(i);
    }
  }
}

std::optional<Profile> try_profile_of(const Coloring& c) {
  Profile p;
  for (const VertexSet& cls : c.classes()) {
    switch (cls.count()) {
      case 1: ++p.t; break;
      case 2: ++p.s; break;
      case 3: ++p.r; break;
      default: return std::nullopt;
    }
  }
  return p;
}

Profile profile_of(const Coloring& c) {
  auto p = try_profile_of(c);
  if (!p)
    throw precondition_error(
        "profile_of: a class has size outside 1..3; split it first");
  return *p;
}

VerifyReport verify(const Graph& g, const Coloring& c,
                    std::optional<int> expected_k) {
  VerifyReport r;
  r.class_count = c.class_count();
  r.expected_k = expected_k;
  r.k_matches = !expected_k || *expected_k == r.class_count;

  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const VertexSet& cls : c.classes()) {
    for (int v = cls.first(); v >= 0; v = cls.next(v)) {
      if (v >= g.order()) {
        r.out_of_range.push_back(v);
        continue;
      }
      ++hits[static_cast<std::size_t>(v)];
      const VertexSet& nb = g.neighbors(v);
      for (int w = cls.next(v); w >= 0; w = cls.next(w))
        if (w < g.order() && nb.test(w)) r.bad_edges.emplace_back(v, w);
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (hits[static_cast<std::size_t>(v)] == 0) r.missing.push_back(v);
    if (hits[static_cast<std::size_t>(v)] > 1) r.duplicated.push_back(v);
  }
  r.universe_ok =
      r.missing.empty() && r.duplicated.empty() && r.out_of_range.empty();
  r.proper = r.bad_edges.empty();

  if (r.class_count > 0) {
    int lo = g.order() + 1, hi = 0;
    int lo_i = 0, hi_i = 0;
    for (int i = 0; i < r.class_count; ++i) {
      int sz = c.class_at(i).count();
      if (sz < lo) lo = sz, lo_i = i;
      if (sz > hi) hi = sz, hi_i = i;
    }
    r.size_spread = hi - lo;
    if (r.size_spread > 1) r.bad_class_pairs.emplace_back(hi_i, lo_i);
  }
  r.equitable = r.size_spread <= 1;
  return r;
}

std::string coloring_to_json(const Coloring& c) {
  nlohmann::ordered_json j;
  j["k"] = c.class_count();
  auto classes = nlohmann::ordered_json::array();
  for (const VertexSet& cls : c.classes()) classes.push_back(cls.to_vector());
  j["classes"] = std::move(classes);
  if (auto p = try_profile_of(c))
    j["profile"] = {p->r, p->s, p->t};
  else
    j["profile"] = nullptr;
  return j.dump();
}

Coloring coloring_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("coloring json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
    throw parse_error("coloring json: want an object with a 'classes' array");
  int top = 0;
  for (const auto& cls : j["classes"]) {
    if (!cls.is_array())
      throw parse_error("coloring json: each class must be an array");
    for (const auto& v : cls) {
      if (!v.is_number_integer() || v.get<long>() < 0)
        throw parse_error("coloring json: vertex ids must be integers >= 0");
      top = std::max(top, v.get<int>() + 1);
    }
  }
  std::vector<VertexSet> classes;
  for (const auto& cls : j["classes"]) {
    VertexSet s(top);
    for (const auto& v : cls) s.set(v.get<int>());
    classes.push_back(std::move(s));
  }
  if (j.contains("k") && j["k"].is_number_integer() &&
      j["k"].get<long>() != static_cast<long>(classes.size()))
    throw parse_error("coloring json: 'k' disagrees with the class list");
  return Coloring(top, std::move(classes));
}

std::string verify_report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["proper"] = r.proper;
  j["equitable"] = r.equitable;
  j["universe_ok"] = r.universe_ok;
  j["class_count"] = r.class_count;
  j["size_spread"] = r.size_spread;
  if (r.expected_k) {
    j["expected_k"] = *r.expected_k;
    j["k_matches"] = r.k_matches;
  }
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : r.bad_edges) edges.push_back({u, v});
  j["violations"]["edges"] = std::move(edges);
  auto pairs = nlohmann::ordered_json::array();
  for (auto [a, b] : r.bad_class_pairs) pairs.push_back({a, b});
  j["violations"]["class_pairs"] = std::move(pairs);
  j["violations"]["missing"] = r.missing;
  j["violations"]["duplicated"] = r.duplicated;
  j["violations"]["out_of_range"] = r.out_of_range;
  j["ok"] = r.ok();
  return j.dump();
}

}  // namespace equicolor
