#ifndef NONREP_JSON_IO_HPP
#define NONREP_JSON_IO_HPP

// JSON and text interchange. Every document carries "schema": 1.

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "construct.hpp"
#include "decide.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "saseq.hpp"
#include "search.hpp"

namespace nonrep {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.size()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON must be an object with \"n\" and \"edges\"");
  const auto& n = j.at("n");
  if (!n.is_number_integer() || n.get<long long>() < 0) throw std::invalid_argument("graph JSON: \"n\" must be a non-negative integer");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw std::invalid_argument("graph JSON: each edge must be [u, v] with non-negative ids");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(n.get<std::size_t>(), std::move(edges));
}

// Digit string when k <= 9, array otherwise.
inline json coloring_to_json(const Coloring& c) {
  if (c.k() <= 9) return c.to_digits();
  return json(std::vector<Color>(c.colors().begin(), c.colors().end()));
}

inline Coloring coloring_from_json(const json& j) {
  if (j.is_string()) return Coloring::from_digits(j.get<std::string>());
  if (j.is_array()) {
    std::vector<Color> colors;
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw std::invalid_argument("coloring JSON array must hold integers");
      colors.push_back(x.get<Color>());
    }
    if (colors.empty()) throw std::invalid_argument("coloring JSON array is empty");
    return Coloring(std::move(colors));
  }
  throw std::invalid_argument("coloring must be a digit string or an integer array");
}

/// Parses "path:N" or "cycle:N".
inline Graph graph_from_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("graph spec must look like path:N or cycle:N");
  const auto kind = spec.substr(0, colon);
  const auto digits = spec.substr(colon + 1);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
    throw std::invalid_argument("graph spec: bad vertex count '" + std::string(digits) + "'");
  if (kind == "path") return path_graph(n);
  if (kind == "cycle") return cycle_graph(n);
  throw std::invalid_argument("graph spec: unknown kind '" + std::string(kind) + "'");
}

inline json walk_class_to_json(const WalkClass& cls) {
  json j{{"evenLength", cls.even_length}, {"boring", cls.boring}, {"stroll", cls.stroll}, {"simplePath", cls.simple_path}};
  j["repetitive"] = cls.repetitive ? json(*cls.repetitive) : json(nullptr);
  return j;
}

inline json witness_to_json(const Witness& w, const Coloring& c) {
  return {{"property", to_string(w.violated)},
          {"walk", w.walk.vertices},
          {"colors", sequence_string(colors_of(c, w.walk))},
          {"class", walk_class_to_json(w.cls)}};
}

inline json solve_report_to_json(const SolveReport& r) {
  json j{{"schema", schema_version},
         {"property", to_string(r.property)},
         {"graph", r.graph},
         {"exhaustedK", r.exhausted_k},
         {"nodesVisited", r.nodes_visited},
         {"wallTimeMs", r.wall_time.count() * 1000.0},
         {"aborted", r.aborted}};
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["certificate"] = r.certificate ? coloring_to_json(*r.certificate) : json(nullptr);
  return j;
}

inline json edge_class_to_json(const EdgeClass& e) {
  return {{"index", e.index}, {"edge", {e.edge.first, e.edge.second}}, {"good", e.good}};
}

inline json trace_to_json(const ConstructionTrace& t) {
  json matching = json::array();
  for (const auto& e : t.matching) matching.push_back(edge_class_to_json(e));
  return {{"schema", schema_version},
          {"n", t.n},
          {"k", t.k},
          {"m", t.m},
          {"baseLength", t.base.size()},
          {"baseColoring", coloring_to_json(t.base)},
          {"matching", std::move(matching)},
          {"removed", t.removed},
          {"subdivided", t.subdivided},
          {"coloring", coloring_to_json(t.coloring)}};
}

inline json enumeration_to_json(const HFreeEnumeration& e) {
  json maximal = json::array();
  for (const auto& w : e.maximal_words) maximal.push_back(w.str());
  std::vector<std::size_t> counts(e.count_by_length.begin() + 1, e.count_by_length.end());
  return {{"schema", schema_version},
          {"maxLength", e.max_length},
          {"maximalWords", std::move(maximal)},
          {"countByLength", counts},
          {"total", e.words.size()},
          {"capped", e.capped}};
}

inline json oracle_verdict_to_json(const OracleVerdict& v) {
  json j{{"schema", schema_version},
         {"property", to_string(v.property)},
         {"bound", v.bound},
         {"bounded", true},
         {"aborted", v.aborted},
         {"walksEnumerated", v.walks_enumerated}};
  j["witness"] = v.witness ? json(v.witness->vertices) : json(nullptr);
  return j;
}

} // namespace nonrep

#endif // NONREP_JSON_IO_HPP
