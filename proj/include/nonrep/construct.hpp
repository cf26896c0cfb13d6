#ifndef NONREP_CONSTRUCT_HPP
#define NONREP_CONSTRUCT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decide.hpp"
#include "graph.hpp"
#include "search.hpp"

namespace nonrep {

struct Table1Row {
  std::size_t n;
  int sigma;
  std::string_view colors;
};

// Minimum walk-nonrepetitive colorings of C_4..C_21.
inline constexpr std::array<Table1Row, 18> table1_rows{{
    {4, 4, "1234"},
    {5, 5, "12345"},
    {6, 4, "123423"},
    {7, 5, "1234253"},
    {8, 4, "12341243"},
    {9, 4, "123413243"},
    {10, 4, "1234124324"},
    {11, 4, "12312432134"},
    {12, 4, "123412431423"},
    {13, 4, "1234124314324"},
    {14, 4, "12312412314234"},
    {15, 4, "123142143142134"},
    {16, 4, "1231423421423143"},
    {17, 4, "12314324134231234"},
    {18, 4, "123142341324123143"},
    {19, 4, "1234231241234132134"},
    {20, 4, "12314214324123124134"},
    {21, 4, "123412413421324321423"},
}};

// Stroll-nonrepetitive 3-coloring of P_21; its prefixes cover P_4..P_20.
inline constexpr std::string_view p21_stroll_word = "121312321323123213121";

inline std::pair<int, Coloring> table1_coloring(std::size_t n) {
  if (n < 4 || n > 21) throw std::invalid_argument("table1_coloring: n must be in 4..21");
  const auto& row = table1_rows[n - 4];
  return {row.sigma, Coloring::from_digits(row.colors)};
}

/// Matching edge e_i = v_{2i} v_{2i+1} (0-indexed) of an even cycle, good iff
/// neither endpoint is symmetrical.
struct EdgeClass {
  std::size_t index = 0;
  Edge edge;
  bool good = false;

  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

/// Classifies the matching {v_0v_1, v_2v_3, ...} of C_2k under a proper
/// path-nonrepetitive 3-coloring. For k >= 8 at least two edges are good;
/// anything else on valid input throws internal_error.
inline std::vector<EdgeClass> classify_edges(const Coloring& base) {
  const std::size_t len = base.size();
  if (len < 4 || len % 2 != 0) throw std::invalid_argument("classify_edges: needs an even cycle of length >= 4");
  if (base.k() > 3) throw std::invalid_argument("classify_edges: needs a 3-coloring");
  const Graph cycle = cycle_graph(len);
  if (exists_repetitive_path(cycle, base))
    throw std::invalid_argument("classify_edges: coloring is not path-nonrepetitive");
  std::vector<EdgeClass> out;
  std::size_t good = 0;
  for (std::size_t i = 0; 2 * i < len; ++i) {
    const auto a = static_cast<Vertex>(2 * i);
    const auto b = static_cast<Vertex>(2 * i + 1);
    EdgeClass e{i, {a, b}, !is_symmetrical(cycle, base, a) && !is_symmetrical(cycle, base, b)};
    good += e.good;
    out.push_back(e);
  }
  if (len / 2 >= 8 && good < 2)
    throw internal_error("classify_edges: fewer than two good matching edges on C_" + std::to_string(len));
  return out;
}

/// Record of one subdivision construction: base C_2k, matching, which good
/// edges were left alone, and the resulting coloring of C_n.
struct ConstructionTrace {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  Coloring base;
  std::vector<EdgeClass> matching;
  std::vector<std::size_t> removed;    // matching indices not subdivided
  std::vector<std::size_t> subdivided; // matching indices subdivided once
  Coloring coloring;                   // final coloring, in cycle order
};

/// Subdivides every matching edge except `removed` and gives the new vertices
/// color 4. Vertex order of the result follows the base cycle.
inline ConstructionTrace subdivide_matching(const Coloring& base, std::span<const std::size_t> removed) {
  ConstructionTrace trace;
  trace.base = base;
  trace.matching = classify_edges(base);
  trace.k = base.size() / 2;
  trace.removed.assign(removed.begin(), removed.end());
  std::vector<char> skip(trace.k, 0);
  for (std::size_t i : removed) {
    if (i >= trace.k) throw std::invalid_argument("subdivide_matching: matching index out of range");
    skip[i] = 1;
  }
  std::vector<Color> colors;
  for (std::size_t i = 0; i < base.size(); ++i) {
    colors.push_back(base[static_cast<Vertex>(i)]);
    if (i % 2 == 0 && !skip[i / 2]) {
      colors.push_back(4);
      trace.subdivided.push_back(i / 2);
    }
  }
  trace.m = trace.removed.size();
  trace.n = colors.size();
  trace.coloring = Coloring(std::move(colors), 4);
  return trace;
}

// Every symmetrical base vertex has its matching edge subdivided.
inline bool covers_symmetrical_vertices(const ConstructionTrace& trace) {
  const Graph base_cycle = cycle_graph(trace.base.size());
  std::vector<char> covered(trace.base.size(), 0);
  for (std::size_t i : trace.subdivided) covered[2 * i] = covered[2 * i + 1] = 1;
  for (Vertex v = 0; v < trace.base.size(); ++v)
    if (is_symmetrical(base_cycle, trace.base, v) && !covered[v]) return false;
  return true;
}

/// Walk-nonrepetitive 4-coloring of C_9 from the path-nonrepetitive C_6
/// coloring 231321 with all three matching edges subdivided.
inline ConstructionTrace nine_cycle_subdivision() { return subdivide_matching(Coloring::from_digits("231321"), {}); }

/// Walk-nonrepetitive 4-coloring of C_n, n > 21: k = ceil(n/3), a
/// path-nonrepetitive 3-coloring of C_2k from search, m = 3k - n good
/// matching edges kept (lowest indices first), the rest subdivided.
/// The result is always re-checked by the walk decider.
inline ConstructionTrace sigma_cycle_coloring(std::size_t n, const SolveOptions& options = {}) {
  if (n <= 21) throw std::invalid_argument("sigma_cycle_coloring: n must be > 21");
  const std::size_t k = (n + 2) / 3;
  const std::size_t m = 3 * k - n;
  const Graph base_cycle = cycle_graph(2 * k);
  SolveReport base = solve(base_cycle, Property::path, 3, options);
  if (base.aborted) throw budget_exceeded("sigma_cycle_coloring: base search on C_" + std::to_string(2 * k) + " aborted");
  if (!base.value || *base.value != 3)
    throw internal_error("sigma_cycle_coloring: no path-nonrepetitive 3-coloring of C_" + std::to_string(2 * k));

  const auto matching = classify_edges(*base.certificate);
  std::vector<std::size_t> removed;
  for (const auto& e : matching)
    if (e.good && removed.size() < m) removed.push_back(e.index);
  if (removed.size() != m) throw internal_error("sigma_cycle_coloring: not enough good edges");

  ConstructionTrace trace = subdivide_matching(*base.certificate, removed);
  if (trace.n != n || !covers_symmetrical_vertices(trace))
    throw internal_error("sigma_cycle_coloring: trace invariants violated for n=" + std::to_string(n));
  if (exists_repetitive_nonboring_walk(cycle_graph(n), trace.coloring, true))
    throw internal_error("sigma_cycle_coloring: constructed coloring is not walk-nonrepetitive");
  return trace;
}

/// Chromatic value with a verified certificate; `note` flags conventions.
struct ChromaticCertificate {
  int value = 0;
  Coloring coloring;
  std::string note;
};

namespace detail {
inline void require_stroll_nonrepetitive(const Graph& g, const Coloring& c, const char* who) {
  if (exists_repetitive_stroll(g, c, true))
    throw internal_error(std::string(who) + ": certificate has a repetitive stroll");
}
} // namespace detail

/// rho(P_n): n = 3 gives 2 (121); 4..21 a prefix of the P_21 word; n >= 22 a
/// searched 4-coloring (value 4 since no 3-coloring survives past 21 vertices).
inline ChromaticCertificate rho_path_coloring(std::size_t n, const SolveOptions& options = {}) {
  if (n < 3) throw std::invalid_argument("rho_path_coloring: n must be >= 3");
  ChromaticCertificate out;
  if (n == 3) {
    out = {2, Coloring::from_digits("121"),
           "a proper 2-coloring of P3 is already stroll-nonrepetitive; the 3-color value applies from n = 4"};
  } else if (n <= 21) {
    out = {3, Coloring::from_digits(p21_stroll_word.substr(0, n)), ""};
  } else {
    auto found = find_coloring(path_graph(n), Property::stroll, 4, options);
    if (found.aborted) throw budget_exceeded("rho_path_coloring: search on P_" + std::to_string(n) + " aborted");
    if (!found.coloring) throw internal_error("rho_path_coloring: no stroll-nonrepetitive 4-coloring found");
    out = {4, *found.coloring, "4-coloring found by search"};
  }
  detail::require_stroll_nonrepetitive(path_graph(n), out.coloring, "rho_path_coloring");
  return out;
}

/// rho(C_n): 3 for n in {3,4,6,8}, 4 otherwise, with explicit certificates.
/// n >= 9 reuses the walk-nonrepetitive 4-colorings.
inline ChromaticCertificate rho_cycle_coloring(std::size_t n, const SolveOptions& options = {}) {
  if (n < 3) throw std::invalid_argument("rho_cycle_coloring: n must be >= 3");
  ChromaticCertificate out;
  switch (n) {
  case 3: out = {3, Coloring::from_digits("123"), "two colors appear once"}; break;
  case 4: out = {3, Coloring::from_digits("1213"), "two colors appear once"}; break;
  case 5: out = {4, Coloring::from_digits("12342"), "only color 2 repeats"}; break;
  case 6: out = {3, Coloring::from_digits("212313"), ""}; break;
  case 7:
    out = {4, Coloring::from_digits(std::string(p21_stroll_word.substr(0, 6)) + "4"), "P6 prefix plus a unique color 4"};
    break;
  case 8: out = {3, Coloring::from_digits("12132123"), ""}; break;
  default:
    if (n <= 21) {
      out = {4, table1_coloring(n).second, "walk-nonrepetitive coloring"};
    } else {
      out = {4, sigma_cycle_coloring(n, options).coloring, "walk-nonrepetitive subdivision construction"};
    }
  }
  detail::require_stroll_nonrepetitive(cycle_graph(n), out.coloring, "rho_cycle_coloring");
  return out;
}

/// Unicyclic graph: triangle a,b,c with a pendant path b-d-e-f-g-h-i-j.
/// Vertex ids a..j = 0..9. Distance-2 and path-nonrepetitive, but some
/// repetitive walk is nonboring.
inline std::pair<Graph, Coloring> figure1_fixture() {
  enum : Vertex { a, b, c, d, e, f, g, h, i, j };
  Graph graph(10, {{a, b}, {a, c}, {b, c}, {b, d}, {d, e}, {e, f}, {f, g}, {g, h}, {h, i}, {i, j}});
  return {std::move(graph), Coloring::from_digits("1234123124")};
}

} // namespace nonrep

#endif // NONREP_CONSTRUCT_HPP
