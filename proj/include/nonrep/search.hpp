#ifndef NONREP_SEARCH_HPP
#define NONREP_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decide.hpp"
#include "graph.hpp"

namespace nonrep {

inline constexpr std::uint64_t default_node_budget = 1'000'000'000ULL;

struct SolveOptions {
  std::uint64_t node_budget = default_node_budget; // color-assignment attempts, shared across k
  bool symmetry_breaking = true;                   // color j only after 1..j-1 have appeared
  bool prefix_pruning = true;                      // reject partial colorings with an internal witness
};

struct SearchOutcome {
  std::optional<Coloring> coloring;
  bool aborted = false;
  std::uint64_t nodes = 0;
};

/// Chromatic value for one property, with its certificate and the list of
/// k proven infeasible by complete search. `value` is absent when every
/// k <= kMax was exhausted or the search aborted.
struct SolveReport {
  Property property = Property::path;
  std::string graph;
  std::optional<int> value;
  std::optional<Coloring> certificate;
  std::vector<int> exhausted_k;
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double> wall_time{0};
  bool aborted = false;
};

/// Vertex order used by the search: natural order on naturally labeled paths
/// and cycles, BFS from vertex 0 (then from the next unvisited vertex)
/// otherwise.
inline std::vector<Vertex> search_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Vertex> order;
  order.reserve(n);
  if (g.topology() != Topology::general) {
    for (std::size_t v = 0; v < n; ++v) order.push_back(static_cast<Vertex>(v));
    return order;
  }
  std::vector<char> seen(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      Vertex v = order[head++];
      for (Vertex u : g.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          order.push_back(u);
        }
    }
  }
  return order;
}

namespace detail {

// Backtracking over k-colorings in search_order. A partial coloring is pruned
// only by a witness lying entirely inside the colored vertices (or, for the
// walk property, a distance-2 clash, which is a witness uvwv in g itself), so
// pruning never loses a solution. A complete coloring is always re-checked by
// the full decider.
class ColoringSearch {
public:
  ColoringSearch(const Graph& g, Property property, int k, const SolveOptions& options, std::uint64_t budget)
      : g_(g), property_(property), k_(k), options_(options), budget_(budget), order_(search_order(g)),
        colors_(g.size(), 0), linear_(g.topology() != Topology::general) {
    for (std::size_t p = 0; p < order_.size(); ++p)
      prefix_graphs_.push_back(g.induced(std::span<const Vertex>(order_.data(), p + 1)));
  }

  SearchOutcome run() {
    SearchOutcome out;
    if (g_.size() == 0) {
      out.coloring = Coloring({}, k_);
      return out;
    }
    try {
      if (extend(0)) out.coloring = Coloring(colors_, k_);
    } catch (const budget_exceeded&) {
      out.aborted = true;
    }
    out.nodes = nodes_;
    return out;
  }

private:
  bool extend(std::size_t p) {
    const Vertex v = order_[p];
    const int limit = options_.symmetry_breaking ? std::min(k_, max_used_ + 1) : k_;
    for (int col = 1; col <= limit; ++col) {
      if (++nodes_ > budget_) throw budget_exceeded("node budget exceeded");
      colors_[v] = col;
      const int saved = max_used_;
      max_used_ = std::max(max_used_, col);
      bool ok = !options_.prefix_pruning || consistent(p);
      if (ok) {
        if (p + 1 == order_.size()) {
          if (is_nonrepetitive(g_, Coloring(colors_, k_), property_)) return true;
        } else if (extend(p + 1)) {
          return true;
        }
      }
      max_used_ = saved;
      colors_[v] = 0;
    }
    return false;
  }

  bool consistent(std::size_t p) const {
    const Vertex v = order_[p];
    const Color col = colors_[v];
    for (Vertex u : g_.neighbors(v))
      if (colors_[u] == col) return false;
    if (property_ == Property::walk)
      for (Vertex u : g_.neighbors(v))
        for (Vertex x : g_.neighbors(u))
          if (x != v && colors_[x] == col) return false;
    if (linear_ && !even_segments_ok(p)) return false;
    if (p + 1 == order_.size()) return true; // the full decider runs next
    // walk on a linear prefix is settled by distance-2 plus segments
    if (linear_ && property_ != Property::stroll) return true;
    std::vector<Color> prefix(p + 1);
    for (std::size_t i = 0; i <= p; ++i) prefix[i] = colors_[order_[i]];
    return is_nonrepetitive(prefix_graphs_[p], Coloring(std::move(prefix), k_), property_);
  }

  // Colored prefix 0..p is the path v_0..v_p; only segments ending at p are new.
  bool even_segments_ok(std::size_t p) const {
    for (std::size_t t = 1; 2 * t <= p + 1; ++t) {
      const std::size_t begin = p + 1 - 2 * t;
      bool square = true;
      for (std::size_t i = 0; i < t && square; ++i) square = colors_[begin + i] == colors_[begin + t + i];
      if (square) return false;
    }
    return true;
  }

  const Graph& g_;
  Property property_;
  int k_;
  SolveOptions options_;
  std::uint64_t budget_;
  std::vector<Vertex> order_;
  std::vector<Graph> prefix_graphs_;
  std::vector<Color> colors_;
  bool linear_;
  int max_used_ = 0;
  std::uint64_t nodes_ = 0;
};

} // namespace detail

/// First `property`-nonrepetitive k-coloring in canonical search order.
inline SearchOutcome find_coloring(const Graph& g, Property property, int k, const SolveOptions& options = {}) {
  if (k < 1) throw std::invalid_argument("find_coloring: k must be >= 1");
  return detail::ColoringSearch(g, property, k, options, options.node_budget).run();
}

/// Smallest k <= k_max admitting a `property`-nonrepetitive k-coloring.
inline SolveReport solve(const Graph& g, Property property, int k_max, const SolveOptions& options = {}) {
  if (k_max < 1) throw std::invalid_argument("solve: kMax must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  SolveReport report;
  report.property = property;
  report.graph = g.describe();
  for (int k = 1; k <= k_max; ++k) {
    const std::uint64_t remaining = options.node_budget - std::min(options.node_budget, report.nodes_visited);
    auto outcome = detail::ColoringSearch(g, property, k, options, remaining).run();
    report.nodes_visited += outcome.nodes;
    if (outcome.aborted) {
      report.aborted = true;
      break;
    }
    if (outcome.coloring) {
      report.value = k;
      report.certificate = std::move(outcome.coloring);
      break;
    }
    report.exhausted_k.push_back(k);
  }
  report.wall_time = std::chrono::steady_clock::now() - started;
  return report;
}

inline bool verify_certificate(const Graph& g, const Coloring& c, Property property) {
  if (c.size() != g.size()) return false;
  return is_nonrepetitive(g, c, property);
}

} // namespace nonrep

#endif // NONREP_SEARCH_HPP
