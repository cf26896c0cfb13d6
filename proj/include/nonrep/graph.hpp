#ifndef NONREP_GRAPH_HPP
#define NONREP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace nonrep {

using Vertex = std::uint32_t;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

// Labeling recognized at construction. `path` and `cycle` mean the natural
// labeling (edges {i, i+1}, plus {n-1, 0} for cycles); anything else,
// including a relabeled cycle, is `general`.
enum class Topology { path, cycle, general };

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are normalized to (min, max) and kept sorted; every vertex also has
/// a sorted neighbor list, so `adjacent` costs O(log degree).
class Graph {
public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} with n=" + std::to_string(n));
      if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("multi-edge in edge list");
    edges_ = std::move(edges);
    for (auto [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
    topology_ = detect_topology();
  }

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  Topology topology() const noexcept { return topology_; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::size_t max_degree() const noexcept {
    std::size_t d = 0;
    for (const auto& list : adj_) d = std::max(d, list.size());
    return d;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : adj_[v])
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
    }
    return count == n_;
  }

  // Connected and 2-regular, under any labeling.
  bool is_cycle() const {
    if (n_ < 3) return false;
    for (const auto& list : adj_)
      if (list.size() != 2) return false;
    return is_connected();
  }

  /// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  Graph induced(std::span<const Vertex> vertices) const {
    std::vector<std::int64_t> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index.at(vertices[i]) = static_cast<std::int64_t>(i);
    std::vector<Edge> sub;
    for (auto [u, v] : edges_)
      if (index[u] >= 0 && index[v] >= 0)
        sub.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    return Graph(vertices.size(), std::move(sub));
  }

  // Short human-readable descriptor: "path:21", "cycle:8", "graph:n=10,m=10".
  std::string describe() const {
    switch (topology_) {
    case Topology::path: return "path:" + std::to_string(n_);
    case Topology::cycle: return "cycle:" + std::to_string(n_);
    case Topology::general: break;
    }
    return "graph:n=" + std::to_string(n_) + ",m=" + std::to_string(edges_.size());
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  Topology detect_topology() const {
    if (n_ == 0) return Topology::general;
    auto natural = [&](std::size_t i) { return Edge{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)}; };
    if (edges_.size() == n_ - 1) {
      for (std::size_t i = 0; i + 1 < n_; ++i)
        if (edges_[i] != natural(i)) return Topology::general;
      return Topology::path;
    }
    if (n_ >= 3 && edges_.size() == n_) {
      // sorted order puts {0, n-1} right after {0, 1}
      if (edges_[0] != natural(0) || edges_[1] != Edge{0, static_cast<Vertex>(n_ - 1)}) return Topology::general;
      for (std::size_t i = 1; i + 1 < n_; ++i)
        if (edges_[i + 1] != natural(i)) return Topology::general;
      return Topology::cycle;
    }
    return Topology::general;
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  Topology topology_ = Topology::general;
};

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(edges));
}

/// Total map vertex -> color in {1..k}. Colors are 1-based.
class Coloring {
public:
  Coloring() = default;

  Coloring(std::vector<Color> colors, int k) : colors_(std::move(colors)), k_(k) {
    if (k < 1) throw std::invalid_argument("coloring: k must be >= 1");
    for (Color c : colors_)
      if (c < 1 || c > k)
        throw std::invalid_argument("coloring: color " + std::to_string(c) + " outside 1.." + std::to_string(k));
  }

  // k taken as the largest color present.
  explicit Coloring(std::vector<Color> colors)
      : Coloring(colors, colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end())) {}

  static Coloring from_digits(std::string_view digits) {
    std::vector<Color> colors;
    colors.reserve(digits.size());
    for (char ch : digits) {
      if (ch < '1' || ch > '9')
        throw std::invalid_argument(std::string("coloring: invalid digit '") + ch + "'");
      colors.push_back(ch - '0');
    }
    if (colors.empty()) throw std::invalid_argument("coloring: empty digit string");
    return Coloring(std::move(colors));
  }

  std::string to_digits() const {
    if (k_ > 9) throw std::invalid_argument("coloring: digit form requires k <= 9");
    std::string out;
    out.reserve(colors_.size());
    for (Color c : colors_) out.push_back(static_cast<char>('0' + c));
    return out;
  }

  std::size_t size() const noexcept { return colors_.size(); }
  int k() const noexcept { return k_; }
  Color operator[](Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  // Number of distinct colors actually present.
  int used_colors() const {
    std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
    int used = 0;
    for (Color c : colors_)
      if (!seen[c]++) ++used;
    return used;
  }

  // Colors in 1..k that never appear.
  std::vector<Color> unused_colors() const {
    std::vector<char> seen(static_cast<std::size_t>(k_) + 1, 0);
    for (Color c : colors_) seen[c] = 1;
    std::vector<Color> out;
    for (Color c = 1; c <= k_; ++c)
      if (!seen[c]) out.push_back(c);
    return out;
  }

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.colors_ == b.colors_ && a.k_ == b.k_; }

private:
  std::vector<Color> colors_;
  int k_ = 1;
};

inline void require_colors(const Graph& g, const Coloring& c) {
  if (c.size() != g.size())
    throw std::invalid_argument("coloring has " + std::to_string(c.size()) + " entries but graph has " +
                                std::to_string(g.size()) + " vertices");
}

struct Walk {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

// Throws invalid_walk unless `w` is a nonempty walk in `g`.
inline void check_walk(const Graph& g, const Walk& w) {
  if (w.vertices.empty()) throw invalid_walk("walk is empty");
  for (Vertex v : w.vertices)
    if (v >= g.size()) throw invalid_walk("walk vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i + 1 < w.vertices.size(); ++i)
    if (!g.adjacent(w.vertices[i], w.vertices[i + 1]))
      throw invalid_walk("walk step " + std::to_string(w.vertices[i]) + "->" + std::to_string(w.vertices[i + 1]) +
                         " is not an edge");
}

/// Classification of a walk. For odd-length walks `repetitive` is absent and
/// `boring`/`stroll` are false, since both are only defined for length 2t.
struct WalkClass {
  bool even_length = false;
  std::optional<bool> repetitive;
  bool boring = false;
  bool stroll = false;
  bool simple_path = false;

  friend bool operator==(const WalkClass&, const WalkClass&) = default;
};

inline bool is_repetitive(std::span<const Color> seq) {
  if (seq.empty() || seq.size() % 2 != 0)
    throw std::invalid_argument("is_repetitive: sequence length must be even and >= 2");
  const std::size_t t = seq.size() / 2;
  return std::equal(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(t), seq.begin() + static_cast<std::ptrdiff_t>(t));
}

inline std::vector<Color> colors_of(const Coloring& c, const Walk& w) {
  std::vector<Color> seq;
  seq.reserve(w.length());
  for (Vertex v : w.vertices) seq.push_back(c[v]);
  return seq;
}

// Concatenated decimal colors, e.g. "12321232".
inline std::string sequence_string(std::span<const Color> seq) {
  std::string out;
  for (Color c : seq) out += std::to_string(c);
  return out;
}

inline bool is_simple(const Walk& w) {
  std::vector<Vertex> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

inline WalkClass classify_walk(const Graph& g, const Coloring& c, const Walk& w) {
  require_colors(g, c);
  check_walk(g, w);
  WalkClass out;
  out.simple_path = is_simple(w);
  out.even_length = w.length() % 2 == 0;
  if (!out.even_length) return out;
  const std::size_t t = w.length() / 2;
  std::size_t aligned = 0;
  for (std::size_t i = 0; i < t; ++i)
    if (w.vertices[i] == w.vertices[i + t]) ++aligned;
  out.boring = aligned == t;
  out.stroll = aligned == 0;
  out.repetitive = is_repetitive(colors_of(c, w));
  return out;
}

/// Lexicographically smallest pair (u < v) at distance 1 or 2 sharing a color,
/// or nullopt if `c` is a distance-2 coloring.
inline std::optional<Edge> is_distance2(const Graph& g, const Coloring& c) {
  require_colors(g, c);
  std::optional<Edge> best;
  auto offer = [&](Vertex a, Vertex b) {
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    if (!best || e < *best) best = e;
  };
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (c[nb[i]] == c[v]) offer(v, nb[i]);
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (c[nb[i]] == c[nb[j]]) offer(nb[i], nb[j]);
    }
  }
  return best;
}

// Symmetrical: degree 2 with both neighbors sharing a color.
inline bool is_symmetrical(const Graph& g, const Coloring& c, Vertex v) {
  auto nb = g.neighbors(v);
  return nb.size() == 2 && c[nb[0]] == c[nb[1]];
}

} // namespace nonrep

#endif // NONREP_GRAPH_HPP
