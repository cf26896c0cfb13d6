#ifndef NONREP_DECIDE_HPP
#define NONREP_DECIDE_HPP

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace nonrep {

// Which notion of nonrepetitiveness is checked. `walk` means "every
// repetitive walk is boring".
enum class Property { path, stroll, walk };

inline std::string to_string(Property p) {
  switch (p) {
  case Property::path: return "path";
  case Property::stroll: return "stroll";
  case Property::walk: return "walk";
  }
  return "?";
}

inline Property property_from_string(const std::string& s) {
  if (s == "path") return Property::path;
  if (s == "stroll") return Property::stroll;
  if (s == "walk") return Property::walk;
  throw std::invalid_argument("unknown property '" + s + "' (expected path, stroll or walk)");
}

/// A repetitive walk that violates `violated` under the checked coloring.
struct Witness {
  Walk walk;
  WalkClass cls;
  Property violated = Property::path;

  std::size_t half_length() const noexcept { return walk.length() / 2; }
};

// Pair (u, w) with c(u) = c(w); u is a vertex of the first half of a
// repetitive walk and w the vertex aligned with it in the second half.
struct ProductState {
  Vertex u = 0;
  Vertex w = 0;

  bool diagonal() const noexcept { return u == w; }
};

namespace detail {

// Builds a witness from a product walk s_1..s_t: firsts then seconds.
inline Witness witness_from_states(const Graph& g, const Coloring& c, const std::vector<ProductState>& states,
                                   Property violated) {
  Walk walk;
  walk.vertices.reserve(2 * states.size());
  for (const auto& s : states) walk.vertices.push_back(s.u);
  for (const auto& s : states) walk.vertices.push_back(s.w);
  WalkClass cls = classify_walk(g, c, walk);
  return Witness{std::move(walk), cls, violated};
}

// A repetitive walk v_1..v_2t is a product walk s_i = (v_i, v_{t+i}) in the
// color-matched product graph, closed by the link v_t ~ v_{t+1}, i.e.
// first(s_t) ~ second(s_1). For each anchor b = second(s_1) a multi-source BFS
// over (state, offdiag-seen bit) finds the shortest such product walk.
//
// allow_diagonal = false: strolls (every state off-diagonal).
// allow_diagonal = true: nonboring walks (bit must be set at acceptance).
//
// Returns the shortest witness; ties go to the lexicographically smallest
// walk among the per-anchor winners. With first_only the first acceptance is
// returned immediately.
inline std::optional<Witness> product_search(const Graph& g, const Coloring& c, bool allow_diagonal, bool first_only,
                                             Property violated) {
  require_colors(g, c);
  const std::size_t n = g.size();
  if (n == 0) return std::nullopt;
  const std::size_t layer = n * n;
  constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> pred(2 * layer, unseen);
  std::vector<std::uint32_t> depth(2 * layer, 0);
  std::vector<std::uint32_t> touched;
  std::deque<std::uint32_t> queue;

  auto encode = [&](Vertex u, Vertex w, bool bit) {
    return static_cast<std::uint32_t>((bit ? layer : 0) + static_cast<std::size_t>(u) * n + w);
  };
  auto decode = [&](std::uint32_t id) {
    std::size_t rest = id % layer;
    return ProductState{static_cast<Vertex>(rest / n), static_cast<Vertex>(rest % n)};
  };

  std::optional<Witness> best;
  for (Vertex b = 0; b < n; ++b) {
    for (auto id : touched) pred[id] = unseen;
    touched.clear();
    queue.clear();
    for (Vertex a = 0; a < n; ++a) {
      if (c[a] != c[b] || (!allow_diagonal && a == b)) continue;
      auto id = encode(a, b, a != b);
      pred[id] = id; // sources point at themselves
      depth[id] = 1;
      touched.push_back(id);
      queue.push_back(id);
    }
    while (!queue.empty()) {
      auto id = queue.front();
      queue.pop_front();
      if (best && depth[id] > best->half_length()) break;
      const bool bit = id >= layer;
      const ProductState s = decode(id);
      if (bit && g.adjacent(s.u, b)) {
        std::vector<ProductState> states;
        for (auto cur = id;; cur = pred[cur]) {
          states.push_back(decode(cur));
          if (pred[cur] == cur) break;
        }
        std::reverse(states.begin(), states.end());
        Witness found = witness_from_states(g, c, states, violated);
        if (first_only) return found;
        if (!best || found.half_length() < best->half_length() ||
            (found.half_length() == best->half_length() && found.walk < best->walk))
          best = std::move(found);
        break;
      }
      for (Vertex u2 : g.neighbors(s.u))
        for (Vertex w2 : g.neighbors(s.w)) {
          if (c[u2] != c[w2] || (!allow_diagonal && u2 == w2)) continue;
          auto next = encode(u2, w2, bit || u2 != w2);
          if (pred[next] != unseen) continue;
          pred[next] = id;
          depth[next] = depth[id] + 1;
          touched.push_back(next);
          queue.push_back(next);
        }
    }
  }
  return best;
}

} // namespace detail

/// A repetitive stroll under `c`, or nullopt iff `c` is stroll-nonrepetitive.
/// Exact: product-graph reachability over at most n^2 states per anchor.
inline std::optional<Witness> exists_repetitive_stroll(const Graph& g, const Coloring& c, bool first_only = false) {
  return detail::product_search(g, c, false, first_only, Property::stroll);
}

/// A repetitive nonboring walk, or nullopt iff `c` is walk-nonrepetitive.
inline std::optional<Witness> exists_repetitive_nonboring_walk(const Graph& g, const Coloring& c,
                                                               bool first_only = false) {
  return detail::product_search(g, c, true, first_only, Property::walk);
}

/// A simple path of even order with repetitive colors, or nullopt.
///
/// Plain DFS over simple paths from every start vertex in increasing order,
/// neighbors in increasing order, so the first hit is the lexicographically
/// smallest repetitive path from the lowest start. Exponential on general
/// graphs; O(n^3) on paths and cycles.
inline std::optional<Witness> exists_repetitive_path(const Graph& g, const Coloring& c) {
  require_colors(g, c);
  const std::size_t n = g.size();
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> path;
  std::vector<Color> seq;

  // explicit stack of (vertex, next neighbor index)
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  for (Vertex start = 0; start < n; ++start) {
    std::vector<Frame> stack{{start, 0}};
    path.assign(1, start);
    seq.assign(1, c[start]);
    on_path[start] = 1;
    while (!stack.empty()) {
      Frame& top = stack.back();
      auto nb = g.neighbors(top.v);
      if (top.next == nb.size()) {
        on_path[top.v] = 0;
        stack.pop_back();
        path.pop_back();
        seq.pop_back();
        continue;
      }
      Vertex u = nb[top.next++];
      if (on_path[u]) continue;
      on_path[u] = 1;
      path.push_back(u);
      seq.push_back(c[u]);
      stack.push_back({u, 0});
      if (seq.size() % 2 == 0 && is_repetitive(seq)) {
        Walk w{path};
        WalkClass cls = classify_walk(g, c, w);
        return Witness{std::move(w), cls, Property::path};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Witness> find_witness(const Graph& g, const Coloring& c, Property p, bool first_only = false) {
  switch (p) {
  case Property::path: return exists_repetitive_path(g, c);
  case Property::stroll: return exists_repetitive_stroll(g, c, first_only);
  case Property::walk: return exists_repetitive_nonboring_walk(g, c, first_only);
  }
  return std::nullopt;
}

inline bool is_nonrepetitive(const Graph& g, const Coloring& c, Property p) {
  return !find_witness(g, c, p, true).has_value();
}

/// Walk-nonrepetitiveness on a cycle via the distance-2 + path-nonrepetitive
/// characterization. Accepts any labeling of a cycle.
inline bool is_walk_nonrepetitive_cycle_fast(const Graph& g, const Coloring& c) {
  if (!g.is_cycle()) throw std::invalid_argument("is_walk_nonrepetitive_cycle_fast: graph is not a cycle");
  return !is_distance2(g, c) && !exists_repetitive_path(g, c);
}

// True iff `w` really violates `w.violated` under c.
inline bool witness_is_sound(const Graph& g, const Coloring& c, const Witness& w) {
  WalkClass cls;
  try {
    cls = classify_walk(g, c, w.walk);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (!cls.even_length || !cls.repetitive.value_or(false) || !(cls == w.cls)) return false;
  switch (w.violated) {
  case Property::path: return cls.simple_path;
  case Property::stroll: return cls.stroll;
  case Property::walk: return !cls.boring;
  }
  return false;
}

} // namespace nonrep

#endif // NONREP_DECIDE_HPP
