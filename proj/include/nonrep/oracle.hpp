#ifndef NONREP_ORACLE_HPP
#define NONREP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "decide.hpp"
#include "graph.hpp"

namespace nonrep {

/// Result of a bounded brute-force check. Absence of a witness only means
/// none exists with half-length <= bound.
struct OracleVerdict {
  Property property = Property::path;
  std::size_t bound = 0;
  std::optional<Walk> witness;
  bool aborted = false; // walk budget hit; `witness` is whatever was found before
  std::uint64_t walks_enumerated = 0;
};

inline constexpr std::uint64_t default_oracle_walk_limit = 2'000'000'000ULL;

inline std::size_t default_oracle_bound(const Graph& g) { return g.size() * g.size(); }

/// Enumerates every walk of length 2, 4, ..., 2*bound (in that order, each
/// level by DFS with neighbors in increasing id) and tests the definitions
/// directly. Nothing is pruned: this is the slow reference the deciders are
/// validated against.
inline OracleVerdict brute_force_check(const Graph& g, const Coloring& c, Property property, std::size_t bound,
                                       std::uint64_t walk_limit = default_oracle_walk_limit) {
  if (bound < 1) throw std::invalid_argument("brute_force_check: bound must be >= 1");
  require_colors(g, c);
  OracleVerdict verdict;
  verdict.property = property;
  verdict.bound = bound;
  const std::size_t n = g.size();

  auto violates = [&](const std::vector<Vertex>& walk) {
    const std::size_t t = walk.size() / 2;
    for (std::size_t i = 0; i < t; ++i)
      if (c[walk[i]] != c[walk[i + t]]) return false;
    switch (property) {
    case Property::path:
      for (std::size_t i = 0; i < walk.size(); ++i)
        for (std::size_t j = i + 1; j < walk.size(); ++j)
          if (walk[i] == walk[j]) return false;
      return true;
    case Property::stroll:
      for (std::size_t i = 0; i < t; ++i)
        if (walk[i] == walk[i + t]) return false;
      return true;
    case Property::walk:
      for (std::size_t i = 0; i < t; ++i)
        if (walk[i] != walk[i + t]) return true;
      return false;
    }
    return false;
  };

  std::vector<Vertex> walk;
  std::vector<std::size_t> next;
  for (std::size_t half = 1; half <= bound; ++half) {
    const std::size_t len = 2 * half;
    for (Vertex start = 0; start < n; ++start) {
      walk.assign(1, start);
      next.assign(1, 0);
      while (!walk.empty()) {
        if (walk.size() == len) {
          if (++verdict.walks_enumerated > walk_limit) {
            verdict.aborted = true;
            return verdict;
          }
          if (violates(walk)) {
            verdict.witness = Walk{walk};
            return verdict;
          }
          walk.pop_back();
          next.pop_back();
          continue;
        }
        auto nb = g.neighbors(walk.back());
        if (next.back() == nb.size()) {
          walk.pop_back();
          next.pop_back();
          continue;
        }
        walk.push_back(nb[next.back()++]);
        next.push_back(0);
      }
    }
  }
  return verdict;
}

} // namespace nonrep

#endif // NONREP_ORACLE_HPP
