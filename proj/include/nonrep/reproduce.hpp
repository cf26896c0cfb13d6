#ifndef NONREP_REPRODUCE_HPP
#define NONREP_REPRODUCE_HPP

// Named claims re-checked end to end, each as a table of pass/fail rows.

#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "construct.hpp"
#include "decide.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "saseq.hpp"
#include "search.hpp"

namespace nonrep {

struct ClaimRow {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct ClaimReport {
  std::string claim;
  std::vector<ClaimRow> rows;
  bool aborted = false; // time or node budget ran out; rows are partial
  double seconds = 0;

  bool passed() const {
    if (aborted) return false;
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
};

struct ReproduceOptions {
  std::uint64_t node_budget = default_node_budget;
  std::optional<double> time_budget_seconds; // per claim; unset means the claim's default
  bool stretch = true;                       // include the optional larger instances
};

inline constexpr std::array<std::string_view, 9> claim_names{"table1", "currie", "thm1",   "thm2",     "thm3",
                                                             "lemma4", "lemma5", "fig1", "hierarchy"};

inline double default_time_budget(std::string_view claim) {
  if (claim == "table1") return 125;
  if (claim == "currie") return 120;
  if (claim == "thm1") return 600;
  if (claim == "thm2") return 62;
  if (claim == "thm3") return 300;
  if (claim == "hierarchy") return 420;
  if (claim == "lemma4" || claim == "lemma5" || claim == "fig1") return 1;
  throw std::invalid_argument("unknown claim '" + std::string(claim) + "'");
}

namespace detail {

using Clock = std::chrono::steady_clock;

// Runs rows in order until the deadline passes or a budget is exhausted.
class ClaimRunner {
public:
  ClaimRunner(std::string_view claim, const ReproduceOptions& opts)
      : opts_(opts), started_(Clock::now()),
        deadline_(started_ + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(
                                  opts.time_budget_seconds.value_or(default_time_budget(claim))))) {
    report_.claim = std::string(claim);
    search_.node_budget = opts.node_budget;
  }

  const SolveOptions& search() const { return search_; }
  bool stretch() const { return opts_.stretch; }

  void row(std::string name, const std::function<std::pair<bool, std::string>()>& body) {
    if (report_.aborted) return;
    if (Clock::now() > deadline_) {
      report_.aborted = true;
      return;
    }
    const auto t0 = Clock::now();
    try {
      auto [pass, detail] = body();
      report_.rows.push_back({std::move(name), pass, std::move(detail), seconds_since(t0)});
    } catch (const budget_exceeded& e) {
      report_.rows.push_back({std::move(name), false, e.what(), seconds_since(t0)});
      report_.aborted = true;
    }
  }

  ClaimReport finish() {
    report_.seconds = seconds_since(started_);
    return std::move(report_);
  }

private:
  static double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

  ReproduceOptions opts_;
  SolveOptions search_;
  Clock::time_point started_;
  Clock::time_point deadline_;
  ClaimReport report_;
};

inline std::string cycle_name(std::size_t n) { return "C" + std::to_string(n); }
inline std::string path_name(std::size_t n) { return "P" + std::to_string(n); }

inline std::pair<bool, std::string> expect_value(const Graph& g, const SolveReport& r, int expected) {
  if (r.aborted) throw budget_exceeded(r.graph + ": node budget exhausted");
  std::string got = r.value ? std::to_string(*r.value) : "none";
  bool ok = r.value == expected && r.certificate && verify_certificate(g, *r.certificate, r.property);
  return {ok, "value " + got + " (expected " + std::to_string(expected) + "), " + std::to_string(r.nodes_visited) + " nodes"};
}

inline std::pair<bool, std::string> expect_exhausted(const SearchOutcome& out) {
  if (out.aborted) throw budget_exceeded("node budget exhausted");
  if (out.coloring) return {false, "found " + out.coloring->to_digits()};
  return {true, "exhausted after " + std::to_string(out.nodes) + " nodes"};
}

} // namespace detail

inline ClaimReport reproduce_table1(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("table1", opts);
  for (const auto& row : table1_rows)
    run.row(detail::cycle_name(row.n) + " row verifies", [&] {
      Coloring c = Coloring::from_digits(row.colors);
      bool ok = c.used_colors() == row.sigma && !exists_repetitive_nonboring_walk(cycle_graph(row.n), c, true);
      return std::pair{ok, std::string(row.colors) + " with " + std::to_string(row.sigma) + " colors"};
    });
  const std::size_t last = run.stretch() ? 21 : 12;
  for (std::size_t n = 4; n <= last; ++n)
    run.row(detail::cycle_name(n) + " has no walk-nonrepetitive 3-coloring",
            [&] { return detail::expect_exhausted(find_coloring(cycle_graph(n), Property::walk, 3, run.search())); });
  for (std::size_t n : {5, 7})
    run.row(detail::cycle_name(n) + " has no walk-nonrepetitive 4-coloring",
            [&] { return detail::expect_exhausted(find_coloring(cycle_graph(n), Property::walk, 4, run.search())); });
  return run.finish();
}

inline ClaimReport reproduce_currie(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("currie", opts);
  const std::size_t last = run.stretch() ? 17 : 12;
  for (std::size_t n = 3; n <= last; ++n) {
    const bool four = n == 5 || n == 7 || n == 9 || n == 10 || n == 14 || n == 17;
    run.row(detail::cycle_name(n) + " path value", [&] {
      const Graph g = cycle_graph(n);
      return detail::expect_value(g, solve(g, Property::path, 4, run.search()), four ? 4 : 3);
    });
  }
  return run.finish();
}

inline ClaimReport reproduce_thm1(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("thm1", opts);
  run.row("C9 from subdivided C6", [&] {
    ConstructionTrace t = nine_cycle_subdivision();
    bool ok = !exists_repetitive_nonboring_walk(cycle_graph(9), t.coloring, true);
    return std::pair{ok, t.coloring.to_digits()};
  });
  for (std::size_t n = 22; n <= 40; ++n)
    run.row(detail::cycle_name(n) + " subdivision construction", [&] {
      ConstructionTrace t = sigma_cycle_coloring(n, run.search());
      bool ok = t.n == n && t.m == 3 * t.k - n && t.m <= 2 && covers_symmetrical_vertices(t) &&
                t.coloring.used_colors() == 4 && !exists_repetitive_nonboring_walk(cycle_graph(n), t.coloring, true);
      std::ostringstream d;
      d << "k=" << t.k << " m=" << t.m << " " << t.coloring.to_digits();
      return std::pair{ok, d.str()};
    });
  return run.finish();
}

inline ClaimReport reproduce_thm2(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("thm2", opts);
  run.row("P21 word is stroll-nonrepetitive", [&] {
    bool ok = !exists_repetitive_stroll(path_graph(21), Coloring::from_digits(p21_stroll_word), true);
    return std::pair{ok, std::string(p21_stroll_word)};
  });
  run.row("P22 has no stroll-nonrepetitive 3-coloring (search)",
          [&] { return detail::expect_exhausted(find_coloring(path_graph(22), Property::stroll, 3, run.search())); });
  run.row("P22 has no stroll-nonrepetitive 3-coloring (SA words)", [&] {
    HFreeEnumeration e = enumerate_h_free(20);
    return std::pair{e.count_by_length[20] == 0,
                     "longest H-free word has length " + std::to_string(e.max_length) + ", P22 would need 20"};
  });
  for (std::size_t n : {4, 10, 21, 22})
    run.row(detail::path_name(n) + " stroll value", [&] {
      const Graph g = path_graph(n);
      return detail::expect_value(g, solve(g, Property::stroll, 4, run.search()), n <= 21 ? 3 : 4);
    });
  return run.finish();
}

inline ClaimReport reproduce_thm3(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("thm3", opts);
  for (std::size_t n = 3; n <= 12; ++n) {
    const bool three = n == 3 || n == 4 || n == 6 || n == 8;
    run.row(detail::cycle_name(n) + " stroll value", [&] {
      const Graph g = cycle_graph(n);
      return detail::expect_value(g, solve(g, Property::stroll, 4, run.search()), three ? 3 : 4);
    });
  }
  for (std::string_view s : {std::string_view("212313"), std::string_view("12132123")})
    run.row(detail::cycle_name(s.size()) + " coloring " + std::string(s), [&] {
      bool ok = !exists_repetitive_stroll(cycle_graph(s.size()), Coloring::from_digits(s), true);
      return std::pair{ok, std::string(ok ? "stroll-nonrepetitive" : "has a repetitive stroll")};
    });
  return run.finish();
}

inline ClaimReport reproduce_lemma4(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("lemma4", opts);
  const std::array<std::pair<std::string_view, std::string_view>, 5> expected{{
      {"SS", "1212"},
      {"AAAA", "123123"},
      {"ASASA", "12321232"},
      {"AASAASAA", "212313212313"},
      {"AAASAAASAAA", "3212312132123121"},
  }};
  for (const auto& [h, seq] : expected)
    run.row(std::string(h) + " forces a repetitive stroll", [&] {
      HWitness w = h_witness_stroll(h);
      WalkClass cls = classify_walk(path_graph(w.path_length), w.coloring, w.stroll);
      const std::string got = sequence_string(w.sequence);
      bool ok = cls.stroll && cls.repetitive.value_or(false) && got == seq;
      return std::pair{ok, "coloring " + w.coloring.to_digits() + ", stroll colors " + got};
    });
  return run.finish();
}

inline ClaimReport reproduce_lemma5(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("lemma5", opts);
  run.row("longest H-free word", [&] {
    HFreeEnumeration e = enumerate_h_free(64);
    std::string words;
    bool has_known = false;
    for (const auto& w : e.maximal_words) {
      words += (words.empty() ? "" : ", ") + w.str();
      has_known |= w.str() == longest_h_free_word;
    }
    bool ok = e.max_length == 19 && !e.capped && has_known;
    return std::pair{ok, "max length " + std::to_string(e.max_length) + ": " + words};
  });
  return run.finish();
}

inline ClaimReport reproduce_fig1(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("fig1", opts);
  auto [g, c] = figure1_fixture();
  run.row("distance-2", [&] {
    auto clash = is_distance2(g, c);
    return std::pair{!clash, std::string(clash ? "clash" : "no two vertices within distance 2 share a color")};
  });
  run.row("path-nonrepetitive", [&] {
    auto w = exists_repetitive_path(g, c);
    return std::pair{!w, std::string(w ? "repetitive path found" : "no repetitive path")};
  });
  run.row("not walk-nonrepetitive", [&] {
    auto w = exists_repetitive_nonboring_walk(g, c);
    if (!w) return std::pair{false, std::string("no witness")};
    std::ostringstream d;
    d << "walk";
    for (Vertex v : w->walk.vertices) d << ' ' << static_cast<char>('a' + v);
    d << " colored " << sequence_string(colors_of(c, w->walk));
    return std::pair{witness_is_sound(g, c, *w), d.str()};
  });
  return run.finish();
}

/// Oracle agreement, the cycle characterization (walk-nonrepetitive iff
/// distance-2 and path-nonrepetitive) and walk => stroll => path, over every
/// coloring these checks enumerate.
inline ClaimReport reproduce_hierarchy(const ReproduceOptions& opts = {}) {
  detail::ClaimRunner run("hierarchy", opts);
  std::size_t checked = 0, violations = 0;
  auto hierarchy = [&](const Graph& g, const Coloring& c) {
    const bool walk = is_nonrepetitive(g, c, Property::walk);
    const bool stroll = is_nonrepetitive(g, c, Property::stroll);
    const bool path = is_nonrepetitive(g, c, Property::path);
    ++checked;
    violations += (walk && !stroll) || (stroll && !path);
  };
  auto colorings = [](std::size_t n, int k, bool canonical, const std::function<void(const Coloring&)>& fn) {
    std::vector<Color> colors(n, 1);
    auto rec = [&](auto&& self, std::size_t i, int max_used) -> void {
      if (i == n) return fn(Coloring(colors, k));
      const int limit = canonical ? std::min(k, max_used + 1) : k;
      for (int col = 1; col <= limit; ++col) {
        colors[i] = col;
        self(self, i + 1, std::max(max_used, col));
      }
    };
    rec(rec, 0, 0);
  };
  const std::array<Graph, 3> oracle_graphs{path_graph(5), cycle_graph(5), cycle_graph(7)};
  for (const Graph& g : oracle_graphs)
    run.row(g.describe() + " deciders match the oracle (T=10)", [&] {
      std::size_t total = 0, mismatches = 0;
      colorings(g.size(), 3, false, [&](const Coloring& c) {
        for (Property p : {Property::stroll, Property::walk}) {
          OracleVerdict v = brute_force_check(g, c, p, 10);
          if (v.aborted) throw budget_exceeded("oracle walk limit reached");
          ++total;
          mismatches += v.witness.has_value() != find_witness(g, c, p, true).has_value();
        }
        hierarchy(g, c);
      });
      return std::pair{mismatches == 0, std::to_string(total) + " verdicts, " + std::to_string(mismatches) + " mismatches"};
    });
  for (std::size_t n = 4; n <= 8; ++n)
    run.row(detail::cycle_name(n) + " walk iff distance-2 and path", [&] {
      std::size_t total = 0, mismatches = 0;
      const Graph g = cycle_graph(n);
      for (int k : {3, 4})
        colorings(n, k, true, [&](const Coloring& c) {
          ++total;
          const bool walk = !exists_repetitive_nonboring_walk(g, c, true);
          const bool rhs = !is_distance2(g, c) && !exists_repetitive_path(g, c);
          mismatches += walk != rhs;
          hierarchy(g, c);
        });
      return std::pair{mismatches == 0, std::to_string(total) + " colorings, " + std::to_string(mismatches) + " mismatches"};
    });
  run.row("walk => stroll => path on all colorings above", [&] {
    return std::pair{violations == 0,
                     std::to_string(checked) + " colorings, " + std::to_string(violations) + " violations"};
  });
  return run.finish();
}

inline ClaimReport reproduce(std::string_view claim, const ReproduceOptions& opts = {}) {
  if (claim == "table1") return reproduce_table1(opts);
  if (claim == "currie") return reproduce_currie(opts);
  if (claim == "thm1") return reproduce_thm1(opts);
  if (claim == "thm2") return reproduce_thm2(opts);
  if (claim == "thm3") return reproduce_thm3(opts);
  if (claim == "lemma4") return reproduce_lemma4(opts);
  if (claim == "lemma5") return reproduce_lemma5(opts);
  if (claim == "fig1") return reproduce_fig1(opts);
  if (claim == "hierarchy") return reproduce_hierarchy(opts);
  throw std::invalid_argument("unknown claim '" + std::string(claim) + "'");
}

} // namespace nonrep

#endif // NONREP_REPRODUCE_HPP
