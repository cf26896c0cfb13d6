// Graphs, colorings, walks and the walk classifiers.

#include <random>

#include <gtest/gtest.h>

#include "nonrep/construct.hpp"
#include "nonrep/graph.hpp"

using namespace nonrep;

namespace {

Walk walk(std::initializer_list<Vertex> vs) { return Walk{std::vector<Vertex>(vs)}; }

// All simple paths of a graph, each direction, any order >= 1.
std::vector<Walk> all_simple_paths(const Graph& g) {
  std::vector<Walk> out;
  std::vector<Vertex> cur;
  std::vector<char> used(g.size(), 0);
  auto rec = [&](auto&& self, Vertex v) -> void {
    cur.push_back(v);
    used[v] = 1;
    out.push_back(Walk{cur});
    for (Vertex u : g.neighbors(v))
      if (!used[u]) self(self, u);
    used[v] = 0;
    cur.pop_back();
  };
  for (Vertex s = 0; s < g.size(); ++s) rec(rec, s);
  return out;
}

} // namespace

TEST(PathGraph, SmallestPath) {
  Graph g = path_graph(1);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.topology(), Topology::path);
}

TEST(PathGraph, FourVertices) {
  Graph g = path_graph(4);
  std::vector<Edge> expected{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_EQ(std::vector<Edge>(g.edges().begin(), g.edges().end()), expected);
}

TEST(PathGraph, TwentyOneVertices) {
  Graph g = path_graph(21);
  EXPECT_EQ(g.edge_count(), 20u);
  EXPECT_EQ(g.max_degree(), 2u);
}

TEST(PathGraph, ZeroIsInvalid) { EXPECT_THROW(path_graph(0), std::invalid_argument); }

TEST(CycleGraph, Triangle) {
  Graph g = cycle_graph(3);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.topology(), Topology::cycle);
  EXPECT_TRUE(g.is_cycle());
}

TEST(CycleGraph, FourCycleIsTwoRegular) {
  Graph g = cycle_graph(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(CycleGraph, TwoWouldNeedMultiEdge) {
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(cycle_graph(0), std::invalid_argument);
}

TEST(Graph, RejectsLoopsMultiEdgesAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, RelabeledCycleIsGeneralButStillACycle) {
  Graph g(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(g.topology(), Topology::general);
  EXPECT_TRUE(g.is_cycle());
  EXPECT_FALSE(path_graph(4).is_cycle());
}

TEST(Graph, InducedRelabels) {
  Graph g = cycle_graph(5);
  std::vector<Vertex> keep{4, 0, 1};
  Graph sub = g.induced(keep);
  EXPECT_EQ(sub.topology(), Topology::path);
  EXPECT_TRUE(sub.adjacent(0, 1));
  EXPECT_TRUE(sub.adjacent(1, 2));
  EXPECT_FALSE(sub.adjacent(0, 2));
}

TEST(Coloring, DigitsAndValidation) {
  Coloring c = Coloring::from_digits("121312321323123213121");
  EXPECT_EQ(c.size(), 21u);
  EXPECT_EQ(c.k(), 3);
  EXPECT_EQ(c.to_digits(), "121312321323123213121");
  EXPECT_THROW(Coloring::from_digits("1203"), std::invalid_argument);
  EXPECT_THROW(Coloring({1, 2, 5}, 4), std::invalid_argument);
  EXPECT_THROW(Coloring({0, 1}, 2), std::invalid_argument);
}

TEST(Coloring, UnusedTrailingColorsReported) {
  Coloring c({1, 2, 1}, 4);
  EXPECT_EQ(c.used_colors(), 2);
  EXPECT_EQ(c.unused_colors(), (std::vector<Color>{3, 4}));
}

TEST(IsRepetitive, Basics) {
  EXPECT_TRUE(is_repetitive(std::vector<Color>{1, 2, 1, 2}));
  EXPECT_FALSE(is_repetitive(std::vector<Color>{1, 2, 3, 1}));
  EXPECT_TRUE(is_repetitive(Coloring::from_digits("212313212313").colors()));
}

TEST(IsRepetitive, OddOrEmptyIsInvalid) {
  EXPECT_THROW(is_repetitive(std::vector<Color>{1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(is_repetitive(std::vector<Color>{}), std::invalid_argument);
}

TEST(IsRepetitive, SelfConcatenationFuzz) {
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<int> len(1, 30), col(1, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Color> s(static_cast<std::size_t>(len(rng)));
    for (auto& x : s) x = col(rng);
    std::vector<Color> ss = s;
    ss.insert(ss.end(), s.begin(), s.end());
    ASSERT_TRUE(is_repetitive(ss));
  }
}

TEST(ClassifyWalk, Table1NineCycleFullTurn) {
  Graph g = cycle_graph(9);
  Coloring c = table1_coloring(9).second;
  WalkClass cls = classify_walk(g, c, walk({0, 1, 2, 3, 4, 5, 6, 7, 8, 0}));
  EXPECT_TRUE(cls.even_length);
  EXPECT_TRUE(cls.stroll);
  EXPECT_FALSE(cls.boring);
  EXPECT_FALSE(cls.simple_path);
  ASSERT_TRUE(cls.repetitive.has_value());
  EXPECT_FALSE(*cls.repetitive);
}

TEST(ClassifyWalk, BackAndForthIsBoring) {
  Graph g = path_graph(2);
  Coloring c({1, 2});
  WalkClass cls = classify_walk(g, c, walk({0, 1, 0, 1}));
  EXPECT_TRUE(cls.boring);
  EXPECT_TRUE(cls.repetitive.value());
  EXPECT_FALSE(cls.stroll);
}

TEST(ClassifyWalk, RepetitiveStrollOnP7) {
  Graph g = path_graph(7);
  Coloring c = Coloring::from_digits("1232123");
  Walk w = walk({0, 1, 2, 3, 4, 5, 6, 5});
  WalkClass cls = classify_walk(g, c, w);
  EXPECT_TRUE(cls.stroll);
  EXPECT_TRUE(cls.repetitive.value());
  EXPECT_EQ(sequence_string(colors_of(c, w)), "12321232");
}

TEST(ClassifyWalk, OddWalkHasNoRepetitiveness) {
  WalkClass cls = classify_walk(path_graph(3), Coloring({1, 2, 1}), walk({0, 1, 2}));
  EXPECT_FALSE(cls.even_length);
  EXPECT_FALSE(cls.repetitive.has_value());
  EXPECT_TRUE(cls.simple_path);
}

TEST(ClassifyWalk, NonAdjacentStepIsInvalidWalk) {
  EXPECT_THROW(classify_walk(path_graph(4), Coloring({1, 2, 1, 2}), walk({0, 2})), invalid_walk);
  EXPECT_THROW(classify_walk(path_graph(4), Coloring({1, 2, 1, 2}), walk({})), invalid_walk);
}

TEST(IsDistance2, FourCycleAllDistinct) {
  EXPECT_FALSE(is_distance2(cycle_graph(4), Coloring::from_digits("1234")).has_value());
}

TEST(IsDistance2, CommonNeighborClash) {
  auto clash = is_distance2(path_graph(3), Coloring::from_digits("121"));
  ASSERT_TRUE(clash.has_value());
  EXPECT_EQ(*clash, (Edge{0, 2}));
}

TEST(IsDistance2, FigureOneFixture) {
  auto [g, c] = figure1_fixture();
  EXPECT_FALSE(is_distance2(g, c).has_value());
}

// Boring => repetitive, and boring and stroll never both hold, on random walks.
TEST(WalkClassProperties, RandomWalksOnSmallGraphs) {
  std::mt19937 rng(7);
  std::vector<Graph> graphs{path_graph(5), cycle_graph(6), figure1_fixture().first};
  for (const Graph& g : graphs)
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Color> colors(g.size());
      for (auto& x : colors) x = std::uniform_int_distribution<int>(1, 3)(rng);
      Coloring c(colors, 3);
      std::size_t half = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
      Walk w;
      w.vertices.push_back(static_cast<Vertex>(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng)));
      // first half random, second half sometimes a replay to hit boring walks
      bool replay = trial % 3 == 0;
      while (w.length() < 2 * half) {
        if (replay && w.length() >= half) {
          Vertex next = w.vertices[w.length() - half];
          if (!g.adjacent(w.vertices.back(), next)) break;
          w.vertices.push_back(next);
          continue;
        }
        auto nb = g.neighbors(w.vertices.back());
        w.vertices.push_back(nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)]);
      }
      if (w.length() % 2 != 0) continue;
      WalkClass cls = classify_walk(g, c, w);
      if (cls.boring) {
        ASSERT_TRUE(cls.repetitive.value());
      }
      ASSERT_FALSE(cls.boring && cls.stroll);
    }
}

TEST(WalkClassProperties, EvenSimplePathsOfCyclesAreStrolls) {
  for (std::size_t n = 3; n <= 10; ++n) {
    Graph g = cycle_graph(n);
    Coloring c(std::vector<Color>(n, 1), 1);
    for (const Walk& w : all_simple_paths(g)) {
      if (w.length() % 2 != 0) continue;
      WalkClass cls = classify_walk(g, c, w);
      ASSERT_TRUE(cls.simple_path);
      ASSERT_TRUE(cls.stroll) << "n=" << n;
    }
  }
}
