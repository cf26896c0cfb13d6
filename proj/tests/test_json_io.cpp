// JSON interchange: round trips, schema fields and malformed input.

#include <gtest/gtest.h>

#include "nonrep/json_io.hpp"

using namespace nonrep;

TEST(GraphJson, RoundTrip) {
  for (const Graph& g : {path_graph(5), cycle_graph(7), figure1_fixture().first}) {
    json j = graph_to_json(g);
    EXPECT_EQ(j.at("n"), g.size());
    EXPECT_EQ(graph_from_json(json::parse(j.dump())), g);
  }
}

TEST(GraphJson, Malformed) {
  EXPECT_THROW(graph_from_json(json::parse(R"({"edges": []})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": -1, "edges": []})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[0]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, -1]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 3]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(json::parse("[1, 2]")), std::invalid_argument);
}

TEST(ColoringJson, DigitsBelowTenColors) {
  Coloring c = Coloring::from_digits("12341243");
  EXPECT_EQ(coloring_to_json(c), json("12341243"));
  EXPECT_EQ(coloring_from_json(coloring_to_json(c)), c);
}

TEST(ColoringJson, ArrayForManyColors) {
  Coloring c({1, 10, 2, 11}, 11);
  json j = coloring_to_json(c);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j, json::parse("[1, 10, 2, 11]"));
  EXPECT_EQ(coloring_from_json(j).colors()[1], 10);
}

TEST(ColoringJson, Malformed) {
  EXPECT_THROW(coloring_from_json(json::parse("[]")), std::invalid_argument);
  EXPECT_THROW(coloring_from_json(json::parse(R"([1, "a"])")), std::invalid_argument);
  EXPECT_THROW(coloring_from_json(json::parse("12")), std::invalid_argument);
  EXPECT_THROW(coloring_from_json(json("12a")), std::invalid_argument);
}

TEST(GraphSpec, Parses) {
  EXPECT_EQ(graph_from_spec("path:21"), path_graph(21));
  EXPECT_EQ(graph_from_spec("cycle:8"), cycle_graph(8));
}

TEST(GraphSpec, Errors) {
  for (const char* bad : {"path", "path:", "path:x", "path:3x", "tree:4", "cycle:2", "path:0", ":4"})
    EXPECT_THROW(graph_from_spec(bad), std::invalid_argument) << bad;
}

TEST(SolveReportJson, Fields) {
  SolveReport r = solve(cycle_graph(8), Property::stroll, 4);
  json j = solve_report_to_json(r);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("property"), "stroll");
  EXPECT_EQ(j.at("graph"), "cycle:8");
  EXPECT_EQ(j.at("value"), 3);
  EXPECT_EQ(j.at("exhaustedK"), json::parse("[1, 2]"));
  EXPECT_FALSE(j.at("aborted").get<bool>());
  EXPECT_TRUE(j.at("wallTimeMs").is_number());
  EXPECT_TRUE(verify_certificate(cycle_graph(8), coloring_from_json(j.at("certificate")), Property::stroll));
}

TEST(SolveReportJson, NullsWhenAborted) {
  SolveOptions opts;
  opts.node_budget = 2;
  json j = solve_report_to_json(solve(path_graph(10), Property::stroll, 3, opts));
  EXPECT_TRUE(j.at("aborted").get<bool>());
  EXPECT_TRUE(j.at("value").is_null());
  EXPECT_TRUE(j.at("certificate").is_null());
}

TEST(WitnessJson, Fields) {
  Graph g = path_graph(7);
  Coloring c = Coloring::from_digits("1232123");
  auto w = find_witness(g, c, Property::stroll);
  ASSERT_TRUE(w.has_value());
  json j = witness_to_json(*w, c);
  EXPECT_EQ(j.at("property"), "stroll");
  EXPECT_EQ(j.at("walk").size(), w->walk.length());
  EXPECT_TRUE(j.at("class").at("stroll").get<bool>());
  EXPECT_TRUE(j.at("class").at("repetitive").get<bool>());
  EXPECT_EQ(j.at("colors").get<std::string>().size(), w->walk.length());
}

TEST(WalkClassJson, OddWalkHasNullRepetitive) {
  WalkClass cls = classify_walk(path_graph(3), Coloring::from_digits("121"), Walk{{0, 1, 2}});
  EXPECT_TRUE(walk_class_to_json(cls).at("repetitive").is_null());
}

TEST(TraceJson, Fields) {
  ConstructionTrace t = sigma_cycle_coloring(22);
  json j = trace_to_json(t);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("n"), 22);
  EXPECT_EQ(j.at("k"), 8);
  EXPECT_EQ(j.at("m"), 2);
  EXPECT_EQ(j.at("baseLength"), 16);
  EXPECT_EQ(j.at("matching").size(), 8u);
  EXPECT_EQ(j.at("removed").size(), 2u);
  EXPECT_EQ(coloring_from_json(j.at("coloring")), t.coloring);
}

TEST(EnumerationJson, Fields) {
  json j = enumeration_to_json(enumerate_h_free(30));
  EXPECT_EQ(j.at("maxLength"), 19);
  EXPECT_EQ(j.at("countByLength").size(), 30u);
  EXPECT_EQ(j.at("countByLength")[0], 2);
  EXPECT_EQ(j.at("maximalWords"), json::parse(R"(["SASAASAAASAAASAASAS"])"));
  EXPECT_FALSE(j.at("capped").get<bool>());
}

TEST(OracleJson, Fields) {
  json j = oracle_verdict_to_json(brute_force_check(path_graph(2), Coloring({1, 1}, 1), Property::walk, 3));
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("bound"), 3);
  EXPECT_EQ(j.at("witness"), json::parse("[0, 1]"));
}
