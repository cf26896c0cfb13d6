// End-to-end runs of the nonrep executable: exit codes, text output and JSON goldens.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" NONREP_CLI_PATH "' " + args + " 2>&1";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Timing fields vary from run to run.
json strip_volatile(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (const auto& [k, v] : j.items())
      if (k != "wallTimeMs" && k != "seconds") out[k] = strip_volatile(v);
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& v : j) out.push_back(strip_volatile(v));
    return out;
  }
  return j;
}

json golden(const std::string& name) {
  std::ifstream in(std::string(NONREP_GOLDEN_DIR) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  return json::parse(in);
}

void expect_golden(const std::string& args, int code, const std::string& file) {
  CliResult r = run("--json " + args);
  EXPECT_EQ(r.code, code) << args << "\n" << r.out;
  json got = json::parse(r.out, nullptr, false);
  ASSERT_FALSE(got.is_discarded()) << args << "\n" << r.out;
  EXPECT_EQ(strip_volatile(got), golden(file)) << args;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

} // namespace

TEST(CliVerify, WalkHolds) {
  CliResult r = run("verify cycle:8 --colors 12341243 --property walk");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(CliVerify, StrollFailsWithWitness) {
  CliResult r = run("verify path:7 --colors 1232123 --property stroll");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("12321232"), std::string::npos);
}

TEST(CliVerify, LengthMismatchIsUsageError) {
  CliResult r = run("verify path:4 --colors 12345 --property path");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("5 entries"), std::string::npos);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run("verify path:4 --colors 1213").code, 2);
  EXPECT_EQ(run("verify path:4 --colors 1213 --property tree").code, 2);
  EXPECT_EQ(run("verify --colors 1213 --property path").code, 2);
  EXPECT_EQ(run("verify tree:4 --colors 1213 --property path").code, 2);
  EXPECT_EQ(run("verify path:4 --colors 12a3 --property path").code, 2);
  EXPECT_EQ(run("verify path:4 --property path").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliVerify, DistanceTwo) {
  EXPECT_EQ(run("verify cycle:4 --colors 1234 --property dist2").code, 0);
  EXPECT_EQ(run("verify path:3 --colors 121 --property dist2").code, 1);
}

TEST(CliVerify, OracleMode) {
  EXPECT_EQ(run("verify cycle:6 --colors 212313 --property stroll --oracle-bound 6").code, 0);
  EXPECT_EQ(run("verify path:7 --colors 1232123 --property stroll --oracle-bound 4").code, 1);
  EXPECT_EQ(run("verify path:7 --colors 1232123 --property dist2 --oracle-bound 4").code, 2);
}

TEST(CliVerify, GraphAndColorFiles) {
  const std::string graph = temp_file("fig1.json", R"({"n": 10, "edges": [[0,1],[0,2],[1,2],[1,3],[3,4],[4,5],[5,6],[6,7],[7,8],[8,9]]})");
  const std::string digits = temp_file("fig1.txt", "1234123124\n");
  const std::string array = temp_file("fig1-array.json", "[1,2,3,4,1,2,3,1,2,4]");
  EXPECT_EQ(run("verify --graph '" + graph + "' --colors-file '" + digits + "' --property path").code, 0);
  EXPECT_EQ(run("verify --graph '" + graph + "' --colors-file '" + array + "' --property walk").code, 1);
  EXPECT_EQ(run("verify --graph '" + graph + "' --colors 1234123124 --property dist2").code, 0);
  const std::string broken = temp_file("broken.json", "{\"n\": 3,");
  EXPECT_EQ(run("verify --graph '" + broken + "' --colors 123 --property path").code, 2);
  EXPECT_EQ(run("verify --graph /nonexistent/x.json --colors 123 --property path").code, 2);
  EXPECT_EQ(run("verify path:3 --graph '" + graph + "' --colors 123 --property path").code, 2);
}

TEST(CliSolve, SixCycleStroll) {
  CliResult r = run("solve cycle:6 --property stroll --max-colors 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value 3"), std::string::npos);
}

TEST(CliSolve, ExhaustedIsFailure) { EXPECT_EQ(run("solve cycle:5 --property walk --max-colors 4").code, 1); }

TEST(CliSolve, BudgetFromEnvironmentAndFlag) {
  EXPECT_EQ(run("solve path:22 --property stroll --max-colors 4", "NONREP_BUDGET=10").code, 3);
  EXPECT_EQ(run("--budget 10 solve path:22 --property stroll --max-colors 4").code, 3);
  EXPECT_EQ(run("solve path:22 --property stroll", "NONREP_BUDGET=lots").code, 2);
  CliResult r = run("--json solve path:22 --property stroll", "NONREP_BUDGET=10");
  EXPECT_EQ(r.code, 3);
  json j = json::parse(r.out);
  EXPECT_TRUE(j.at("aborted").get<bool>());
  EXPECT_TRUE(j.at("value").is_null());
}

TEST(CliSa, Commands) {
  CliResult r = run("sa longest");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "19\nSASAASAAASAAASAASAS\n");
  r = run("sa encode path:21 --colors 121312321323123213121");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "SASAASAAASAAASAASAS\n");
  r = run("sa decode AAAAA");
  EXPECT_EQ(r.out, "1231231\n");
  EXPECT_EQ(run("sa decode AAAA --kind cycle").code, 1);
  EXPECT_EQ(run("sa decode AXA").code, 2);
  EXPECT_EQ(run("sa check SASAASAAASAAASAASAS").code, 0);
  EXPECT_EQ(run("sa check SAS --cyclic").code, 1);
  EXPECT_EQ(run("sa witness SAS").code, 2);
  EXPECT_EQ(run("sa encode path:4 --colors 1234").code, 2);
  EXPECT_EQ(run("sa").code, 2);
}

TEST(CliConstruct, Commands) {
  EXPECT_EQ(run("construct table1").code, 0);
  EXPECT_EQ(run("construct table1 --n 30").code, 2);
  EXPECT_EQ(run("construct sigma-cycle --n 12").code, 2);
  EXPECT_EQ(run("construct sigma-cycle --n 31").code, 0);
  EXPECT_EQ(run("construct sigma-cycle --n 31", "NONREP_BUDGET=3").code, 3);
  EXPECT_EQ(run("construct nine-cycle --trace").code, 0);
  CliResult r = run("construct rho-path --n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value 2"), std::string::npos);
  EXPECT_EQ(run("construct rho-cycle --n 25").code, 0);
  EXPECT_EQ(run("construct rho-cycle --n 2").code, 2);
  EXPECT_EQ(run("construct fig1").code, 0);
}

TEST(CliReproduce, Claims) {
  CliResult r = run("reproduce lemma5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  EXPECT_NE(r.out.find("19"), std::string::npos);
  r = run("reproduce table1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("C21 row verifies"), std::string::npos);
  EXPECT_NE(r.out.find("C12 has no walk-nonrepetitive 3-coloring"), std::string::npos);
  EXPECT_EQ(run("reproduce fig1").code, 0);
  EXPECT_EQ(run("reproduce all").code, 0);
  EXPECT_EQ(run("reproduce thm1 --time-budget 0").code, 3);
  EXPECT_EQ(run("reproduce currie", "NONREP_BUDGET=2").code, 3);
  EXPECT_EQ(run("reproduce thm7").code, 2);
}

TEST(CliGolden, JsonOutputs) {
  expect_golden("verify cycle:8 --colors 12341243 --property walk", 0, "verify_c8_walk.json");
  expect_golden("verify path:7 --colors 1232123 --property stroll", 1, "verify_p7_stroll.json");
  expect_golden("decide cycle:9 --colors 123132123", 1, "decide_c9.json");
  expect_golden("solve cycle:6 --property stroll --max-colors 4", 0, "solve_c6_stroll.json");
  expect_golden("sa longest", 0, "sa_longest.json");
  expect_golden("sa enumerate --max-len 20", 0, "sa_enumerate_20.json");
  expect_golden("sa witness AAASAAASAAA", 0, "sa_witness_aaasaaasaaa.json");
  expect_golden("construct sigma-cycle --n 24 --trace", 0, "construct_sigma_24.json");
  expect_golden("construct fig1", 0, "construct_fig1.json");
  expect_golden("reproduce lemma5", 0, "reproduce_lemma5.json");
}

// Every JSON document carries the schema version.
TEST(CliGolden, SchemaField) {
  for (const char* args : {"verify path:4 --colors 1213 --property path", "decide path:4 --colors 1213",
                           "solve path:4 --property walk", "sa decode SAS", "sa check SS", "sa enumerate --max-len 3",
                           "construct table1 --n 5", "construct rho-path --n 22", "construct nine-cycle",
                           "reproduce fig1"}) {
    CliResult r = run(std::string("--json ") + args);
    json j = json::parse(r.out, nullptr, false);
    ASSERT_FALSE(j.is_discarded()) << args << "\n" << r.out;
    EXPECT_EQ(j.value("schema", 0), 1) << args;
  }
}
