// nonrep: verify, search for and construct nonrepetitive colorings.
//
// Exit codes: 0 property holds / all claims pass, 1 property fails,
// 2 usage error, 3 node or time budget exhausted, 4 internal error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nonrep/json_io.hpp"
#include "nonrep/reproduce.hpp"

namespace {

using namespace nonrep;

enum ExitCode : int { exit_ok = 0, exit_fails = 1, exit_usage = 2, exit_budget = 3 };

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphArgs {
  std::string spec;
  std::string file;
};

struct ColorArgs {
  std::string digits;
  std::string file;
};

struct Globals {
  bool json = false;
  std::optional<std::uint64_t> budget;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("spec", args.spec, "path:N or cycle:N");
  cmd->add_option("--graph", args.file, "graph JSON file with \"n\" and \"edges\"");
}

void add_color_args(CLI::App* cmd, ColorArgs& args) {
  cmd->add_option("--colors", args.digits, "coloring as a digit string, e.g. 12132123");
  cmd->add_option("--colors-file", args.file, "file holding a digit string or a JSON coloring");
}

Graph load_graph(const GraphArgs& args) {
  if (args.spec.empty() == args.file.empty()) throw usage_error("give exactly one of a graph spec or --graph <file>");
  if (!args.spec.empty()) return graph_from_spec(args.spec);
  json j;
  try {
    j = json::parse(read_file(args.file));
  } catch (const json::parse_error& e) {
    throw usage_error("graph file: " + std::string(e.what()));
  }
  return graph_from_json(j);
}

Coloring load_coloring(const ColorArgs& args, const Graph& g) {
  if (args.digits.empty() == args.file.empty()) throw usage_error("give exactly one of --colors or --colors-file");
  Coloring c;
  if (!args.digits.empty()) {
    c = Coloring::from_digits(args.digits);
  } else {
    const std::string text = trim(read_file(args.file));
    if (!text.empty() && (text.front() == '[' || text.front() == '"')) {
      try {
        c = coloring_from_json(json::parse(text));
      } catch (const json::parse_error& e) {
        throw usage_error("colors file: " + std::string(e.what()));
      }
    } else {
      c = Coloring::from_digits(text);
    }
  }
  require_colors(g, c);
  return c;
}

std::uint64_t parse_budget(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0)
    throw usage_error(std::string(what) + " must be a positive integer, got '" + text + "'");
  return v;
}

std::uint64_t node_budget(const Globals& g) {
  if (g.budget) return *g.budget;
  if (const char* env = std::getenv("NONREP_BUDGET"); env && *env) return parse_budget(env, "NONREP_BUDGET");
  return default_node_budget;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string walk_string(const Walk& w) {
  std::string s;
  for (Vertex v : w.vertices) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string violation_name(Property p) {
  switch (p) {
  case Property::path: return "repetitive path";
  case Property::stroll: return "repetitive stroll";
  case Property::walk: return "repetitive nonboring walk";
  }
  return "witness";
}

// ---- verify / decide --------------------------------------------------------

struct PropertyResult {
  bool holds = true;
  json witness = nullptr;
  std::string text;
};

PropertyResult check_property(const Graph& g, const Coloring& c, const std::string& property,
                              std::optional<std::size_t> oracle_bound) {
  PropertyResult r;
  if (property == "dist2") {
    if (auto clash = is_distance2(g, c)) {
      r.holds = false;
      r.witness = {{"pair", {clash->first, clash->second}}, {"color", c[clash->first]}};
      r.text = "vertices " + std::to_string(clash->first) + " and " + std::to_string(clash->second) +
               " are within distance 2 and share color " + std::to_string(c[clash->first]);
    }
    return r;
  }
  const Property p = property_from_string(property);
  if (oracle_bound) {
    OracleVerdict v = brute_force_check(g, c, p, *oracle_bound);
    if (v.aborted) throw budget_exceeded("oracle walk limit reached");
    if (v.witness) {
      r.holds = false;
      Witness w{*v.witness, classify_walk(g, c, *v.witness), p};
      r.witness = witness_to_json(w, c);
      r.text = violation_name(p) + " " + walk_string(w.walk) + " colored " + sequence_string(colors_of(c, w.walk));
    }
    return r;
  }
  if (auto w = find_witness(g, c, p)) {
    r.holds = false;
    r.witness = witness_to_json(*w, c);
    r.text = violation_name(p) + " " + walk_string(w->walk) + " colored " + sequence_string(colors_of(c, w->walk));
  }
  return r;
}

std::string property_adjective(const std::string& property) {
  return property == "dist2" ? "a distance-2 coloring" : property + "-nonrepetitive";
}

int cmd_verify(const Globals& globals, const GraphArgs& ga, const ColorArgs& ca, const std::string& property,
               std::optional<std::size_t> oracle_bound) {
  const Graph g = load_graph(ga);
  const Coloring c = load_coloring(ca, g);
  if (oracle_bound && property == "dist2") throw usage_error("--oracle-bound applies to path, stroll and walk only");
  if (oracle_bound && *oracle_bound == 0) throw usage_error("--oracle-bound must be >= 1");
  PropertyResult r = check_property(g, c, property, oracle_bound);
  if (globals.json) {
    json j{{"schema", schema_version}, {"graph", g.describe()}, {"coloring", coloring_to_json(c)},
           {"property", property},     {"holds", r.holds},      {"witness", r.witness}};
    if (oracle_bound) j["oracleBound"] = *oracle_bound;
    print_json(j);
  } else if (r.holds) {
    std::cout << "holds: " << c.to_digits() << " is " << property_adjective(property) << " on " << g.describe();
    if (oracle_bound) std::cout << " (walks of half-length <= " << *oracle_bound << ")";
    std::cout << '\n';
  } else {
    std::cout << "fails: " << r.text << '\n';
  }
  return r.holds ? exit_ok : exit_fails;
}

int cmd_decide(const Globals& globals, const GraphArgs& ga, const ColorArgs& ca) {
  const Graph g = load_graph(ga);
  const Coloring c = load_coloring(ca, g);
  json results = json::object();
  bool all = true;
  for (const char* property : {"dist2", "path", "stroll", "walk"}) {
    PropertyResult r = check_property(g, c, property, std::nullopt);
    all &= r.holds;
    results[property] = {{"holds", r.holds}, {"witness", r.witness}};
    if (!globals.json)
      std::cout << std::left << std::setw(7) << property << (r.holds ? "holds" : "fails: " + r.text) << '\n';
  }
  if (globals.json)
    print_json({{"schema", schema_version}, {"graph", g.describe()}, {"coloring", coloring_to_json(c)}, {"results", results}});
  return all ? exit_ok : exit_fails;
}

// ---- solve ------------------------------------------------------------------

int cmd_solve(const Globals& globals, const GraphArgs& ga, const std::string& property, int max_colors, bool no_symmetry,
              bool no_pruning) {
  const Graph g = load_graph(ga);
  SolveOptions opts;
  opts.node_budget = node_budget(globals);
  opts.symmetry_breaking = !no_symmetry;
  opts.prefix_pruning = !no_pruning;
  if (max_colors < 1) throw usage_error("--max-colors must be >= 1");
  SolveReport r = solve(g, property_from_string(property), max_colors, opts);
  if (globals.json) {
    print_json(solve_report_to_json(r));
  } else {
    if (r.value)
      std::cout << "value " << *r.value << ", certificate " << coloring_to_json(*r.certificate).dump() << '\n';
    else if (r.aborted)
      std::cout << "aborted: node budget exhausted\n";
    else
      std::cout << "no " << property << "-nonrepetitive coloring with at most " << max_colors << " colors\n";
    std::cout << "exhausted k:";
    for (int k : r.exhausted_k) std::cout << ' ' << k;
    std::cout << "\nnodes " << r.nodes_visited << ", " << std::fixed << std::setprecision(3)
              << r.wall_time.count() * 1000.0 << " ms\n";
  }
  if (r.aborted) return exit_budget;
  return r.value ? exit_ok : exit_fails;
}

// ---- sa ---------------------------------------------------------------------

LineKind line_kind(const std::string& s) {
  if (s == "path") return LineKind::path;
  if (s == "cycle") return LineKind::cycle;
  throw usage_error("--kind must be path or cycle");
}

SAWord parse_word(const std::string& s) {
  try {
    return SAWord(s);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

int cmd_sa_encode(const Globals& globals, const GraphArgs& ga, const ColorArgs& ca) {
  const Graph g = load_graph(ga);
  const Coloring c = load_coloring(ca, g);
  SAWord w = encode_sa(g, c);
  if (globals.json)
    print_json({{"schema", schema_version}, {"graph", g.describe()}, {"coloring", coloring_to_json(c)}, {"word", w.str()}});
  else
    std::cout << w.str() << '\n';
  return exit_ok;
}

int cmd_sa_decode(const Globals& globals, const std::string& word, const std::string& kind) {
  const SAWord w = parse_word(word);
  try {
    Coloring c = decode_sa(w, line_kind(kind));
    if (globals.json)
      print_json({{"schema", schema_version}, {"word", w.str()}, {"kind", kind}, {"coloring", coloring_to_json(c)}});
    else
      std::cout << c.to_digits() << '\n';
    return exit_ok;
  } catch (const inconsistent_word& e) {
    if (globals.json)
      print_json({{"schema", schema_version}, {"word", w.str()}, {"kind", kind}, {"coloring", nullptr}, {"error", e.what()}});
    else
      std::cout << "fails: " << e.what() << '\n';
    return exit_fails;
  }
}

int cmd_sa_check(const Globals& globals, const std::string& word, bool cyclic) {
  const SAWord w = parse_word(word);
  auto m = is_h_free(w, cyclic);
  if (globals.json) {
    json match = m ? json{{"position", m->position}, {"word", std::string(m->word)}} : json(nullptr);
    print_json({{"schema", schema_version}, {"word", w.str()}, {"cyclic", cyclic}, {"hFree", !m}, {"match", match}});
  } else if (m) {
    std::cout << "fails: contains " << m->word << " at position " << m->position << '\n';
  } else {
    std::cout << "holds: " << (w.str().empty() ? "(empty)" : w.str()) << " is H-free" << (cyclic ? " as a cyclic word" : "")
              << '\n';
  }
  return m ? exit_fails : exit_ok;
}

int cmd_sa_enumerate(const Globals& globals, std::size_t max_len, bool list_words) {
  if (max_len < 1) throw usage_error("--max-len must be >= 1");
  HFreeEnumeration e = enumerate_h_free(max_len);
  if (globals.json) {
    json j = enumeration_to_json(e);
    if (list_words) {
      json words = json::array();
      for (const auto& w : e.words) words.push_back(w.str());
      j["words"] = std::move(words);
    }
    print_json(j);
    return exit_ok;
  }
  for (std::size_t len = 1; len < e.count_by_length.size(); ++len)
    std::cout << "length " << len << ": " << e.count_by_length[len] << '\n';
  std::cout << "max length " << e.max_length << (e.capped ? " (capped by --max-len)" : "") << '\n';
  if (list_words)
    for (const auto& w : e.words) std::cout << w.str() << '\n';
  return exit_ok;
}

int cmd_sa_longest(const Globals& globals) {
  HFreeEnumeration e = enumerate_h_free(64);
  if (globals.json) {
    json words = json::array();
    for (const auto& w : e.maximal_words) words.push_back(w.str());
    print_json({{"schema", schema_version}, {"maxLength", e.max_length}, {"maximalWords", words}});
  } else {
    std::cout << e.max_length << '\n';
    for (const auto& w : e.maximal_words) std::cout << w.str() << '\n';
  }
  return exit_ok;
}

int cmd_sa_witness(const Globals& globals, const std::string& word) {
  HWitness w = h_witness_stroll(word);
  const std::string seq = sequence_string(w.sequence);
  if (globals.json) {
    print_json({{"schema", schema_version},
                {"word", std::string(w.word)},
                {"pathLength", w.path_length},
                {"coloring", coloring_to_json(w.coloring)},
                {"stroll", w.stroll.vertices},
                {"colors", seq}});
  } else {
    std::cout << "P" << w.path_length << " colored " << w.coloring.to_digits() << '\n'
              << "stroll " << walk_string(w.stroll) << " colored " << seq << '\n';
  }
  return exit_ok;
}

// ---- construct ----------------------------------------------------------------

int cmd_construct_table1(const Globals& globals, std::optional<std::size_t> n) {
  json rows = json::array();
  bool all = true;
  for (const auto& row : table1_rows) {
    if (n && row.n != *n) continue;
    const bool ok = !exists_repetitive_nonboring_walk(cycle_graph(row.n), Coloring::from_digits(row.colors), true);
    all &= ok;
    rows.push_back({{"n", row.n}, {"sigma", row.sigma}, {"coloring", std::string(row.colors)}, {"verified", ok}});
    if (!globals.json)
      std::cout << "C" << std::left << std::setw(3) << row.n << row.sigma << "  " << row.colors << (ok ? "" : "  FAILED") << '\n';
  }
  if (rows.empty()) throw usage_error("--n must be in 4..21");
  if (globals.json) print_json({{"schema", schema_version}, {"rows", rows}});
  return all ? exit_ok : exit_fails;
}

int print_trace(const Globals& globals, const ConstructionTrace& t, bool with_trace) {
  const bool ok = !exists_repetitive_nonboring_walk(cycle_graph(t.n), t.coloring, true);
  if (globals.json) {
    json j = with_trace ? trace_to_json(t) : json{{"schema", schema_version}, {"n", t.n}, {"coloring", coloring_to_json(t.coloring)}};
    j["verified"] = ok;
    print_json(j);
  } else {
    std::cout << "C" << t.n << ": " << coloring_to_json(t.coloring).dump() << (ok ? " (walk-nonrepetitive)" : " (NOT verified)") << '\n';
    if (with_trace) {
      std::cout << "base C" << t.base.size() << ": " << t.base.to_digits() << ", k=" << t.k << ", m=" << t.m << '\n';
      for (const auto& e : t.matching) {
        const bool kept = std::find(t.removed.begin(), t.removed.end(), e.index) != t.removed.end();
        const std::string edge = "v" + std::to_string(e.edge.first) + "v" + std::to_string(e.edge.second);
        std::cout << "  e" << std::left << std::setw(3) << e.index << std::setw(9) << edge << (e.good ? "good  " : "bad   ")
                  << (kept ? "kept" : "subdivided") << '\n';
      }
    }
  }
  return ok ? exit_ok : exit_fails;
}

int cmd_construct_sigma(const Globals& globals, std::size_t n, bool with_trace) {
  if (n <= 21) throw usage_error("sigma-cycle builds n > 21; use 'construct table1 --n N' for smaller cycles");
  SolveOptions opts;
  opts.node_budget = node_budget(globals);
  return print_trace(globals, sigma_cycle_coloring(n, opts), with_trace);
}

int print_certificate(const Globals& globals, const std::string& graph, const ChromaticCertificate& cert) {
  if (globals.json)
    print_json({{"schema", schema_version},
                {"graph", graph},
                {"value", cert.value},
                {"coloring", coloring_to_json(cert.coloring)},
                {"note", cert.note}});
  else
    std::cout << graph << ": value " << cert.value << ", coloring " << coloring_to_json(cert.coloring).dump()
              << (cert.note.empty() ? "" : " (" + cert.note + ")") << '\n';
  return exit_ok;
}

int cmd_construct_rho(const Globals& globals, bool cycle, std::size_t n) {
  SolveOptions opts;
  opts.node_budget = node_budget(globals);
  return cycle ? print_certificate(globals, "cycle:" + std::to_string(n), rho_cycle_coloring(n, opts))
               : print_certificate(globals, "path:" + std::to_string(n), rho_path_coloring(n, opts));
}

int cmd_construct_fig1(const Globals& globals) {
  auto [g, c] = figure1_fixture();
  json results = json::object();
  bool expected = true;
  for (const char* property : {"dist2", "path", "walk"}) {
    PropertyResult r = check_property(g, c, property, std::nullopt);
    expected &= std::string(property) == "walk" ? !r.holds : r.holds;
    results[property] = {{"holds", r.holds}, {"witness", r.witness}};
    if (!globals.json) std::cout << std::left << std::setw(7) << property << (r.holds ? "holds" : "fails: " + r.text) << '\n';
  }
  if (globals.json)
    print_json({{"schema", schema_version}, {"graph", graph_to_json(g)}, {"coloring", coloring_to_json(c)}, {"results", results}});
  return expected ? exit_ok : exit_fails;
}

// ---- reproduce ----------------------------------------------------------------

json claim_to_json(const ClaimReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"name", row.name}, {"pass", row.pass}, {"detail", row.detail}, {"seconds", row.seconds}});
  return {{"claim", r.claim}, {"passed", r.passed()}, {"aborted", r.aborted}, {"seconds", r.seconds}, {"rows", rows}};
}

int cmd_reproduce(const Globals& globals, const std::string& claim, std::optional<double> time_budget, bool no_stretch) {
  std::vector<std::string_view> claims;
  if (claim == "all") {
    claims.assign(claim_names.begin(), claim_names.end());
  } else if (std::find(claim_names.begin(), claim_names.end(), claim) != claim_names.end()) {
    claims.push_back(claim);
  } else {
    throw usage_error("unknown claim '" + claim + "'");
  }
  ReproduceOptions opts;
  opts.node_budget = node_budget(globals);
  opts.time_budget_seconds = time_budget;
  opts.stretch = !no_stretch;
  bool aborted = false, failed = false;
  json reports = json::array();
  for (std::string_view name : claims) {
    ClaimReport r = reproduce(name, opts);
    aborted |= r.aborted;
    failed |= !r.passed() && !r.aborted;
    if (globals.json) {
      reports.push_back(claim_to_json(r));
      continue;
    }
    std::cout << "== " << r.claim << ": " << (r.aborted ? "ABORTED" : r.passed() ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(3) << r.seconds << " s)\n";
    for (const auto& row : r.rows)
      std::cout << (row.pass ? "PASS  " : "FAIL  ") << row.name << ": " << row.detail << '\n';
    if (r.aborted) std::cout << "budget exhausted; remaining rows skipped\n";
  }
  if (globals.json) print_json({{"schema", schema_version}, {"claims", reports}});
  if (aborted) return exit_budget;
  return failed ? exit_fails : exit_ok;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify, search for and construct nonrepetitive colorings of graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_flag("--json", globals.json, "machine-readable output");
  std::string budget_text;
  app.add_option("--budget", budget_text, "node budget for searches (default: $NONREP_BUDGET or 1e9)");

  const std::vector<std::string> all_properties{"path", "stroll", "walk", "dist2"};
  const std::vector<std::string> search_properties{"path", "stroll", "walk"};

  GraphArgs verify_graph;
  ColorArgs verify_colors;
  std::string verify_property;
  std::optional<std::size_t> oracle_bound;
  auto* verify = app.add_subcommand("verify", "check one property of a coloring");
  add_graph_args(verify, verify_graph);
  add_color_args(verify, verify_colors);
  verify->add_option("--property", verify_property, "path, stroll, walk or dist2")->required()->check(CLI::IsMember(all_properties));
  verify->add_option("--oracle-bound", oracle_bound, "use the brute-force walk enumerator up to this half-length");

  GraphArgs decide_graph;
  ColorArgs decide_colors;
  auto* decide = app.add_subcommand("decide", "check every property of a coloring");
  add_graph_args(decide, decide_graph);
  add_color_args(decide, decide_colors);

  GraphArgs solve_graph;
  std::string solve_property;
  int max_colors = 5;
  bool no_symmetry = false, no_pruning = false;
  auto* solve_cmd = app.add_subcommand("solve", "smallest number of colors for a property, by exhaustive search");
  add_graph_args(solve_cmd, solve_graph);
  solve_cmd->add_option("--property", solve_property, "path, stroll or walk")->required()->check(CLI::IsMember(search_properties));
  solve_cmd->add_option("--max-colors", max_colors, "largest k to try")->capture_default_str();
  solve_cmd->add_flag("--no-symmetry-breaking", no_symmetry, "try every color at every vertex");
  solve_cmd->add_flag("--no-pruning", no_pruning, "only check complete colorings");

  auto* sa = app.add_subcommand("sa", "S/A words of 3-colored paths and cycles");
  sa->require_subcommand(1);
  GraphArgs sa_graph;
  ColorArgs sa_colors;
  auto* sa_encode = sa->add_subcommand("encode", "word of a proper 3-coloring");
  add_graph_args(sa_encode, sa_graph);
  add_color_args(sa_encode, sa_colors);
  std::string sa_word, sa_kind = "path";
  auto* sa_decode = sa->add_subcommand("decode", "coloring of a word, starting 1 2");
  sa_decode->add_option("word", sa_word, "word over S and A")->required();
  sa_decode->add_option("--kind", sa_kind, "path or cycle")->capture_default_str();
  bool sa_cyclic = false;
  auto* sa_check = sa->add_subcommand("check", "search a word for forbidden factors");
  sa_check->add_option("word", sa_word, "word over S and A")->required();
  sa_check->add_flag("--cyclic", sa_cyclic, "also look at factors that wrap around");
  std::size_t sa_max_len = 64;
  bool sa_list = false;
  auto* sa_enumerate = sa->add_subcommand("enumerate", "every word avoiding the forbidden factors");
  sa_enumerate->add_option("--max-len", sa_max_len, "longest word length to consider")->capture_default_str();
  sa_enumerate->add_flag("--words", sa_list, "list the words too");
  auto* sa_longest = sa->add_subcommand("longest", "length and words of the longest avoiding words");
  std::string sa_forbidden;
  auto* sa_witness = sa->add_subcommand("witness", "repetitive stroll forced by a forbidden word");
  sa_witness->add_option("word", sa_forbidden, "one of SS, AAAA, ASASA, AASAASAA, AAASAAASAAA")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(forbidden_words.begin(), forbidden_words.end())));

  auto* construct = app.add_subcommand("construct", "explicit colorings");
  construct->require_subcommand(1);
  std::optional<std::size_t> table_n;
  auto* con_table = construct->add_subcommand("table1", "minimum walk-nonrepetitive colorings of C4..C21");
  con_table->add_option("--n", table_n, "only this cycle length");
  std::size_t con_n = 0;
  bool con_trace = false;
  auto* con_sigma = construct->add_subcommand("sigma-cycle", "walk-nonrepetitive 4-coloring of C_n, n > 21");
  con_sigma->add_option("--n", con_n, "cycle length")->required();
  con_sigma->add_flag("--trace", con_trace, "show the base cycle and matching");
  auto* con_nine = construct->add_subcommand("nine-cycle", "C9 from the subdivided C6 coloring 231321");
  auto* con_rho_path = construct->add_subcommand("rho-path", "minimum stroll-nonrepetitive coloring of P_n");
  con_rho_path->add_option("--n", con_n, "path length")->required();
  auto* con_rho_cycle = construct->add_subcommand("rho-cycle", "minimum stroll-nonrepetitive coloring of C_n");
  con_rho_cycle->add_option("--n", con_n, "cycle length")->required();
  auto* con_fig1 = construct->add_subcommand("fig1", "unicyclic distance-2, path-nonrepetitive, not walk-nonrepetitive");
  bool con_nine_trace = false;
  con_nine->add_flag("--trace", con_nine_trace, "show the base cycle and matching");

  std::string claim;
  std::optional<double> time_budget;
  bool no_stretch = false;
  auto* repro = app.add_subcommand("reproduce", "re-check a named result and print a pass/fail table");
  repro->add_option("claim", claim, "table1, currie, thm1, thm2, thm3, lemma4, lemma5, fig1, hierarchy or all")->required();
  repro->add_option("--time-budget", time_budget, "seconds per claim (default depends on the claim)");
  repro->add_flag("--no-stretch", no_stretch, "skip the optional larger instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (!budget_text.empty()) globals.budget = parse_budget(budget_text, "--budget");
    if (verify->parsed()) return cmd_verify(globals, verify_graph, verify_colors, verify_property, oracle_bound);
    if (decide->parsed()) return cmd_decide(globals, decide_graph, decide_colors);
    if (solve_cmd->parsed()) return cmd_solve(globals, solve_graph, solve_property, max_colors, no_symmetry, no_pruning);
    if (sa_encode->parsed()) return cmd_sa_encode(globals, sa_graph, sa_colors);
    if (sa_decode->parsed()) return cmd_sa_decode(globals, sa_word, sa_kind);
    if (sa_check->parsed()) return cmd_sa_check(globals, sa_word, sa_cyclic);
    if (sa_enumerate->parsed()) return cmd_sa_enumerate(globals, sa_max_len, sa_list);
    if (sa_longest->parsed()) return cmd_sa_longest(globals);
    if (sa_witness->parsed()) return cmd_sa_witness(globals, sa_forbidden);
    if (con_table->parsed()) return cmd_construct_table1(globals, table_n);
    if (con_sigma->parsed()) return cmd_construct_sigma(globals, con_n, con_trace);
    if (con_nine->parsed()) return print_trace(globals, nine_cycle_subdivision(), con_nine_trace);
    if (con_rho_path->parsed()) return cmd_construct_rho(globals, false, con_n);
    if (con_rho_cycle->parsed()) return cmd_construct_rho(globals, true, con_n);
    if (con_fig1->parsed()) return cmd_construct_fig1(globals);
    if (repro->parsed()) return cmd_reproduce(globals, claim, time_budget, no_stretch);
  } catch (const budget_exceeded& e) {
    std::cerr << "nonrep: " << e.what() << '\n';
    return exit_budget;
  } catch (const usage_error& e) {
    std::cerr << "nonrep: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "nonrep: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "nonrep: internal error: " << e.what() << '\n';
    return 4;
  }
  return exit_usage;
}
