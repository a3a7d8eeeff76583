// circlefp: check, classify and rewrite fixed point data of circle actions.
//
// Exit codes: 0 pass / classified / reduced, 1 principled failure (a check
// fails, data not in the classification, search exhausted), 2 usage or parse
// error.

#include <circlefp/circlefp.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace circlefp;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  bool quiet = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

FixedPointData load(const std::string& path) {
  const std::string text = read_input(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

std::set<Integer> parse_pair_weights(const std::string& text, const FixedPointData& d) {
  if (text == "auto") return distinct_weights(d);
  std::set<Integer> out;
  if (text == "none" || text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer w = parse_integer(item);
    if (w < 1) throw InvalidWeightError("pairing weights must be positive");
    out.insert(w);
  }
  return out;
}

int cmd_check(const Globals& g, const std::string& input, long order, const std::string& pair_weights) {
  const auto d = load(input);
  const auto suite = run_all(d, parse_pair_weights(pair_weights, d));
  const std::size_t n = order > 0 ? static_cast<std::size_t>(order) : default_order(d);
  const auto series = signature_series(d, n);
  if (g.json) {
    auto j = to_json(suite);
    j["series"] = {{"order", n}, {"text", to_string(series)}};
    std::cout << j.dump(2) << "\n";
  } else if (!g.quiet) {
    for (const auto& r : suite.reports) {
      std::cout << to_string(r.verdict) << "\t" << r.name << "\t" << r.witness << "\n";
    }
    std::cout << "series\t" << to_string(series) << "\n";
    std::cout << (suite.passed() ? "PASS" : "FAIL") << "\n";
  }
  return suite.passed() ? kOk : kFailure;
}

void print_match(const Match& m) {
  std::cout << verdict_name(m);
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Case1>) {
          std::cout << " {" << to_string(FixedPointDatum(Sign::plus(), x.first)).substr(3) << " {"
                    << to_string(FixedPointDatum(Sign::plus(), x.second)).substr(3);
        } else if constexpr (std::is_same_v<T, Case2>) {
          std::cout << " a=" << x.a << " b=" << x.b << " c=" << x.c;
        } else if constexpr (std::is_same_v<T, TwoPointRotation>) {
          std::cout << " " << to_string(FixedPointDatum(Sign::plus(), x.weights)).substr(3);
        } else if constexpr (std::is_same_v<T, FourDimReachable>) {
          if (x.normalization != 1) std::cout << " (weights divided by " << x.normalization << ")";
          for (const auto& s : x.trace) std::cout << "\n  step " << s.step << ": " << s.first << " " << s.second;
        } else {
          std::cout << ": " << x.reason;
        }
      },
      m);
  std::cout << "\n";
}

int cmd_classify(const Globals& g, const std::string& input, bool effective) {
  const auto d = load(input);
  Classification c;
  if (d.size() == 2) {
    c = classify_two_fixed_points(d);
  } else if (d.arity() == 2) {
    c = membership_4d(d, effective);
  } else if (d.size() == 4 && d.arity() == 3) {
    c = classify_6d4fp(d);
  } else {
    std::cerr << "classify: unsupported shape (" << d.size() << " points, " << d.arity() << " weights each)\n";
    return kUsage;
  }
  if (g.json) {
    std::cout << to_json(c).dump(2) << "\n";
  } else if (!g.quiet) {
    for (const auto& m : c.matches) print_match(m);
  }
  return c.classified() ? kOk : kFailure;
}

int cmd_graphs(const Globals& g, const std::string& input, bool emit, std::size_t cap) {
  const auto d = load(input);
  std::vector<LabeledMultigraph> graphs;
  try {
    graphs = enumerate_admissible(d, cap);
  } catch (const NoMatchingError& e) {
    std::cerr << "graphs: " << e.what() << "\n";
    return kFailure;
  }
  auto tag_of = [&](const LabeledMultigraph& gr) -> std::string {
    if (d.size() != 4 || d.arity() != 3) return "none";
    try {
      auto fc = match_figure1(gr);
      return fc ? std::string(1, to_char(fc->tag)) : "none";
    } catch (const InvalidInputError&) {
      return "none";
    }
  };
  if (g.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& gr : graphs) arr.push_back({{"graph", serialize_graph(gr)}, {"case", tag_of(gr)}});
    std::cout << nlohmann::json{{"count", graphs.size()}, {"graphs", arr}}.dump(2) << "\n";
    return kOk;
  }
  if (g.quiet) return kOk;
  std::cout << "# " << graphs.size() << " admissible graph(s)\n";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::cout << "# graph " << i << ": case " << tag_of(graphs[i]) << "\n";
    if (emit) std::cout << serialize_graph(graphs[i]) << "\n";
  }
  return kOk;
}

int cmd_reduce(const Globals& g, const std::string& input, std::size_t max_depth, const std::string& trace_path,
               bool search_only) {
  const auto d = load(input);
  if (!d.empty() && d.arity() != 3) {
    std::cerr << "reduce: needs 3 weights per fixed point, got " << d.arity() << "\n";
    return kUsage;
  }
  const auto result = reduce_to_empty(d, max_depth, search_only ? Strategy::search : Strategy::scripted);
  if (result.succeeded() && !trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw Error("cannot write '" + trace_path + "'");
    out << trace_to_json_lines(*result.trace);
  }
  if (g.json) {
    nlohmann::json j{{"reduced", result.succeeded()}};
    if (result.succeeded()) {
      nlohmann::json moves = nlohmann::json::array();
      for (const auto& m : result.trace->moves) moves.push_back(to_json(m));
      j["moves"] = moves;
    } else {
      const auto& f = result.failure;
      j["failure"] = {{"reason", f.reason},
                      {"depth_reached", f.depth_reached},
                      {"nodes_expanded", f.nodes_expanded},
                      {"states_seen", f.states_seen},
                      {"largest_collection", f.largest_collection}};
    }
    std::cout << j.dump(2) << "\n";
  } else if (!g.quiet) {
    if (result.succeeded()) {
      std::cout << "reduced to the empty collection in " << result.trace->moves.size() << " move(s)\n";
      for (const auto& m : result.trace->moves) std::cout << "  " << to_string(m) << "\n";
    } else {
      const auto& f = result.failure;
      std::cout << "search failed: " << f.reason << " (nodes " << f.nodes_expanded << ", states "
                << f.states_seen << ", largest collection " << f.largest_collection << ")\n";
    }
  }
  return result.succeeded() ? kOk : kFailure;
}

int cmd_gen(const Globals& g, const std::string& family, const std::vector<std::string>& raw) {
  std::vector<Integer> p;
  for (const auto& s : raw) p.push_back(parse_integer(s));
  auto need = [&](std::size_t n) {
    if (p.size() != n) {
      throw InvalidInputError(family + " takes " + std::to_string(n) + " parameter(s), got " +
                              std::to_string(p.size()));
    }
  };
  FixedPointData d;
  if (family == "s6") {
    need(3);
    d = examples::gen_s6(p[0], p[1], p[2]);
  } else if (family == "s6pair") {
    need(6);
    d = examples::gen_s6_pair(p[0], p[1], p[2], p[3], p[4], p[5]);
  } else if (family == "cp3") {
    need(3);
    d = examples::gen_cp3(p[0], p[1], p[2]);
  } else if (family == "blowup") {
    need(3);
    d = examples::gen_blowup(p[0], p[1], p[2]);
  } else if (family == "cp2") {
    need(2);
    d = examples::gen_cp2(p[0], p[1]);
  } else if (family == "petrie") {
    need(0);
    d = examples::petrie();
  } else {
    throw InvalidInputError("unknown family '" + family + "'");
  }
  std::cout << (g.json ? serialize_json(d) + "\n" : serialize_text(d));
  return kOk;
}

int cmd_oracle(const Globals& g, std::size_t points, std::size_t arity, long max_weight, long cap) {
  const auto report = run_oracle(points, arity, max_weight, cap);
  if (g.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"data", to_json(r.data)},
                      {"checks_passed", r.checks_passed},
                      {"case_tags", r.figure_tags},
                      {"classification", r.classification}});
    }
    std::cout << nlohmann::json{{"candidates", report.rows.size()},
                                {"survivors", report.survivors},
                                {"survivors_with_case", report.survivors_with_figure},
                                {"unexplained", report.unexplained},
                                {"rows", rows}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << oracle_csv(report);
    if (!g.quiet) {
      std::cerr << "candidates " << report.rows.size() << ", survivors " << report.survivors
                << ", with case A-E graph " << report.survivors_with_figure << ", unexplained "
                << report.unexplained << "\n";
    }
  }
  return report.unexplained == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed point data of circle actions: checks, classification, multigraphs, rewriting"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Suppress human-readable output");

  std::string input;
  auto* check = app.add_subcommand("check", "Run every necessary condition on the data");
  long order = 0;
  std::string pair_weights = "auto";
  check->add_option("input", input, "Data file ('-' for stdin)")->required();
  check->add_option("--order", order, "Truncation order of the printed series (default: automatic)");
  check->add_option("--pair-weights", pair_weights,
                    "Weights for the congruence pairing check: 'auto', 'none' or a comma list");

  auto* classify = app.add_subcommand("classify", "Classify 2-point, 4-dimensional, or 6-dim/4-point data");
  bool effective = false;
  classify->add_option("input", input, "Data file ('-' for stdin)")->required();
  classify->add_flag("--effective", effective, "Require gcd of all weights to be 1 (dimension 4)");

  auto* graphs = app.add_subcommand("graphs", "Enumerate admissible multigraphs and tag cases A-E");
  bool emit = false;
  std::size_t cap = kDefaultGraphCap;
  graphs->add_option("input", input, "Data file ('-' for stdin)")->required();
  graphs->add_flag("--emit", emit, "Print every graph in the graph text format");
  graphs->add_option("--cap", cap, "Maximum number of graphs");

  auto* reduce = app.add_subcommand("reduce", "Rewrite 6-dimensional data to the empty collection");
  std::size_t max_depth = kDefaultMaxDepth;
  std::string trace_path;
  bool search_only = false;
  reduce->add_option("input", input, "Data file ('-' for stdin)")->required();
  reduce->add_option("--max-depth", max_depth, "Search depth bound");
  reduce->add_option("--emit-trace", trace_path, "Write the trace as JSON lines");
  reduce->add_flag("--search", search_only, "Skip the fixed scripts and always search");

  auto* gen = app.add_subcommand("gen", "Emit the data of a standard example");
  std::string family;
  std::vector<std::string> params;
  gen->add_option("family", family, "s6 | s6pair | cp3 | blowup | cp2 | petrie")->required();
  gen->add_option("--params", params, "Positive integer parameters")->allow_extra_args();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive sweep of all data of a shape with bounded weights");
  std::size_t points = 4, arity = 3;
  long max_weight = 2, weight_cap = kDefaultOracleWeightCap;
  oracle->add_option("--points", points, "Number of fixed points");
  oracle->add_option("--arity", arity, "Weights per fixed point");
  oracle->add_option("--max-weight", max_weight, "Largest weight");
  oracle->add_option("--cap", weight_cap, "Largest allowed --max-weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(g, input, order, pair_weights);
    if (*classify) return cmd_classify(g, input, effective);
    if (*graphs) return cmd_graphs(g, input, emit, cap);
    if (*reduce) return cmd_reduce(g, input, max_depth, trace_path, search_only);
    if (*gen) return cmd_gen(g, family, params);
    if (*oracle) return cmd_oracle(g, points, arity, max_weight, weight_cap);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitExceededError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
