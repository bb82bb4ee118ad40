// acq: build, verify and certify acquaintance strategies from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 search budget exceeded.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acq/bounds.hpp"
#include "acq/contour.hpp"
#include "acq/contour_strategy.hpp"
#include "acq/error.hpp"
#include "acq/exact.hpp"
#include "acq/graph.hpp"
#include "acq/json_io.hpp"
#include "acq/random_graphs.hpp"
#include "acq/simulator.hpp"

namespace {

using namespace acq;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph(const std::string& path) { return graph_from_json(parse_json(read_text(path))); }

void write_text(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

// Deterministic and random families under one name space.
Graph generate(const std::string& family, std::size_t n, std::optional<double> p,
               std::optional<std::uint64_t> seed) {
  if (family == "gnp" || family == "random-tree") {
    if (!seed) throw Error(ErrorKind::ParseError, "family '" + family + "' requires --seed");
    if (family == "random-tree") return random_tree(n, *seed);
    if (!p) throw Error(ErrorKind::ParseError, "family 'gnp' requires an edge probability");
    return gnp_giant_component(n, *p, *seed);
  }
  return make_family(parse_family(family), n);
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  const auto range = text.find("..");
  try {
    if (range != std::string::npos) {
      std::size_t step = 1;
      std::string hi = text.substr(range + 2);
      if (const auto colon = hi.find(':'); colon != std::string::npos) {
        step = std::stoul(hi.substr(colon + 1));
        hi = hi.substr(0, colon);
      }
      const std::size_t lo = std::stoul(text.substr(0, range));
      const std::size_t top = std::stoul(hi);
      if (step == 0) throw std::invalid_argument("step");
      for (std::size_t n = lo; n <= top; n += step) sizes.push_back(n);
      return sizes;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (!item.empty()) sizes.push_back(std::stoul(item));
    }
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "cannot parse sizes '" + text + "'");
  }
  return sizes;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
};

int cmd_gen(const GenArgs& a) {
  std::cout << graph_to_json(generate(a.family, a.n, a.p, a.seed)).dump() << '\n';
  return kExitOk;
}

struct SynthArgs {
  std::string graph;
  Vertex root = 0;
  std::string policy = "dfs";
  std::string path_rounds = "n";
  std::string out;
  std::string report;
  std::string dot;
};

int cmd_synth(const SynthArgs& a) {
  const Graph g = read_graph(a.graph);
  SynthesisOptions opts;
  opts.root = a.root;
  opts.policy = parse_tree_policy(a.policy);
  if (a.path_rounds == "n") {
    opts.path_rounds = PathRounds::Full;
  } else if (a.path_rounds == "n-2") {
    opts.path_rounds = PathRounds::Short;
  } else {
    throw Error(ErrorKind::ParseError, "--path-rounds must be 'n' or 'n-2'");
  }
  const SynthesisReport r = synthesize(g, opts);
  write_text(a.out, strategy_to_json(r.strategy).dump() + "\n", std::cout);
  write_text(a.report, synthesis_report_to_json(r).dump(2) + "\n", std::cerr);
  if (!a.dot.empty()) write_text(a.dot, contour_to_dot(marked_contour(r.tree)), std::cout);
  const bool within_bound = r.rounds_used <= r.bound;
  return r.verified() && within_bound ? kExitOk : kExitVerifyFailed;
}

struct VerifyArgs {
  std::string graph;
  std::string strategy;
  bool trace = false;
};

int cmd_verify(const VerifyArgs& a) {
  const Graph g = read_graph(a.graph);
  const Strategy s = strategy_from_json(parse_json(read_text(a.strategy)));
  if (!(s.graph == g)) {
    throw Error(ErrorKind::ParseError, "strategy targets a different graph");
  }
  TraceFn trace;
  if (a.trace) {
    trace = [](const RoundTrace& t) {
      json m = json::array();
      for (const Edge& e : t.matching) m.push_back({e.u, e.v});
      std::cerr << json{{"round", t.round}, {"matching", m}, {"new_pairs", t.newly_acquainted}}
                << '\n';
    };
  }
  try {
    const RunReport r = run(g, s, trace);
    std::cout << run_report_to_json(r).dump(2) << '\n';
    return r.valid && r.all_acquainted ? kExitOk : kExitVerifyFailed;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::InvalidMatching) throw;
    json out = {{"valid", false}, {"all_acquainted", false}, {"error", "InvalidMatching"},
                {"round", e.detail() ? json(*e.detail()) : json(nullptr)}};
    std::cout << out.dump(2) << '\n';
    return kExitVerifyFailed;
  }
}

struct ExactArgs {
  std::string graph;
  std::size_t max_states = kDefaultMaxStates;
  bool prune = false;
};

int cmd_exact(const ExactArgs& a) {
  const Graph g = read_graph(a.graph);
  ExactOptions opts;
  opts.max_states = a.max_states;
  opts.domination_pruning = a.prune;
  try {
    std::cout << exact_result_to_json(exact_ac(g, opts)).dump(2) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    json out = {{"error", "BudgetExceeded"},
                {"states_explored", e.detail() ? *e.detail() : 0},
                {"max_states", a.max_states}};
    std::cout << out.dump(2) << '\n';
    return kExitBudget;
  }
}

struct BoundsArgs {
  std::optional<std::size_t> barbell;
  std::string graph;
  std::string policy = "dfs";
};

int cmd_bounds(const BoundsArgs& a) {
  json out = json::object();
  if (a.barbell) out["barbell"] = barbell_bound_to_json(barbell_lower_bound(*a.barbell));
  if (!a.graph.empty()) {
    const Graph g = read_graph(a.graph);
    const std::size_t n = g.size();
    const std::size_t dg = max_degree(g);
    const std::size_t dt = spanning_tree(g, 0, parse_tree_policy(a.policy)).max_degree();
    out["graph"] = {{"n", n},
                    {"graph_max_degree", dg},
                    {"tree_max_degree", dt},
                    {"contour_bound_graph", contour_bound(n, dg)},
                    {"contour_bound_tree", contour_bound(n, dt)},
                    {"n_pow_1_5", std::pow(static_cast<double>(n), 1.5)}};
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "bounds needs --barbell and/or --graph");
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

struct BenchArgs {
  std::string family = "path";
  std::string sizes = "8..64:8";
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::string policy = "dfs";
  double c = 3.0;
};

int cmd_bench(const BenchArgs& a) {
  const TreePolicy policy = parse_tree_policy(a.policy);
  const auto sizes = parse_sizes(a.sizes);
  std::cout << "n,delta_g,delta_t,rounds_used,bound,completion_round\n";
  bool all_ok = true;
  for (std::size_t trial = 0; trial < a.trials; ++trial) {
    for (std::size_t n : sizes) {
      const std::uint64_t seed = derive_seed(a.seed, n, trial);
      const double p = a.c / static_cast<double>(n);
      const Graph g = generate(a.family, n, p, seed);
      SynthesisOptions opts;
      opts.policy = policy;
      const SynthesisReport r = synthesize(g, opts);
      all_ok = all_ok && r.verified();
      std::cout << g.size() << ',' << r.graph_max_degree << ',' << r.tree_max_degree << ','
                << r.rounds_used << ',' << r.bound << ','
                << (r.completion_round ? std::to_string(*r.completion_round) : "") << '\n';
    }
  }
  return all_ok ? kExitOk : kExitVerifyFailed;
}

struct DotArgs {
  std::string graph;
  Vertex root = 0;
  std::string policy = "dfs";
};

int cmd_dot(const DotArgs& a) {
  const Graph g = read_graph(a.graph);
  std::cout << contour_to_dot(marked_contour(spanning_tree(g, a.root, parse_tree_policy(a.policy))));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acquaintance strategies on connected graphs"};
  app.require_subcommand(1);

  int status = kExitOk;
  const auto guarded = [&status](auto fn) {
    return [&status, fn] {
      try {
        status = fn();
      } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        status = e.kind() == ErrorKind::BudgetExceeded ? kExitBudget : kExitInputError;
      }
    };
  };

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Print a graph as JSON");
  gen_cmd->add_option("family", gen.family, "path|cycle|complete|star|barbell|gnp|random-tree")
      ->required();
  gen_cmd->add_option("n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("p", gen.p, "Edge probability for gnp");
  gen_cmd->add_option("--seed", gen.seed, "Seed for random families");
  gen_cmd->callback(guarded([&] { return cmd_gen(gen); }));

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Build a contour strategy for a graph");
  synth_cmd->add_option("graph", synth.graph, "Graph JSON file ('-' for stdin)")->required();
  synth_cmd->add_option("--root", synth.root, "Spanning tree root");
  synth_cmd->add_option("--tree-policy", synth.policy, "dfs|degree_greedy");
  synth_cmd->add_option("--path-rounds", synth.path_rounds, "Emulated path rounds: n|n-2");
  synth_cmd->add_option("--out", synth.out, "Strategy output file (default stdout)");
  synth_cmd->add_option("--report", synth.report, "Report output file (default stderr)");
  synth_cmd->add_option("--dot", synth.dot, "Also write the marked contour as DOT");
  synth_cmd->callback(guarded([&] { return cmd_synth(synth); }));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Simulate a strategy and report acquaintance");
  verify_cmd->add_option("graph", verify.graph, "Graph JSON file")->required();
  verify_cmd->add_option("strategy", verify.strategy, "Strategy JSON file")->required();
  verify_cmd->add_flag("--trace", verify.trace, "Per-round trace on stderr");
  verify_cmd->callback(guarded([&] { return cmd_verify(verify); }));

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact acquaintance time by exhaustive search");
  exact_cmd->add_option("graph", exact.graph, "Graph JSON file")->required();
  exact_cmd->add_option("--max-states", exact.max_states, "State budget");
  exact_cmd->add_flag("--prune", exact.prune, "Enable domination pruning");
  exact_cmd->callback(guarded([&] { return cmd_exact(exact); }));

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Barbell lower bound and contour upper bound");
  bounds_cmd->add_option("--barbell", bounds.barbell, "Barbell size n");
  bounds_cmd->add_option("--graph", bounds.graph, "Graph JSON file for the 20*Delta*n bound");
  bounds_cmd->add_option("--tree-policy", bounds.policy, "dfs|degree_greedy");
  bounds_cmd->callback(guarded([&] { return cmd_bounds(bounds); }));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Synthesize over a family of sizes, print CSV");
  bench_cmd->add_option("--family", bench.family, "Graph family (gnp uses p = c/n)");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma list or lo..hi[:step]");
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_option("--trials", bench.trials, "Trials per size");
  bench_cmd->add_option("--tree-policy", bench.policy, "dfs|degree_greedy");
  bench_cmd->add_option("--c", bench.c, "Average degree constant for gnp");
  bench_cmd->callback(guarded([&] { return cmd_bench(bench); }));

  DotArgs dot;
  auto* dot_cmd = app.add_subcommand("dot", "Render the marked contour of a spanning tree");
  dot_cmd->add_option("graph", dot.graph, "Graph JSON file")->required();
  dot_cmd->add_option("--root", dot.root, "Spanning tree root");
  dot_cmd->add_option("--tree-policy", dot.policy, "dfs|degree_greedy");
  dot_cmd->callback(guarded([&] { return cmd_dot(dot); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInputError;
  }
  return status;
}
