#include "acq/json_io.hpp"

#include <cmath>

#include "acq/error.hpp"

namespace acq {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::ParseError, what);
}

json edge_list(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> parse_edges(const json& j, std::size_t n, const char* where) {
  if (!j.is_array()) parse_error(std::string(where) + " must be an array of [u, v] pairs");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      parse_error(std::string(where) + ": every edge must be a pair of non-negative integers");
    }
    pairs.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::VertexOutOfRange, std::string(where) + ": vertex out of range");
    }
    if (a == b) throw Error(ErrorKind::SelfLoop, std::string(where) + ": self-loop");
    edges.emplace_back(a, b);
  }
  return edges;
}

}  // namespace

json graph_to_json(const Graph& g) {
  return {{"n", g.size()}, {"edges", edge_list(g.edges())}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object()) parse_error("graph must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_unsigned()) {
    parse_error("graph needs a non-negative integer field \"n\"");
  }
  if (!j.contains("edges")) parse_error("graph needs an \"edges\" array");
  const auto n = j["n"].get<std::size_t>();
  const auto edges = parse_edges(j["edges"], n, "edges");
  return Graph::build(n, edges);
}

json strategy_to_json(const Strategy& s) {
  json rounds = json::array();
  for (const Matching& m : s.rounds) rounds.push_back(edge_list(m));
  return {{"graph", graph_to_json(s.graph)}, {"rounds", std::move(rounds)}};
}

Strategy strategy_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("rounds")) {
    parse_error("strategy must be an object with \"graph\" and \"rounds\"");
  }
  Strategy s;
  s.graph = graph_from_json(j["graph"]);
  if (!j["rounds"].is_array()) parse_error("\"rounds\" must be an array");
  for (const json& round : j["rounds"]) {
    s.rounds.push_back(parse_edges(round, s.graph.size(), "round"));
  }
  return s;
}

json run_report_to_json(const RunReport& r) {
  json out = {{"valid", r.valid},
              {"rounds_applied", r.rounds_applied},
              {"all_acquainted", r.all_acquainted},
              {"acquainted_pairs", r.acquainted_pairs},
              {"total_pairs", r.total_pairs}};
  out["completion_round"] = r.completion_round ? json(*r.completion_round) : json(nullptr);
  return out;
}

json synthesis_report_to_json(const SynthesisReport& r) {
  json out = {{"rounds_used", r.rounds_used},
              {"bound", r.bound},
              {"graph_bound", r.graph_bound},
              {"tree_max_degree", r.tree_max_degree},
              {"graph_max_degree", r.graph_max_degree},
              {"max_colors", r.max_colors},
              {"all_acquainted", r.verification.all_acquainted},
              {"n", r.strategy.graph.size()}};
  out["completion_round"] = r.completion_round ? json(*r.completion_round) : json(nullptr);
  return out;
}

json exact_result_to_json(const ExactResult& r) {
  return {{"ac", r.ac}, {"states_explored", r.states_explored}};
}

json barbell_bound_to_json(const BarbellBound& b) {
  json table = json::array();
  for (std::size_t k = 0; k < b.per_k.size(); ++k) {
    table.push_back({{"k", k}, {"configurations", b.per_k[k]}});
  }
  return {{"n", b.n},
          {"per_k", std::move(table)},
          {"argmin_k", b.argmin_k},
          {"min_over_k", b.min_over_k},
          {"lower_bound", b.lower_bound},
          {"continuous_min", b.continuous_min},
          {"continuous_lower_bound", static_cast<std::uint64_t>(std::ceil(b.continuous_min - 1.0))}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace acq
