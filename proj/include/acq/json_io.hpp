#pragma once

#include <string>

#include <json.hpp>

#include "acq/bounds.hpp"
#include "acq/contour_strategy.hpp"
#include "acq/exact.hpp"
#include "acq/graph.hpp"
#include "acq/simulator.hpp"

namespace acq {

using nlohmann::json;

// {"n": int, "edges": [[u, v], ...]} with u < v on output.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"graph": <graph>, "rounds": [[[u, v], ...], ...]}
json strategy_to_json(const Strategy& s);
Strategy strategy_from_json(const json& j);

json run_report_to_json(const RunReport& r);

// {"rounds_used", "bound", "tree_max_degree", "graph_max_degree",
//  "completion_round", "max_colors"} plus a few diagnostic fields.
json synthesis_report_to_json(const SynthesisReport& r);

json exact_result_to_json(const ExactResult& r);
json barbell_bound_to_json(const BarbellBound& b);

// Parses text and maps any JSON or schema error to ParseError.
json parse_json(const std::string& text);

}  // namespace acq
