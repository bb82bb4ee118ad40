#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "acq/contour.hpp"
#include "acq/graph.hpp"
#include "acq/simulator.hpp"

namespace acq {

// Exchange of the agents on two consecutive marks k and k+1.
//
// The walk interval [gamma_begin, gamma_end] is traversed forward
// (p, p+1), ..., (q-1, q) and then backward (q-1, q-2), ..., (p+1, p); each
// step is projected to its tree edge. Net effect on the graph: the agents at
// the two end vertices trade places and every other agent is restored.
struct SwapJob {
  std::size_t virtual_index = 0;
  std::size_t gamma_begin = 0;
  std::size_t gamma_end = 0;
  std::vector<Edge> steps;       // 2 * (gamma_end - gamma_begin) - 1 entries
  std::vector<Vertex> footprint;  // sorted distinct vertices of the interval
  std::size_t color = 0;
};

inline constexpr std::size_t kSubRoundsPerColor = 5;

// Jobs of emulated path round r (1-based), one per virtual edge selected by
// the odd-even schedule. Jobs are uncolored and pairwise disjoint on the walk.
std::vector<SwapJob> jobs_for_round(const Contour& contour, std::size_t round);

// Greedy coloring in ascending virtual_index order: each job takes the smallest
// color not held by an earlier job whose footprint intersects its own. Throws
// ColorOverflow if more than 4 * max_degree colors would be needed.
std::vector<SwapJob> conflict_color(std::vector<SwapJob> jobs, std::size_t max_degree);

enum class PathRounds { Full, Short };

struct SynthesisOptions {
  Vertex root = 0;
  TreePolicy policy = TreePolicy::Dfs;
  // Full emulates the n-round reversal schedule; Short emulates only n-2
  // rounds and is accepted only if the simulator confirms acquaintance.
  PathRounds path_rounds = PathRounds::Full;
};

struct SynthesisReport {
  Strategy strategy;
  SpanningTree tree;
  std::size_t tree_max_degree = 0;
  std::size_t graph_max_degree = 0;
  std::size_t rounds_used = 0;
  std::size_t bound = 0;        // 20 * tree_max_degree * n
  std::size_t graph_bound = 0;  // 20 * graph_max_degree * n
  std::size_t max_colors = 0;
  RunReport verification;
  std::optional<std::size_t> completion_round;

  bool verified() const { return verification.valid && verification.all_acquainted; }
};

// Spanning tree -> contour -> marks, then every emulated path round becomes
// one block of five sub-rounds per color used, colors in ascending order.
// Within a block, sub-round s plays step s of every job of that color (shorter
// jobs idle). Trailing empty sub-rounds are trimmed. The result is run through
// the simulator before returning.
SynthesisReport synthesize(const Graph& g, const SynthesisOptions& options = {});

}  // namespace acq
