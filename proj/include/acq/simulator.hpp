#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

using Agent = std::uint32_t;

// Ordered sequence of matchings on a target graph. Empty rounds are allowed.
struct Strategy {
  Graph graph;
  std::vector<Matching> rounds;
};

// Symmetric relation over agent pairs, stored as a packed lower-triangular
// bit table.
class AcquaintanceTable {
 public:
  explicit AcquaintanceTable(std::size_t agents = 0);

  // Returns true if the pair was not yet acquainted.
  bool mark(Agent a, Agent b);
  bool contains(Agent a, Agent b) const;
  std::size_t count() const { return count_; }
  std::size_t agents() const { return agents_; }
  std::size_t total_pairs() const { return agents_ * (agents_ - (agents_ > 0)) / 2; }
  bool complete() const { return count_ == total_pairs(); }

 private:
  static std::size_t index(Agent a, Agent b);

  std::size_t agents_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SimulationState {
  std::vector<Agent> agent_at;      // vertex -> agent
  std::vector<Vertex> position_of;  // agent -> vertex
  AcquaintanceTable acquainted;
  std::size_t round = 0;
};

// Agent i at vertex i; every edge contributes one acquainted pair.
SimulationState init_state(const Graph& g);

// Swaps the agents across every matched edge, then marks all pairs adjacent in
// the new configuration. Throws InvalidMatching if m is not a matching of g.
SimulationState apply_matching(SimulationState state, const Graph& g, std::span<const Edge> m);

struct RunReport {
  bool valid = true;
  std::size_t rounds_applied = 0;
  bool all_acquainted = false;
  std::optional<std::size_t> completion_round;  // 0 if complete before any round
  std::size_t acquainted_pairs = 0;
  std::size_t total_pairs = 0;
};

struct RoundTrace {
  std::size_t round;  // 1-based
  std::span<const Edge> matching;
  std::size_t newly_acquainted;
};

using TraceFn = std::function<void(const RoundTrace&)>;

// Applies all rounds in order. Throws InvalidMatching carrying the offending
// 1-based round index.
RunReport run(const Graph& g, const Strategy& strategy, const TraceFn& trace = {});

// Same as run() but also returns the final state.
RunReport run(const Graph& g, const Strategy& strategy, SimulationState& final_state,
              const TraceFn& trace = {});

}  // namespace acq
