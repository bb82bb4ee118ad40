#include "acq/simulator.hpp"

#include <cassert>
#include <numeric>
#include <string>
#include <utility>

#include "acq/error.hpp"

namespace acq {

AcquaintanceTable::AcquaintanceTable(std::size_t agents) : agents_(agents) {
  words_.assign((total_pairs() + 63) / 64, 0);
}

std::size_t AcquaintanceTable::index(Agent a, Agent b) {
  if (a < b) std::swap(a, b);
  return static_cast<std::size_t>(a) * (a - 1) / 2 + b;
}

bool AcquaintanceTable::mark(Agent a, Agent b) {
  if (a == b) return false;
  const std::size_t i = index(a, b);
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  std::uint64_t& word = words_[i / 64];
  if (word & bit) return false;
  word |= bit;
  ++count_;
  return true;
}

bool AcquaintanceTable::contains(Agent a, Agent b) const {
  if (a == b) return false;
  const std::size_t i = index(a, b);
  return (words_[i / 64] >> (i % 64)) & 1U;
}

SimulationState init_state(const Graph& g) {
  SimulationState s;
  s.agent_at.resize(g.size());
  std::iota(s.agent_at.begin(), s.agent_at.end(), Agent{0});
  s.position_of.resize(g.size());
  std::iota(s.position_of.begin(), s.position_of.end(), Vertex{0});
  s.acquainted = AcquaintanceTable(g.size());
  for (const Edge& e : g.edges()) s.acquainted.mark(e.u, e.v);
  return s;
}

SimulationState apply_matching(SimulationState state, const Graph& g, std::span<const Edge> m) {
  if (!is_matching(g, m)) {
    throw Error(ErrorKind::InvalidMatching, "round " + std::to_string(state.round + 1) +
                                                " is not a matching of the graph",
                state.round + 1);
  }
  for (const Edge& e : m) {
    std::swap(state.agent_at[e.u], state.agent_at[e.v]);
    state.position_of[state.agent_at[e.u]] = e.u;
    state.position_of[state.agent_at[e.v]] = e.v;
  }
  // Only edges touching a moved agent can create new pairs.
  for (const Edge& e : m) {
    for (Vertex moved : {e.u, e.v}) {
      for (Vertex w : g.neighbors(moved)) {
        state.acquainted.mark(state.agent_at[moved], state.agent_at[w]);
      }
    }
  }
  ++state.round;
#ifndef NDEBUG
  for (Vertex v = 0; v < state.agent_at.size(); ++v) {
    assert(state.position_of[state.agent_at[v]] == v && "arrangement is not a permutation");
  }
#endif
  return state;
}

RunReport run(const Graph& g, const Strategy& strategy, SimulationState& state,
              const TraceFn& trace) {
  state = init_state(g);
  RunReport report;
  report.total_pairs = state.acquainted.total_pairs();
  if (state.acquainted.complete()) report.completion_round = 0;
  for (const Matching& m : strategy.rounds) {
    const std::size_t before = state.acquainted.count();
    state = apply_matching(std::move(state), g, m);
    if (trace) trace({state.round, m, state.acquainted.count() - before});
    if (!report.completion_round && state.acquainted.complete()) {
      report.completion_round = state.round;
    }
  }
  report.rounds_applied = state.round;
  report.acquainted_pairs = state.acquainted.count();
  report.all_acquainted = state.acquainted.complete();
  return report;
}

RunReport run(const Graph& g, const Strategy& strategy, const TraceFn& trace) {
  SimulationState state;
  return run(g, strategy, state, trace);
}

}  // namespace acq
