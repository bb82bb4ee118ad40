#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

// All non-empty matchings of g, ordered by size and then lexicographically.
std::vector<Matching> enumerate_matchings(const Graph& g);

inline constexpr std::size_t kDefaultMaxStates = 50'000'000;
inline constexpr std::size_t kMaxExactVertices = 8;

struct ExactOptions {
  std::size_t max_states = kDefaultMaxStates;
  // Skip a state when an already visited state with the same arrangement knows
  // a superset of its acquaintances.
  bool domination_pruning = false;
};

struct ExactResult {
  std::size_t ac = 0;
  std::size_t states_explored = 0;
};

// Acquaintance time by breadth-first search over (arrangement, acquaintance)
// states, moves being all non-empty matchings. Throws Disconnected,
// TooLarge (n > kMaxExactVertices) or BudgetExceeded (detail = states seen).
ExactResult exact_ac(const Graph& g, const ExactOptions& options = {});

}  // namespace acq
