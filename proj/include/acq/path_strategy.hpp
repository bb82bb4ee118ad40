#pragma once

#include <cstddef>

#include "acq/simulator.hpp"

namespace acq {

// Odd-even transposition schedule on the path 0..n-1.
//
// With vertices numbered 1..n, round r (1-based) swaps every edge (i, i+1)
// with i = r (mod 2); in 0-based ids that is every edge (k, k+1) with
// k = r - 1 (mod 2). The contour emulation uses the same convention.
//
// full == false gives the n-2 round acquaintance strategy (empty for n <= 2);
// full == true gives n rounds, after which the line is reversed.
Strategy path_strategy(std::size_t n, bool full);

// 0-based virtual edges swapped in round r (1-based) of the schedule above:
// k = r-1, r+1, ... while k + 1 < n.
bool path_round_swaps(std::size_t round, std::size_t k);

// Vertex (1-based) of the agent that started at vertex `start` after `t`
// rounds of the schedule. Odd starts climb to n, wait one round and descend;
// even starts descend to 1, wait one round and climb. The motion is periodic
// with period 2n.
std::size_t trajectory(std::size_t start, std::size_t t, std::size_t n);

// Upper bound on the first round after which the agents that started at
// 1-based vertices i < j (j - i >= 2) sit on adjacent vertices:
//   i odd,  j odd   -> n - i - 1
//   i even, j even  -> j - 2        (mirror image of the odd/odd case)
//   i odd,  j even  -> j - i - 2
//   i even, j odd   -> n - (j - i + 1) / 2
// Throws DegenerateAdjacent when j - i < 2.
std::size_t predicted_meeting_bound(std::size_t i, std::size_t j, std::size_t n);

}  // namespace acq
