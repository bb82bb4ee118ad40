#include "acq/path_strategy.hpp"

#include <string>

#include "acq/error.hpp"

namespace acq {

bool path_round_swaps(std::size_t round, std::size_t k) { return k % 2 == (round + 1) % 2; }

Strategy path_strategy(std::size_t n, bool full) {
  Strategy s{make_family(Family::Path, n), {}};
  const std::size_t rounds = full ? n : (n >= 2 ? n - 2 : 0);
  s.rounds.resize(rounds);
  for (std::size_t r = 1; r <= rounds; ++r) {
    for (std::size_t k = (r + 1) % 2; k + 1 < n; k += 2) {
      s.rounds[r - 1].emplace_back(static_cast<Vertex>(k), static_cast<Vertex>(k + 1));
    }
  }
  return s;
}

std::size_t trajectory(std::size_t start, std::size_t t, std::size_t n) {
  // Unfold the bounce onto a cycle of length 2n: phase u in [0, n) means
  // vertex u + 1 moving up, phase u in [n, 2n) means vertex 2n - u moving down.
  const std::size_t period = 2 * n;
  const std::size_t phase0 = start % 2 == 1 ? start - 1 : period - start;
  const std::size_t u = (phase0 + t) % period;
  return u < n ? u + 1 : period - u;
}

std::size_t predicted_meeting_bound(std::size_t i, std::size_t j, std::size_t n) {
  if (i >= j || j - i < 2) {
    throw Error(ErrorKind::DegenerateAdjacent, "meeting bound needs i + 2 <= j, got i=" +
                                                   std::to_string(i) + " j=" + std::to_string(j));
  }
  const bool i_odd = i % 2 == 1;
  const bool j_odd = j % 2 == 1;
  if (i_odd && j_odd) return n - i - 1;
  if (!i_odd && !j_odd) return j - 2;
  if (i_odd) return j - i - 2;
  return n - (j - i + 1) / 2;
}

}  // namespace acq
