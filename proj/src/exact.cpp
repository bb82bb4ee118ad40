#include "acq/exact.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "acq/error.hpp"

namespace acq {

namespace {

void extend_matchings(const std::vector<Edge>& edges, std::size_t from, std::uint32_t used,
                      Matching& current, std::vector<Matching>& out) {
  for (std::size_t i = from; i < edges.size(); ++i) {
    const std::uint32_t mask = (1U << edges[i].u) | (1U << edges[i].v);
    if (used & mask) continue;
    current.push_back(edges[i]);
    out.push_back(current);
    extend_matchings(edges, i + 1, used | mask, current, out);
    current.pop_back();
  }
}

// Packed search state: 3 bits per vertex for the agent sitting there (low 24
// bits), then one bit per agent pair.
using StateKey = std::uint64_t;
constexpr unsigned kArrangementBits = 3 * kMaxExactVertices;
constexpr StateKey kArrangementMask = (StateKey{1} << kArrangementBits) - 1;

class Packing {
 public:
  explicit Packing(const Graph& g) : g_(g), n_(g.size()) {
    std::size_t bit = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = a + 1; b < n_; ++b) {
        pair_bit_[a][b] = pair_bit_[b][a] = static_cast<unsigned>(bit++);
      }
    }
    full_ = bit == 0 ? 0 : ((std::uint64_t{1} << bit) - 1);
  }

  std::uint64_t full_acquaintance() const { return full_; }

  StateKey initial() const {
    std::array<unsigned, kMaxExactVertices> agent{};
    for (std::size_t v = 0; v < n_; ++v) agent[v] = static_cast<unsigned>(v);
    return encode(agent, acquaint(agent, 0));
  }

  StateKey apply(StateKey state, const Matching& m) const {
    auto agent = decode(state);
    for (const Edge& e : m) std::swap(agent[e.u], agent[e.v]);
    return encode(agent, acquaint(agent, state >> kArrangementBits));
  }

 private:
  std::array<unsigned, kMaxExactVertices> decode(StateKey state) const {
    std::array<unsigned, kMaxExactVertices> agent{};
    for (std::size_t v = 0; v < n_; ++v) agent[v] = (state >> (3 * v)) & 7U;
    return agent;
  }

  StateKey encode(const std::array<unsigned, kMaxExactVertices>& agent,
                  std::uint64_t acquaintance) const {
    StateKey key = acquaintance << kArrangementBits;
    for (std::size_t v = 0; v < n_; ++v) key |= StateKey{agent[v]} << (3 * v);
    return key;
  }

  std::uint64_t acquaint(const std::array<unsigned, kMaxExactVertices>& agent,
                         std::uint64_t acquaintance) const {
    for (const Edge& e : g_.edges()) {
      acquaintance |= std::uint64_t{1} << pair_bit_[agent[e.u]][agent[e.v]];
    }
    return acquaintance;
  }

  const Graph& g_;
  std::size_t n_;
  std::array<std::array<unsigned, kMaxExactVertices>, kMaxExactVertices> pair_bit_{};
  std::uint64_t full_ = 0;
};

// Remembers visited states; with domination pruning a state is also rejected
// when a visited state with the same arrangement has a superset acquaintance.
class VisitedSet {
 public:
  explicit VisitedSet(bool prune) : prune_(prune) {}

  bool insert(StateKey key) {
    if (!prune_) return seen_.insert(key).second;
    const std::uint64_t acquaintance = key >> kArrangementBits;
    auto& masks = by_arrangement_[key & kArrangementMask];
    for (std::uint64_t m : masks) {
      if ((m & acquaintance) == acquaintance) return false;
    }
    masks.push_back(acquaintance);
    return true;
  }

 private:
  bool prune_;
  std::unordered_set<StateKey> seen_;
  std::unordered_map<StateKey, std::vector<std::uint64_t>> by_arrangement_;
};

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g) {
  if (g.size() > 32) throw Error(ErrorKind::TooLarge, "matching enumeration needs n <= 32");
  std::vector<Matching> out;
  Matching current;
  extend_matchings(g.edges(), 0, 0, current, out);
  std::stable_sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

ExactResult exact_ac(const Graph& g, const ExactOptions& options) {
  if (g.size() > kMaxExactVertices) {
    throw Error(ErrorKind::TooLarge, "exact search supports at most " +
                                         std::to_string(kMaxExactVertices) + " vertices");
  }
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");

  const Packing packing(g);
  const std::uint64_t goal = packing.full_acquaintance();
  const auto moves = enumerate_matchings(g);

  ExactResult result;
  const StateKey start = packing.initial();
  result.states_explored = 1;
  if ((start >> kArrangementBits) == goal) return result;

  VisitedSet visited(options.domination_pruning);
  visited.insert(start);
  std::vector<StateKey> frontier{start};
  std::vector<StateKey> next;
  for (std::size_t depth = 1; !frontier.empty(); ++depth) {
    next.clear();
    for (StateKey state : frontier) {
      for (const Matching& m : moves) {
        const StateKey child = packing.apply(state, m);
        if (!visited.insert(child)) continue;
        ++result.states_explored;
        if ((child >> kArrangementBits) == goal) {
          result.ac = depth;
          return result;
        }
        if (result.states_explored > options.max_states) {
          throw Error(ErrorKind::BudgetExceeded,
                      "explored " + std::to_string(result.states_explored) +
                          " states without finding a strategy",
                      result.states_explored);
        }
        next.push_back(child);
      }
    }
    frontier.swap(next);
  }
  // Unreachable for connected graphs: the odd-even emulation always succeeds.
  throw Error(ErrorKind::Disconnected, "search space exhausted without full acquaintance");
}

}  // namespace acq
