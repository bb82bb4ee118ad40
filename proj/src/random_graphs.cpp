#include "acq/random_graphs.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "acq/error.hpp"

namespace acq {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix(splitmix(splitmix(seed) ^ stream) ^ index);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph tree_from_prufer(std::size_t n, std::span<const Vertex> sequence) {
  if (n < 2) {
    if (!sequence.empty()) throw Error(ErrorKind::TooSmall, "Prüfer sequence too long");
    return Graph::build(n, std::span<const Edge>{});
  }
  if (sequence.size() != n - 2) {
    throw Error(ErrorKind::TooSmall, "Prüfer sequence must have length n-2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    if (v >= n) throw Error(ErrorKind::VertexOutOfRange, "Prüfer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph::build(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> sequence(n >= 2 ? n - 2 : 0);
  for (auto& v : sequence) v = static_cast<Vertex>(uniform_below(rng, n));
  return tree_from_prufer(n, sequence);
}

Graph random_connected(std::size_t n, std::size_t extra_edges, std::uint64_t seed) {
  const Graph tree = random_tree(n, seed);
  std::vector<Edge> edges = tree.edges();
  const std::size_t max_edges = n * (n - 1) / 2;
  extra_edges = std::min(extra_edges, max_edges - edges.size());
  const std::size_t target = edges.size() + extra_edges;
  std::set<Edge> present(edges.begin(), edges.end());
  Rng rng(derive_seed(seed, 1));
  while (edges.size() < target) {
    const auto a = static_cast<Vertex>(uniform_below(rng, n));
    const auto b = static_cast<Vertex>(uniform_below(rng, n));
    if (a != b && present.emplace(a, b).second) edges.emplace_back(a, b);
  }
  return Graph::build(n, edges);
}

Graph gnp_giant_component(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "G(n,p) needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (uniform_unit(rng) < p) edges.emplace_back(a, b);
    }
  }
  const Graph full = Graph::build(n, edges);

  std::vector<std::size_t> component(n, n);
  std::size_t best = 0, best_size = 0, count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (component[s] != n) continue;
    std::size_t size = 0;
    std::vector<Vertex> stack{s};
    component[s] = count;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : full.neighbors(v)) {
        if (component[w] == n) {
          component[w] = count;
          stack.push_back(w);
        }
      }
    }
    if (size > best_size) {
      best_size = size;
      best = count;
    }
    ++count;
  }

  std::vector<Vertex> relabel(n, 0);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (component[v] == best) relabel[v] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : full.edges()) {
    if (component[e.u] == best) kept.emplace_back(relabel[e.u], relabel[e.v]);
  }
  return Graph::build(best_size, kept);
}

}  // namespace acq
