#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace acq {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A set of vertex-disjoint edges swapped simultaneously in one round.
using Matching = std::vector<Edge>;

// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Normalizes the pair list: duplicates are merged, self-loops and
  // out-of-range endpoints are rejected.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.adjacency_.size() == b.adjacency_.size();
  }

 private:
  std::vector<Edge> edges_;                   // sorted, unique
  std::vector<std::vector<Vertex>> adjacency_;  // sorted per vertex
};

enum class Family { Path, Cycle, Complete, Star, Barbell };

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

// Canonically labeled standard graphs. Star is centered at 0; barbell puts the
// larger clique on {0..ceil(n/2)-1} with the bridge (ceil(n/2)-1, ceil(n/2)).
Graph make_family(Family kind, std::size_t n);

bool is_connected(const Graph& g);
std::size_t max_degree(const Graph& g);

// True iff every edge belongs to g and no two edges share an endpoint.
bool is_matching(const Graph& g, std::span<const Edge> m);

enum class TreePolicy { Dfs, DegreeGreedy };

TreePolicy parse_tree_policy(std::string_view name);
std::string_view to_string(TreePolicy policy);

struct SpanningTree {
  Vertex root = 0;
  std::vector<Vertex> parent;               // parent[root] == root
  std::vector<std::size_t> level;           // depth from root
  std::vector<std::vector<Vertex>> children;  // ascending ids
  std::vector<Edge> edges;                  // sorted, n-1 of them

  std::size_t size() const { return parent.size(); }
  std::size_t degree(Vertex v) const {
    return children[v].size() + (v == root ? 0 : 1);
  }
  std::size_t max_degree() const;
  Graph as_graph() const;
};

// dfs: depth-first, children explored in ascending id.
// degree_greedy: repeatedly attach the frontier edge whose tree-side endpoint
// has the smallest current tree degree (ties by smaller tree-side id, then
// smaller outside id). A heuristic for low-degree trees; no optimality claim.
SpanningTree spanning_tree(const Graph& g, Vertex root, TreePolicy policy);

// Checks every SpanningTree invariant against g. Returns false on violation.
bool validate_spanning_tree(const Graph& g, const SpanningTree& t);

}  // namespace acq
