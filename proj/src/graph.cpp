#include "acq/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>

#include "acq/error.hpp"

namespace acq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidMatching: return "InvalidMatching";
    case ErrorKind::ColorOverflow: return "ColorOverflow";
    case ErrorKind::ContourInvariant: return "ContourInvariant";
    case ErrorKind::DegenerateAdjacent: return "DegenerateAdjacent";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") references a vertex >= " + std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
    }
    edges.emplace_back(a, b);
  }
  return build(n, edges);
}

Graph Graph::build(std::size_t n, std::span<const Edge> input) {
  Graph g;
  g.edges_.assign(input.begin(), input.end());
  for (const Edge& e : g.edges_) {
    if (e.v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge endpoint " + std::to_string(e.v) + " >= " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= size() || b >= size()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "star") return Family::Star;
  if (name == "barbell") return Family::Barbell;
  throw Error(ErrorKind::ParseError, "unknown graph family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::Barbell: return "barbell";
  }
  return "unknown";
}

namespace {

void add_clique(std::vector<Edge>& edges, Vertex first, Vertex last) {
  for (Vertex a = first; a < last; ++a) {
    for (Vertex b = a + 1; b < last; ++b) edges.emplace_back(a, b);
  }
}

}  // namespace

Graph make_family(Family kind, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::TooSmall, "graph families need n >= 1");
  const auto nv = static_cast<Vertex>(n);
  std::vector<Edge> edges;
  switch (kind) {
    case Family::Path:
      for (Vertex v = 0; v + 1 < nv; ++v) edges.emplace_back(v, v + 1);
      break;
    case Family::Cycle:
      if (n < 3) throw Error(ErrorKind::TooSmall, "cycle needs n >= 3");
      for (Vertex v = 0; v + 1 < nv; ++v) edges.emplace_back(v, v + 1);
      edges.emplace_back(0, nv - 1);
      break;
    case Family::Complete:
      add_clique(edges, 0, nv);
      break;
    case Family::Star:
      for (Vertex v = 1; v < nv; ++v) edges.emplace_back(0, v);
      break;
    case Family::Barbell: {
      const Vertex big = (nv + 1) / 2;
      add_clique(edges, 0, big);
      add_clique(edges, big, nv);
      if (big < nv) edges.emplace_back(big - 1, big);
      break;
    }
  }
  return Graph::build(n, edges);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.size();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_matching(const Graph& g, std::span<const Edge> m) {
  std::vector<Vertex> used;
  used.reserve(2 * m.size());
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v)) return false;
    used.push_back(e.u);
    used.push_back(e.v);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

TreePolicy parse_tree_policy(std::string_view name) {
  if (name == "dfs") return TreePolicy::Dfs;
  if (name == "degree_greedy" || name == "degree-greedy") return TreePolicy::DegreeGreedy;
  throw Error(ErrorKind::ParseError, "unknown tree policy '" + std::string(name) + "'");
}

std::string_view to_string(TreePolicy policy) {
  return policy == TreePolicy::Dfs ? "dfs" : "degree_greedy";
}

std::size_t SpanningTree::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < size(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph SpanningTree::as_graph() const { return Graph::build(size(), edges); }

namespace {

SpanningTree empty_tree(std::size_t n, Vertex root) {
  SpanningTree t;
  t.root = root;
  t.parent.assign(n, root);
  t.level.assign(n, 0);
  t.children.assign(n, {});
  return t;
}

void attach(SpanningTree& t, Vertex parent, Vertex child) {
  t.parent[child] = parent;
  t.level[child] = t.level[parent] + 1;
  t.children[parent].push_back(child);
  t.edges.emplace_back(parent, child);
}

void finish(SpanningTree& t) {
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  std::sort(t.edges.begin(), t.edges.end());
}

SpanningTree dfs_tree(const Graph& g, Vertex root) {
  const std::size_t n = g.size();
  SpanningTree t = empty_tree(n, root);
  std::vector<char> seen(n, 0);
  // Stack of (vertex, next neighbor index) emulating recursive DFS.
  std::vector<std::pair<Vertex, std::size_t>> stack{{root, 0}};
  seen[root] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nbrs = g.neighbors(v);
    while (next < nbrs.size() && seen[nbrs[next]]) ++next;
    if (next == nbrs.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex w = nbrs[next++];
    seen[w] = 1;
    attach(t, v, w);
    stack.emplace_back(w, 0);
  }
  return t;
}

SpanningTree greedy_tree(const Graph& g, Vertex root) {
  const std::size_t n = g.size();
  SpanningTree t = empty_tree(n, root);
  std::vector<char> in_tree(n, 0);
  std::vector<std::size_t> tree_degree(n, 0);
  // Tree vertices that may still have outside neighbors, keyed by (degree, id).
  std::set<std::pair<std::size_t, Vertex>> candidates{{0, root}};
  in_tree[root] = 1;
  while (!candidates.empty()) {
    const auto [deg, v] = *candidates.begin();
    Vertex outside = 0;
    bool found = false;
    for (Vertex w : g.neighbors(v)) {
      if (!in_tree[w]) {
        outside = w;
        found = true;
        break;
      }
    }
    candidates.erase(candidates.begin());
    if (!found) continue;
    in_tree[outside] = 1;
    attach(t, v, outside);
    tree_degree[v] = deg + 1;
    tree_degree[outside] = 1;
    candidates.emplace(tree_degree[v], v);
    candidates.emplace(1, outside);
  }
  return t;
}

}  // namespace

SpanningTree spanning_tree(const Graph& g, Vertex root, TreePolicy policy) {
  if (root >= g.size()) {
    throw Error(ErrorKind::VertexOutOfRange, "root " + std::to_string(root) + " out of range");
  }
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph is not connected");
  SpanningTree t = policy == TreePolicy::Dfs ? dfs_tree(g, root) : greedy_tree(g, root);
  finish(t);
  return t;
}

bool validate_spanning_tree(const Graph& g, const SpanningTree& t) {
  const std::size_t n = g.size();
  if (t.size() != n || t.level.size() != n || t.children.size() != n) return false;
  if (n == 0) return t.edges.empty();
  if (t.root >= n || t.parent[t.root] != t.root || t.level[t.root] != 0) return false;
  if (t.edges.size() != n - 1) return false;
  std::set<Edge> from_parents;
  for (Vertex v = 0; v < n; ++v) {
    if (v == t.root) continue;
    const Vertex p = t.parent[v];
    if (p >= n || p == v || !g.has_edge(p, v)) return false;
    if (t.level[v] != t.level[p] + 1) return false;
    from_parents.emplace(p, v);
  }
  if (!std::equal(from_parents.begin(), from_parents.end(), t.edges.begin(), t.edges.end())) {
    return false;
  }
  // Levels strictly increase along parent links, so following parents from any
  // vertex terminates at the root: the tree is connected and acyclic.
  std::vector<std::size_t> child_count(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex c : t.children[v]) {
      if (c >= n || t.parent[c] != v || c == t.root) return false;
      ++child_count[v];
    }
  }
  std::size_t total = 0;
  for (auto c : child_count) total += c;
  return total == n - 1;
}

}  // namespace acq
