#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "acq/graph.hpp"

namespace acq {

// Closed depth-first walk around a rooted tree, cut open at the root.
//
// `positions[p]` is the tree vertex visited at walk position p; the walk has
// 2n-2 positions (n = 1 gives the single position [root]) and every step
// follows a tree edge. `marks` holds one walk position per vertex, sorted, with
// consecutive marks at most three steps apart.
struct Contour {
  std::vector<Vertex> positions;
  std::vector<std::size_t> marks;
  SpanningTree tree;

  std::size_t vertex_count() const { return tree.size(); }
  // Vertex held by the k-th marked position.
  Vertex marked_vertex(std::size_t k) const { return positions[marks[k]]; }
};

inline constexpr std::size_t kMaxMarkGap = 3;

// Walk from the root with children in ascending id; the final step back into
// the root is dropped. Marks are left empty.
Contour build_contour(const SpanningTree& tree);

// Marks the first occurrence of each even-level vertex and the last occurrence
// of each odd-level vertex. Throws ContourInvariant if the result is not a
// bijection or has a gap larger than kMaxMarkGap.
Contour mark_positions(Contour contour);

// build_contour followed by mark_positions.
Contour marked_contour(const SpanningTree& tree);

// Number of walk positions projecting to each vertex.
std::vector<std::size_t> visit_counts(const Contour& contour);

// Graphviz rendering of the tree: edges are labeled with the walk steps that
// cross them, marked positions are listed on the nodes.
std::string contour_to_dot(const Contour& contour);

}  // namespace acq
