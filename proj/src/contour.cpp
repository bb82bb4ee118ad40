#include "acq/contour.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "acq/error.hpp"

namespace acq {

Contour build_contour(const SpanningTree& tree) {
  Contour c;
  c.tree = tree;
  const std::size_t n = tree.size();
  if (n == 0) return c;
  c.positions.reserve(2 * n - 1);

  // Iterative Euler tour: record a vertex on entry and again after returning
  // from each child.
  std::vector<std::pair<Vertex, std::size_t>> stack{{tree.root, 0}};
  c.positions.push_back(tree.root);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < tree.children[v].size()) {
      const Vertex child = tree.children[v][next++];
      c.positions.push_back(child);
      stack.emplace_back(child, 0);
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) c.positions.push_back(stack.back().first);
  }
  // The closed tour ends back at the root; cut the closing step.
  if (n >= 2) c.positions.pop_back();
  return c;
}

Contour mark_positions(Contour contour) {
  const std::size_t n = contour.vertex_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> chosen(n, kUnset);
  for (std::size_t p = 0; p < contour.positions.size(); ++p) {
    const Vertex v = contour.positions[p];
    const bool even = contour.tree.level[v] % 2 == 0;
    if (!even || chosen[v] == kUnset) chosen[v] = p;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (chosen[v] == kUnset) {
      throw Error(ErrorKind::ContourInvariant,
                  "vertex " + std::to_string(v) + " never visited by the contour");
    }
  }
  std::sort(chosen.begin(), chosen.end());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (chosen[k + 1] - chosen[k] > kMaxMarkGap) {
      throw Error(ErrorKind::ContourInvariant,
                  "mark gap " + std::to_string(chosen[k + 1] - chosen[k]) + " between positions " +
                      std::to_string(chosen[k]) + " and " + std::to_string(chosen[k + 1]));
    }
  }
  contour.marks = std::move(chosen);
  return contour;
}

Contour marked_contour(const SpanningTree& tree) { return mark_positions(build_contour(tree)); }

std::vector<std::size_t> visit_counts(const Contour& contour) {
  std::vector<std::size_t> counts(contour.vertex_count(), 0);
  for (Vertex v : contour.positions) ++counts[v];
  return counts;
}

std::string contour_to_dot(const Contour& contour) {
  std::map<Edge, std::vector<std::size_t>> steps;
  for (std::size_t p = 0; p + 1 < contour.positions.size(); ++p) {
    steps[Edge(contour.positions[p], contour.positions[p + 1])].push_back(p);
  }
  std::vector<std::size_t> mark_of(contour.vertex_count(), 0);
  for (std::size_t k = 0; k < contour.marks.size(); ++k) {
    mark_of[contour.marked_vertex(k)] = contour.marks[k];
  }

  std::ostringstream out;
  out << "graph contour {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < contour.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (!contour.marks.empty()) {
      out << "\\nmark " << mark_of[v] << "\", style=filled, fillcolor=lightgoldenrod";
    } else {
      out << "\"";
    }
    out << "];\n";
  }
  for (const Edge& e : contour.tree.edges) {
    out << "  " << e.u << " -- " << e.v << " [label=\"";
    const auto it = steps.find(e);
    if (it != steps.end()) {
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        out << (i ? "," : "") << it->second[i] << "-" << it->second[i] + 1;
      }
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace acq
