#include <doctest.h>

#include <vector>

#include "acq/error.hpp"
#include "acq/graph.hpp"
#include "support/corpus.hpp"
#include "support/errors.hpp"

using namespace acq;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

}  // namespace

TEST_CASE("build_graph normalizes and validates") {
  const Pairs p3{{0, 1}, {1, 2}};
  const Graph g = Graph::build(3, p3);
  CHECK(g == make_family(Family::Path, 3));
  CHECK(g.edge_count() == 2);

  const Pairs dup{{0, 1}, {1, 0}, {1, 2}, {2, 3}};
  const Graph p4 = Graph::build(4, dup);
  CHECK(p4.edge_count() == 3);
  CHECK(p4 == make_family(Family::Path, 4));

  const Pairs loop{{0, 0}};
  CHECK(testing::error_kind([&] { Graph::build(3, loop); }) == ErrorKind::SelfLoop);
  const Pairs out{{0, 3}};
  CHECK(testing::error_kind([&] { Graph::build(3, out); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("adjacency is symmetric and sorted") {
  const Graph g = make_family(Family::Barbell, 7);
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto nbrs = g.neighbors(v);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (Vertex w : nbrs) CHECK(g.has_edge(w, v));
  }
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.size(); ++v) degree_sum += g.degree(v);
  CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("families") {
  SUBCASE("barbell(5) is K3 + K2 + bridge (2,3)") {
    const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}};
    CHECK(make_family(Family::Barbell, 5).edges() == expected);
  }
  SUBCASE("barbell(4) is the path 0-1-2-3") {
    CHECK(make_family(Family::Barbell, 4) == make_family(Family::Path, 4));
  }
  SUBCASE("barbell(7) has cliques of 4 and 3") {
    const Graph g = make_family(Family::Barbell, 7);
    CHECK(g.edge_count() == 6 + 3 + 1);
    CHECK(g.has_edge(3, 4));
    CHECK_FALSE(g.has_edge(2, 4));
  }
  SUBCASE("complete(3) is a triangle") {
    const std::vector<Edge> expected{{0, 1}, {0, 2}, {1, 2}};
    CHECK(make_family(Family::Complete, 3).edges() == expected);
  }
  SUBCASE("cycle needs three vertices") {
    CHECK(testing::error_kind([] { make_family(Family::Cycle, 2); }) == ErrorKind::TooSmall);
    CHECK(make_family(Family::Cycle, 3).edge_count() == 3);
  }
  SUBCASE("paths") {
    for (std::size_t n = 1; n <= 40; ++n) {
      const Graph g = make_family(Family::Path, n);
      CHECK(g.edge_count() == n - 1);
      CHECK(max_degree(g) <= 2);
    }
  }
  CHECK(parse_family("star") == Family::Star);
  CHECK(testing::error_kind([] { parse_family("hypercube"); }) == ErrorKind::ParseError);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(make_family(Family::Path, 4)));
  const Pairs split{{0, 1}, {2, 3}};
  CHECK_FALSE(is_connected(Graph::build(4, split)));
  CHECK(is_connected(Graph::build(1, Pairs{})));
  CHECK_FALSE(is_connected(Graph::build(2, Pairs{})));
}

TEST_CASE("max_degree") {
  CHECK(max_degree(make_family(Family::Star, 4)) == 3);
  CHECK(max_degree(make_family(Family::Path, 5)) == 2);
  // Bridge endpoint of barbell(6): two clique neighbours plus the bridge.
  CHECK(max_degree(make_family(Family::Barbell, 6)) == 3);
  CHECK(max_degree(Graph::build(3, Pairs{})) == 0);
}

TEST_CASE("is_matching") {
  const Graph p4 = make_family(Family::Path, 4);
  CHECK(is_matching(p4, std::vector<Edge>{{0, 1}, {2, 3}}));
  CHECK_FALSE(is_matching(p4, std::vector<Edge>{{0, 1}, {1, 2}}));
  CHECK_FALSE(is_matching(p4, std::vector<Edge>{{0, 2}}));
  CHECK(is_matching(p4, std::vector<Edge>{}));
  CHECK_FALSE(is_matching(p4, std::vector<Edge>{{0, 1}, {0, 1}}));
}

TEST_CASE("spanning_tree examples") {
  SUBCASE("dfs on P4 is the path itself") {
    const SpanningTree t = spanning_tree(make_family(Family::Path, 4), 0, TreePolicy::Dfs);
    CHECK(t.parent == std::vector<Vertex>{0, 0, 1, 2});
    CHECK(t.level == std::vector<std::size_t>{0, 1, 2, 3});
  }
  SUBCASE("dfs on K3 follows ascending ids") {
    const SpanningTree t = spanning_tree(make_family(Family::Complete, 3), 0, TreePolicy::Dfs);
    CHECK(t.edges == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(t.level == std::vector<std::size_t>{0, 1, 2});
  }
  SUBCASE("degree_greedy on K4 spreads attachments into a path") {
    // Hand run: attach (0,1); 0 and 1 tie at degree 1, smaller id 0 takes 2;
    // then 1 (degree 1) takes 3. Tree 3-1-0-2.
    const SpanningTree t =
        spanning_tree(make_family(Family::Complete, 4), 0, TreePolicy::DegreeGreedy);
    CHECK(t.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
    CHECK(t.max_degree() == 2);
  }
  SUBCASE("disconnected input") {
    const Pairs split{{0, 1}, {2, 3}};
    CHECK(testing::error_kind([&] { spanning_tree(Graph::build(4, split), 0, TreePolicy::Dfs); }) ==
          ErrorKind::Disconnected);
  }
}

TEST_CASE("spanning trees satisfy their invariants on every small connected graph") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      for (Vertex root = 0; root < n; ++root) {
        for (TreePolicy policy : {TreePolicy::Dfs, TreePolicy::DegreeGreedy}) {
          const SpanningTree t = spanning_tree(g, root, policy);
          REQUIRE(validate_spanning_tree(g, t));
          CHECK(is_connected(t.as_graph()));
        }
      }
    }
  }
  for (const Graph& g : testing::random_connected_corpus(30, 99)) {
    for (TreePolicy policy : {TreePolicy::Dfs, TreePolicy::DegreeGreedy}) {
      CHECK(validate_spanning_tree(g, spanning_tree(g, 0, policy)));
    }
  }
}

TEST_CASE("validate_spanning_tree rejects broken trees") {
  const Graph g = make_family(Family::Cycle, 4);
  SpanningTree t = spanning_tree(g, 0, TreePolicy::Dfs);
  SpanningTree bad_level = t;
  bad_level.level[2] = 5;
  CHECK_FALSE(validate_spanning_tree(g, bad_level));
  SpanningTree missing = t;
  missing.edges.pop_back();
  CHECK_FALSE(validate_spanning_tree(g, missing));
}

TEST_CASE("degree_greedy is never worse than dfs on complete graphs") {
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph k = make_family(Family::Complete, n);
    const auto greedy = spanning_tree(k, 0, TreePolicy::DegreeGreedy).max_degree();
    const auto dfs = spanning_tree(k, 0, TreePolicy::Dfs).max_degree();
    CHECK(greedy <= dfs);
  }
}
