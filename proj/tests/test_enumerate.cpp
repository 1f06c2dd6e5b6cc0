#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stc/enumerate.hpp"

using namespace stc;

TEST_CASE("connected graph counts match the known sequence") {
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(connected_graphs(n).size() == expected[n]);
}

TEST_CASE("enumerated graphs are connected, canonical and pairwise distinct") {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<GraphCode> codes;
    for (const Graph& g : connected_graphs(n)) {
      CHECK(oracle::connected(g));
      CHECK(canonical_code(g) == graph_code(g));
      codes.insert(graph_code(g));
    }
    CHECK(codes.size() == connected_graphs(n).size());
  }
}

TEST_CASE("canonical_code is invariant under relabeling") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 10);
    const Graph g = oracle::random_connected(n, uniform_unit(rng), rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    CHECK(canonical_code(oracle::relabel(g, perm)) == canonical_code(g));
  }
}

TEST_CASE("canonical_code separates non-isomorphic graphs with equal degree sequences") {
  // C6 versus two disjoint triangles; K3,3 versus the triangular prism.
  const Graph c6 = oracle::cycle(6);
  const Graph triangles(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_code(c6) != canonical_code(triangles));
  std::vector<Edge> k33;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 3; b < 6; ++b) k33.emplace_back(a, b);
  const Graph prism(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(canonical_code(Graph(6, k33)) != canonical_code(prism));
}

TEST_CASE("graph_code round trip") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 11);
    const Graph g = oracle::random_connected(n, 0.4, rng);
    CHECK(graph_from_code(n, graph_code(g)).edges() == g.edges());
  }
}
