#include <doctest.h>

#include "oracles.hpp"
#include "stc/errors.hpp"
#include "stc/spantree.hpp"

using namespace stc;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an stc::Error");
  return ErrorCode::InternalError;
}

SpanningTree tree_of(std::size_t n, std::vector<Edge> e) { return SpanningTree(n, std::move(e)); }

SpanningTree path_tree(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return tree_of(n, e);
}

}  // namespace

TEST_CASE("tree_congestion examples") {
  const CongestionReport p3 = tree_congestion(oracle::path(3), path_tree(3));
  CHECK(p3.max_congestion == 1);
  for (const auto& [e, c] : p3.per_edge) CHECK(c == 1);

  const CongestionReport c4 = tree_congestion(oracle::cycle(4), path_tree(4));
  CHECK(c4.max_congestion == 2);
  for (const auto& [e, c] : c4.per_edge) CHECK(c == 2);

  const SpanningTree star = tree_of(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}});
  const CongestionReport k5 = tree_congestion(oracle::complete(5), star);
  CHECK(k5.max_congestion == 4);
  for (const auto& [e, c] : k5.per_edge) CHECK(c == 4);
  CHECK(k5 == tree_congestion_naive(oracle::complete(5), star));
  CHECK(k5.argmax_edge == Edge(0, 4));
}

TEST_CASE("single vertex tree has congestion 0") {
  const CongestionReport r = tree_congestion(Graph(1, {}), tree_of(1, {}));
  CHECK(r.max_congestion == 0);
  CHECK(r.per_edge.empty());
  CHECK_FALSE(r.argmax_edge.has_value());
}

TEST_CASE("tree validation errors") {
  CHECK(code_of([] { tree_of(3, {{0, 1}}); }) == ErrorCode::NotSpanningTree);
  CHECK(code_of([] { tree_of(3, {{0, 1}, {0, 1}}); }) == ErrorCode::NotSpanningTree);
  CHECK(code_of([] { tree_of(4, {{0, 1}, {1, 2}, {0, 2}}); }) == ErrorCode::NotSpanningTree);
  CHECK(code_of([] { tree_congestion(oracle::path(3), tree_of(3, {{0, 1}, {0, 2}})); }) ==
        ErrorCode::TreeEdgeNotInGraph);
  CHECK(code_of([] { tree_congestion(Graph(3, std::vector<Edge>{{0, 1}}), path_tree(3)); }) ==
        ErrorCode::DisconnectedHost);
  CHECK(code_of([] { tree_congestion_naive(Graph(3, std::vector<Edge>{{0, 1}}), path_tree(3)); }) ==
        ErrorCode::DisconnectedHost);
}

TEST_CASE("dual-method agreement and brute-force agreement on random pairs") {
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 40);
    const Graph g = oracle::random_connected(n, uniform_unit(rng) * 0.3, rng);
    const auto edges = oracle::random_spanning_tree(g, rng);
    const SpanningTree t(n, edges);
    const CongestionReport fast = tree_congestion(g, t);
    CHECK(fast == tree_congestion_naive(g, t));
    if (n <= 40) {
      const auto brute = oracle::congestions(g, t.edges());
      for (std::size_t k = 0; k < brute.size(); ++k) CHECK(fast.per_edge[k].second == brute[k]);
    }
    // averaging bound and positivity
    if (n >= 2) {
      CHECK(fast.max_congestion * (n - 1) >= g.m());
      for (const auto& [e, c] : fast.per_edge) CHECK(c >= 1);
    }
  }
}

TEST_CASE("spanning_tree_count examples and closed forms") {
  CHECK(spanning_tree_count(oracle::path(6)) == 1);
  CHECK(spanning_tree_count(oracle::star(4)) == 1);
  CHECK(spanning_tree_count(oracle::cycle(5)) == 5);
  CHECK(spanning_tree_count(oracle::complete(4)) == 16);
  CHECK(oracle::all_spanning_trees(oracle::complete(4)).size() == 16);
  CHECK(spanning_tree_count(Graph(1, {})) == 1);
  CHECK(spanning_tree_count(Graph(3, std::vector<Edge>{{0, 1}})) == 0);
  for (std::size_t n = 3; n <= 8; ++n) {
    BigInt cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    CHECK(spanning_tree_count(oracle::complete(n)) == cayley);
  }
}

TEST_CASE("spanning_tree_count agrees with explicit enumeration") {
  Rng rng(55);
  for (int i = 0; i < 60; ++i) {
    const Graph g = oracle::random_connected(2 + uniform_below(rng, 6), uniform_unit(rng), rng);
    CHECK(spanning_tree_count(g) == oracle::all_spanning_trees(g).size());
  }
}

TEST_CASE("exact_stc examples") {
  for (std::size_t n = 2; n <= 9; ++n) CHECK(exact_stc(oracle::path(n)).value == 1);
  for (std::size_t n = 3; n <= 10; ++n) CHECK(exact_stc(oracle::cycle(n)).value == 2);
  const ExactStcResult k4 = exact_stc(oracle::complete(4));
  CHECK(k4.value == 3);
  CHECK(k4.tree_count == 16);
  CHECK(tree_congestion(oracle::complete(4), k4.witness).max_congestion == 3);
  CHECK(exact_stc(oracle::complete(5)).value == 4);
  CHECK(exact_stc(Graph(1, {})).value == 0);
}

TEST_CASE("exact_stc errors") {
  const ErrorCode budget = code_of([] { exact_stc(oracle::complete(9), 1000); });
  CHECK(budget == ErrorCode::BudgetExceeded);
  try {
    exact_stc(oracle::complete(9), 1000);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("4782969") != std::string::npos);
  }
  CHECK(code_of([] { exact_stc(Graph(3, std::vector<Edge>{{0, 1}})); }) == ErrorCode::DisconnectedInput);
}

TEST_CASE("exact_stc matches brute force over all spanning trees") {
  Rng rng(202);
  for (int i = 0; i < 80; ++i) {
    const std::size_t n = 2 + uniform_below(rng, 6);
    const Graph g = oracle::random_connected(n, uniform_unit(rng), rng);
    const ExactStcResult r = exact_stc(g);
    CHECK(r.value == oracle::stc(g));
    CHECK(oracle::max_congestion(g, r.witness.edges()) == r.value);
    CHECK((r.value == 1) == (g.m() == n - 1));
  }
}

TEST_CASE("exact_stc is a lower bound for every tree and invariant under relabeling") {
  Rng rng(303);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 3 + uniform_below(rng, 7);
    const Graph g = oracle::random_connected(n, 0.5 * uniform_unit(rng), rng);
    const std::size_t value = exact_stc(g).value;
    for (int k = 0; k < 5; ++k)
      CHECK(value <= tree_congestion(g, SpanningTree(n, oracle::random_spanning_tree(g, rng))).max_congestion);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    CHECK(exact_stc(oracle::relabel(g, perm)).value == value);
  }
}

TEST_CASE("marked_centroid examples") {
  CHECK(marked_centroid(path_tree(3), VertexSet::all(3)) == 1);
  const SpanningTree star = tree_of(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(marked_centroid(star, VertexSet::all(5)) == 0);

  // P5 with marks {0,4}: every vertex is valid (an endpoint leaves one
  // component holding a single mark), so the walk stops at its start.
  const SpanningTree p5 = path_tree(5);
  const VertexSet ends({0, 4}, 5);
  for (Vertex z = 0; z < 5; ++z)
    for (std::size_t c : marks_per_component(p5, z, ends)) CHECK(c <= 1);
  const Vertex z = marked_centroid(p5, ends);
  CHECK(z == 0);

  CHECK(code_of([&] { marked_centroid(p5, VertexSet()); }) == ErrorCode::EmptyMarkSet);
}

TEST_CASE("marked_centroid leaves at most floor(|marked|/2) marks per component") {
  Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + uniform_below(rng, 30);
    const Graph g = oracle::random_connected(n, 0.1, rng);
    const SpanningTree t(n, oracle::random_spanning_tree(g, rng));
    std::vector<Vertex> marks;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
      if (uniform_unit(rng) < 0.4) marks.push_back(v);
    if (marks.empty()) marks.push_back(static_cast<Vertex>(uniform_below(rng, n)));
    const VertexSet marked(marks, n);
    const Vertex z = marked_centroid(t, marked);
    for (std::size_t c : marks_per_component(t, z, marked)) CHECK(c <= marked.size() / 2);
    // Jordan: all vertices marked, every component has at most floor(n/2) vertices.
    const Vertex centroid = marked_centroid(t, VertexSet::all(n));
    for (std::size_t c : marks_per_component(t, centroid, VertexSet::all(n))) CHECK(c <= n / 2);
  }
}

TEST_CASE("bfs_tree and serialize_tree") {
  const SpanningTree t = bfs_tree(oracle::cycle(4));
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(serialize_tree(t) == "0 1\n0 3\n1 2\n");
  CHECK(t.parent(0) == -1);
  CHECK(t.depth(2) == 2);
  CHECK(code_of([] { bfs_tree(Graph(2, {})); }) == ErrorCode::DisconnectedInput);
}
