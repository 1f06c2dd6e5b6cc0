#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

using BigInt = boost::multiprecision::cpp_int;

/// A tree on host vertices 0..host_n-1, rooted at vertex 0 for traversal.
class SpanningTree {
 public:
  /// Throws NotSpanningTree unless `edges` has host_n - 1 edges forming a
  /// connected acyclic graph on all host vertices.
  SpanningTree(std::size_t host_n, std::vector<Edge> edges);

  std::size_t host_n() const noexcept { return parent_.size(); }
  /// Sorted tree edges.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Graph& as_graph() const noexcept { return tree_; }
  /// Parent in the rooting at 0; -1 for the root.
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  std::size_t depth(Vertex v) const { return depth_[static_cast<std::size_t>(v)]; }
  /// Vertices in BFS order from the root.
  const std::vector<Vertex>& bfs_order() const noexcept { return order_; }

 private:
  std::vector<Edge> edges_;
  Graph tree_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> order_;
};

struct CongestionReport {
  std::vector<std::pair<Edge, std::size_t>> per_edge;  // sorted by edge
  std::size_t max_congestion = 0;                      // 0 for the one-vertex tree
  std::optional<Edge> argmax_edge;                     // first maximum in edge order

  std::size_t congestion_of(const Edge& e) const;
  friend bool operator==(const CongestionReport&, const CongestionReport&) = default;
};

/// c(uv) = e(S_u, S_v) for every tree edge. Each graph edge adds one to every
/// tree edge on its tree path, accumulated with subtree sums.
/// Throws DisconnectedHost, NotSpanningTree or TreeEdgeNotInGraph.
CongestionReport tree_congestion(const Graph& g, const SpanningTree& t);

/// Reference implementation: split the tree at each edge and count crossings.
CongestionReport tree_congestion_naive(const Graph& g, const SpanningTree& t);

/// Matrix-tree theorem with fraction-free (Bareiss) elimination.
BigInt spanning_tree_count(const Graph& g);

struct ExactStcResult {
  std::size_t value = 0;
  SpanningTree witness;
  BigInt tree_count;
  std::size_t search_nodes = 0;
};

inline constexpr std::uint64_t kDefaultTreeBudget = 10'000'000;

/// Minimum congestion over all spanning trees by include/exclude branching on
/// frontier edges, pruned by a lower bound on the congestion any completion
/// of the partial tree must have. Throws DisconnectedInput, or BudgetExceeded
/// when the Kirchhoff count exceeds `budget`.
ExactStcResult exact_stc(const Graph& g, std::uint64_t budget = kDefaultTreeBudget);

/// Walk from vertex 0 towards the component holding a strict majority of the
/// marked vertices; stops at a vertex whose removal leaves every component
/// with at most floor(|marked| / 2) marks. Throws EmptyMarkSet.
Vertex marked_centroid(const SpanningTree& t, const VertexSet& marked);

/// Marked-vertex counts of the components of t minus z.
std::vector<std::size_t> marks_per_component(const SpanningTree& t, Vertex z, const VertexSet& marked);

/// Spanning tree from a BFS rooted at `root`; requires a connected graph.
SpanningTree bfs_tree(const Graph& g, Vertex root = 0);

std::string serialize_tree(const SpanningTree& t);

}  // namespace stc
