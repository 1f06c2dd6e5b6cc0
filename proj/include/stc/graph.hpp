#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stc {

using Vertex = int;

/// Bitmask over the vertices of a graph with at most 64 vertices.
using Mask = std::uint64_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts and validates; throws VertexOutOfRange or InvalidParams on duplicates.
  VertexSet(std::vector<Vertex> ids, std::size_t host_n);
  static VertexSet from_mask(Mask mask);
  static VertexSet all(std::size_t n);

  std::span<const Vertex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  /// Requires every member < 64.
  Mask to_mask() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Throws SelfLoop, DuplicateEdge or VertexOutOfRange.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  /// All edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  /// Neighborhood bitmasks; only available when n <= 64.
  bool has_masks() const noexcept { return adj_.size() <= 64; }
  Mask mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }
  std::span<const Mask> masks() const noexcept { return masks_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Mask> masks_;
  std::size_t m_ = 0;
};

struct Cut {
  VertexSet side_s;
  std::vector<Edge> crossing_edges;  // E(S, V \ S), normalized and sorted
  std::size_t width() const noexcept { return crossing_edges.size(); }
};

struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> id in the parent graph
};

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// Components sorted internally and ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
/// Throws MissingEdge if any edge of f is absent from g.
Graph remove_edges(const Graph& g, std::span<const Edge> f);
std::size_t max_degree(const Graph& g);

/// Builds the cut (S, V \ S) with its crossing edges listed as (s, outside).
Cut make_cut(const Graph& g, const VertexSet& s);
/// e(S, V \ S) for a bitmask S; requires n <= 64.
std::size_t cut_width(const Graph& g, Mask s);

inline int popcount(Mask m) noexcept { return __builtin_popcountll(m); }
inline Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

}  // namespace stc
