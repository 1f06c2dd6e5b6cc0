#pragma once

#include <cstdint>
#include <vector>

#include "stc/graph.hpp"

namespace stc {

/// Upper-triangle adjacency code of a labelled graph on at most 11 vertices:
/// bit k is pair k in the order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
using GraphCode = std::uint64_t;

inline constexpr std::size_t kMaxEnumerationVertices = 11;

GraphCode graph_code(const Graph& g);
Graph graph_from_code(std::size_t n, GraphCode code);

/// Isomorphism-invariant code: the minimum code over all labellings reached by
/// colour refinement plus individualisation. Two graphs get the same code iff
/// they are isomorphic.
GraphCode canonical_code(const Graph& g);

/// Every connected graph on exactly n vertices, one per isomorphism class,
/// in canonical labelling and sorted by canonical code. Built by attaching a
/// new vertex to each connected graph on n-1 vertices (every connected graph
/// has a non-cut vertex). Requires n <= kMaxEnumerationVertices.
std::vector<Graph> connected_graphs(std::size_t n);

/// The same classes as canonical codes, sorted; 8 bytes per graph.
std::vector<GraphCode> connected_graph_codes(std::size_t n);

/// Union of connected_graphs(k) for k = 1..max_n.
std::vector<Graph> connected_graphs_up_to(std::size_t max_n);

}  // namespace stc
