#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stc/cuts.hpp"
#include "stc/graph.hpp"
#include "stc/rational.hpp"
#include "stc/spantree.hpp"

namespace stc {

/// One node t of the recursion: the vertex set V_t, the cut F_t of G[V_t],
/// and the congestion of the tree T_t built for G[V_t]. All ids are host ids.
struct DecompositionNode {
  VertexSet vertex_set;
  std::vector<Edge> cut_edges;        // empty at leaves
  std::vector<Edge> connector_edges;  // the edges of F_t joining the child trees
  std::vector<std::size_t> children;  // node ids
  std::size_t height = 0;             // 0 at leaves
  std::size_t depth = 0;              // root at 0
  std::size_t congestion = 0;         // c(G[V_t], T_t); 0 at leaves
};

/// Nodes in pre-order (children in order of their smallest vertex); root is node 0.
struct DecompositionTree {
  std::vector<DecompositionNode> nodes;
  OracleKind oracle = OracleKind::Exact;
  std::size_t root_height() const { return nodes.empty() ? 0 : nodes.front().height; }
};

struct Decomposition {
  SpanningTree tree;
  DecompositionTree trace;
};

/// smallest k with (3/2)^k >= n; 0 for n <= 1.
std::size_t log_three_halves_ceil(std::size_t n);

/// Divide and conquer: cut G[V_t] by a 2/3-balanced cut F, recurse on every
/// connected component of G[V_t] - F, then join the component trees with
/// edges of F scanned in sorted order (kept iff they join two different
/// partial trees). Sibling subproblems run as OpenMP tasks when `parallel`.
/// Throws DisconnectedInput or OracleFailure.
Decomposition cong_span_tree(const Graph& g, const CutOracle& oracle, bool parallel = true);

/// Structural invariants of a run: root covers V(G), leaves are singletons,
/// children partition their parent into connected pieces of G_t - F_t, each
/// at most balance_cap(|V_t|), heights are consistent, connectors lie in F_t,
/// and `tree` is exactly the union of the connector edges.
/// Throws VerificationFailed.
void verify_structure(const Decomposition& d, const Graph& g);

struct RecurrenceCheck {
  std::size_t node = 0;
  std::size_t congestion = 0;          // c(G_t, T_t), recomputed independently
  std::size_t max_child_congestion = 0;
  std::size_t cut_size = 0;            // |F_t|
  long long slack = 0;                 // max_child + |F_t| - congestion
};

/// c(G_t,T_t) <= max_i c(G_ti, T_ti) + |F_t| at every internal node, with each
/// congestion recomputed from g and the subtree's connector edges by the
/// naive counter. Throws VerificationFailed naming the first violating node.
std::vector<RecurrenceCheck> verify_recurrence(const DecompositionTree& d, const Graph& g);

struct GlobalBoundCheck {
  std::size_t congestion = 0;
  std::size_t height = 0;
  std::size_t hereditary_bisection = 0;
  std::size_t height_cap = 0;  // ceil(log_{3/2} n)
};

/// c(G,T) <= h(root) * hb(G) and h(root) <= ceil(log_{3/2} n). Needs an
/// exact-oracle run and n within the hb limit. Throws VerificationFailed.
GlobalBoundCheck verify_global_bound(const DecompositionTree& d, const Graph& g,
                                     std::size_t hb_limit = 12);

struct ApproximationRecord {
  std::size_t n = 0, m = 0, max_degree = 0;
  std::size_t congestion = 0;
  Rational denominator;       // STC(G), or a certified lower bound on it
  bool exact_denominator = false;
  std::string denominator_kind;  // "exact_stc" or a certificate kind
  Rational ratio;
  std::size_t height = 0;
  std::optional<std::size_t> hereditary_bisection;
};

/// Ratio of the produced congestion to STC(G) when the spanning-tree count is
/// within budget, otherwise to the best lower-bound certificate.
ApproximationRecord approximation_report(const Graph& g, const CutOracle& oracle,
                                         std::uint64_t stc_budget = kDefaultTreeBudget,
                                         std::size_t hb_limit = 12);

}  // namespace stc
