#include "stc/spantree.hpp"

#include <algorithm>

#include "stc/errors.hpp"

namespace stc {

// ---------------------------------------------------------------------------
// SpanningTree

SpanningTree::SpanningTree(std::size_t host_n, std::vector<Edge> edges) : edges_(std::move(edges)) {
  if (host_n == 0) throw Error(ErrorCode::NotSpanningTree, "tree on zero vertices");
  if (edges_.size() + 1 != host_n)
    throw Error(ErrorCode::NotSpanningTree, std::to_string(edges_.size()) + " edges for " +
                                                std::to_string(host_n) + " vertices");
  std::sort(edges_.begin(), edges_.end());
  try {
    tree_ = Graph(host_n, edges_);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotSpanningTree, e.what());
  }
  parent_.assign(host_n, -1);
  depth_.assign(host_n, 0);
  std::vector<bool> seen(host_n, false);
  order_.reserve(host_n);
  order_.push_back(0);
  seen[0] = true;
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const Vertex v = order_[head];
    for (Vertex w : tree_.neighbors(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (seen[wi]) continue;
      seen[wi] = true;
      parent_[wi] = v;
      depth_[wi] = depth_[static_cast<std::size_t>(v)] + 1;
      order_.push_back(w);
    }
  }
  if (order_.size() != host_n)
    throw Error(ErrorCode::NotSpanningTree, "edges do not connect all vertices (cycle present)");
}

SpanningTree bfs_tree(const Graph& g, Vertex root) {
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> queue{root};
  std::vector<Edge> edges;
  seen[static_cast<std::size_t>(root)] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (Vertex w : g.neighbors(queue[head]))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        edges.emplace_back(queue[head], w);
        queue.push_back(w);
      }
  if (queue.size() != g.n()) throw Error(ErrorCode::DisconnectedInput, "graph is not connected");
  return SpanningTree(g.n(), std::move(edges));
}

std::string serialize_tree(const SpanningTree& t) {
  std::string out;
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Congestion

std::size_t CongestionReport::congestion_of(const Edge& e) const {
  auto it = std::lower_bound(per_edge.begin(), per_edge.end(), e,
                             [](const auto& entry, const Edge& key) { return entry.first < key; });
  if (it == per_edge.end() || it->first != e)
    throw Error(ErrorCode::TreeEdgeNotInGraph, "not a tree edge");
  return it->second;
}

namespace {

void check_tree_in_graph(const Graph& g, const SpanningTree& t) {
  if (t.host_n() != g.n())
    throw Error(ErrorCode::NotSpanningTree, "tree spans " + std::to_string(t.host_n()) +
                                                " vertices, graph has " + std::to_string(g.n()));
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedHost, "host graph is not connected");
  for (const Edge& e : t.edges())
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorCode::TreeEdgeNotInGraph, std::to_string(e.u) + " " + std::to_string(e.v));
}

CongestionReport finish_report(std::vector<std::pair<Edge, std::size_t>> per_edge) {
  std::sort(per_edge.begin(), per_edge.end());
  CongestionReport report;
  report.per_edge = std::move(per_edge);
  for (const auto& [edge, c] : report.per_edge)
    if (!report.argmax_edge || c > report.max_congestion) {
      report.max_congestion = c;
      report.argmax_edge = edge;
    }
  return report;
}

}  // namespace

CongestionReport tree_congestion(const Graph& g, const SpanningTree& t) {
  check_tree_in_graph(g, t);
  const std::size_t n = g.n();
  std::vector<long long> acc(n, 0);
  for (const Edge& e : g.edges()) {
    Vertex a = e.u, b = e.v;
    acc[static_cast<std::size_t>(a)] += 1;
    acc[static_cast<std::size_t>(b)] += 1;
    while (t.depth(a) > t.depth(b)) a = t.parent(a);
    while (t.depth(b) > t.depth(a)) b = t.parent(b);
    while (a != b) {
      a = t.parent(a);
      b = t.parent(b);
    }
    acc[static_cast<std::size_t>(a)] -= 2;
  }
  std::vector<std::pair<Edge, std::size_t>> per_edge;
  per_edge.reserve(n > 0 ? n - 1 : 0);
  const auto& order = t.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = t.parent(v);
    if (p < 0) continue;
    per_edge.emplace_back(Edge(v, p), static_cast<std::size_t>(acc[static_cast<std::size_t>(v)]));
    acc[static_cast<std::size_t>(p)] += acc[static_cast<std::size_t>(v)];
  }
  return finish_report(std::move(per_edge));
}

CongestionReport tree_congestion_naive(const Graph& g, const SpanningTree& t) {
  check_tree_in_graph(g, t);
  const Graph& tree = t.as_graph();
  const auto tree_edges = t.edges();
  std::vector<std::pair<Edge, std::size_t>> per_edge(tree_edges.size());
  const auto all_edges = g.edges();
#pragma omp parallel for schedule(dynamic, 4) if (tree_edges.size() > 256)
  for (std::size_t k = 0; k < tree_edges.size(); ++k) {
    const Edge cut = tree_edges[k];
    // S_u: vertices reachable from cut.u without using the cut edge.
    std::vector<bool> side(g.n(), false);
    std::vector<Vertex> stack{cut.u};
    side[static_cast<std::size_t>(cut.u)] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : tree.neighbors(v)) {
        if (Edge(v, w) == cut || side[static_cast<std::size_t>(w)]) continue;
        side[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
    std::size_t crossing = 0;
    for (const Edge& e : all_edges)
      if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) ++crossing;
    per_edge[k] = {cut, crossing};
  }
  return finish_report(std::move(per_edge));
}

// ---------------------------------------------------------------------------
// Kirchhoff count

BigInt spanning_tree_count(const Graph& g) {
  const std::size_t n = g.n();
  if (n <= 1) return BigInt(n);
  const std::size_t k = n - 1;  // Laplacian with row/column 0 removed
  std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k, 0));
  for (std::size_t v = 1; v < n; ++v) {
    a[v - 1][v - 1] = static_cast<long long>(g.degree(static_cast<Vertex>(v)));
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      if (w != 0) a[v - 1][static_cast<std::size_t>(w) - 1] = -1;
  }
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t p = 0; p < k; ++p) {
    if (a[p][p] == 0) {
      std::size_t swap_row = p + 1;
      while (swap_row < k && a[swap_row][p] == 0) ++swap_row;
      if (swap_row == k) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  BigInt det = a[k - 1][k - 1];
  return sign > 0 ? det : BigInt(-det);
}

// ---------------------------------------------------------------------------
// Marked centroid

std::vector<std::size_t> marks_per_component(const SpanningTree& t, Vertex z, const VertexSet& marked) {
  const Graph& tree = t.as_graph();
  std::vector<std::size_t> counts;
  std::vector<bool> seen(t.host_n(), false);
  seen[static_cast<std::size_t>(z)] = true;
  for (Vertex start : tree.neighbors(z)) {
    std::size_t count = 0;
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      if (marked.contains(v)) ++count;
      for (Vertex w : tree.neighbors(v))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
    }
    counts.push_back(count);
  }
  return counts;
}

Vertex marked_centroid(const SpanningTree& t, const VertexSet& marked) {
  if (marked.empty()) throw Error(ErrorCode::EmptyMarkSet, "no marked vertices");
  const std::size_t total = marked.size();
  Vertex current = 0;
  Vertex previous = -1;
  // Neighbours are visited in ascending id order, so the first majority
  // component found is the one through the smallest neighbour; only one
  // component can hold a strict majority anyway.
  for (std::size_t steps = 0; steps <= t.host_n(); ++steps) {
    const auto counts = marks_per_component(t, current, marked);
    const auto nbrs = t.as_graph().neighbors(current);
    Vertex next = -1;
    for (std::size_t i = 0; i < counts.size(); ++i)
      if (2 * counts[i] > total) {
        next = nbrs[i];
        break;
      }
    if (next < 0) return current;
    if (next == previous) throw Error(ErrorCode::InternalError, "centroid walk reversed");
    previous = current;
    current = next;
  }
  throw Error(ErrorCode::InternalError, "centroid walk did not terminate");
}

}  // namespace stc
