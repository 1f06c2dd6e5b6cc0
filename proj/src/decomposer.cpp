#include "stc/decomposer.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "stc/bounds.hpp"
#include "stc/errors.hpp"
#include "stc/random.hpp"

namespace stc {

namespace {

constexpr std::size_t kTaskThreshold = 64;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

Vertex local_id(const std::vector<Vertex>& ids, Vertex host) {
  return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), host) - ids.begin());
}

struct Partial {
  DecompositionNode node;
  std::vector<Partial> kids;
  std::vector<Edge> tree_edges;  // host ids
};

class Builder {
 public:
  Builder(std::size_t host_n, const CutOracle& oracle, bool parallel)
      : host_n_(host_n), oracle_(oracle), parallel_(parallel),
        depth_guard_(4 * log_three_halves_ceil(host_n) + 8) {}

  Partial solve(const Graph& local, std::vector<Vertex> ids, std::size_t depth) const {
    Partial out;
    out.node.vertex_set = VertexSet(ids, host_n_);
    out.node.depth = depth;
    if (local.n() == 1) return out;
    if (depth > depth_guard_)
      throw Error(ErrorCode::InternalError, "recursion depth guard exceeded; oracle cuts are unbalanced");

    CutOracle oracle = oracle_;
    oracle.seed = mix_seed(oracle_.seed, static_cast<std::uint64_t>(ids.front()));
    const Cut cut = balanced_cut(local, oracle);
    const auto& f = cut.crossing_edges;  // sorted, local ids
    const auto components = connected_components(remove_edges(local, f));

    out.kids.resize(components.size());
    std::vector<std::exception_ptr> errors(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
      auto run = [&, i] {
        try {
          const Subgraph sub = induced_subgraph(local, components[i]);
          std::vector<Vertex> child_ids;
          child_ids.reserve(sub.to_parent.size());
          for (Vertex v : sub.to_parent) child_ids.push_back(ids[static_cast<std::size_t>(v)]);
          out.kids[i] = solve(sub.graph, std::move(child_ids), depth + 1);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      };
      if (parallel_ && components[i].size() >= kTaskThreshold) {
#pragma omp task default(shared) firstprivate(run)
        run();
      } else {
        run();
      }
    }
#pragma omp taskwait
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);

    UnionFind uf(local.n());
    for (const Partial& kid : out.kids) {
      for (const Edge& e : kid.tree_edges) {
        uf.unite(static_cast<std::size_t>(local_id(ids, e.u)), static_cast<std::size_t>(local_id(ids, e.v)));
        out.tree_edges.push_back(e);
      }
      out.node.height = std::max(out.node.height, kid.node.height + 1);
    }
    for (const Edge& e : f) {
      const Edge host(ids[static_cast<std::size_t>(e.u)], ids[static_cast<std::size_t>(e.v)]);
      out.node.cut_edges.push_back(host);
      if (uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) {
        out.node.connector_edges.push_back(host);
        out.tree_edges.push_back(host);
      }
    }

    std::vector<Edge> local_tree;
    local_tree.reserve(out.tree_edges.size());
    for (const Edge& e : out.tree_edges) local_tree.emplace_back(local_id(ids, e.u), local_id(ids, e.v));
    out.node.congestion = tree_congestion(local, SpanningTree(local.n(), std::move(local_tree))).max_congestion;
    return out;
  }

 private:
  std::size_t host_n_;
  CutOracle oracle_;
  bool parallel_;
  std::size_t depth_guard_;
};

std::size_t flatten(Partial&& p, std::vector<DecompositionNode>& nodes) {
  const std::size_t id = nodes.size();
  nodes.push_back(std::move(p.node));
  for (Partial& kid : p.kids) {
    const std::size_t kid_id = flatten(std::move(kid), nodes);
    nodes[id].children.push_back(kid_id);
  }
  return id;
}

// Tree edges of every node's subtree: the union of connector edges below it.
std::vector<std::vector<Edge>> subtree_edges(const DecompositionTree& d) {
  std::vector<std::vector<Edge>> out(d.nodes.size());
  for (std::size_t t = d.nodes.size(); t-- > 0;) {
    out[t] = d.nodes[t].connector_edges;
    for (std::size_t c : d.nodes[t].children) out[t].insert(out[t].end(), out[c].begin(), out[c].end());
  }
  return out;
}

}  // namespace

std::size_t log_three_halves_ceil(std::size_t n) {
  __extension__ using u128 = unsigned __int128;
  u128 p3 = 1, p2 = 1;
  std::size_t k = 0;
  while (p3 < static_cast<u128>(n) * p2) {
    p3 *= 3;
    p2 *= 2;
    ++k;
  }
  return k;
}

Decomposition cong_span_tree(const Graph& g, const CutOracle& oracle, bool parallel) {
  if (g.n() == 0 || !is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "graph is not connected");
  Builder builder(g.n(), oracle, parallel);
  std::vector<Vertex> ids(g.n());
  std::iota(ids.begin(), ids.end(), 0);
  Partial root;
  std::exception_ptr error;
#pragma omp parallel if (parallel)
#pragma omp single
  {
    try {
      root = builder.solve(g, ids, 0);
    } catch (...) {
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::vector<Edge> tree_edges = root.tree_edges;
  DecompositionTree trace;
  trace.oracle = oracle.kind;
  flatten(std::move(root), trace.nodes);
  return {SpanningTree(g.n(), std::move(tree_edges)), std::move(trace)};
}

void verify_structure(const Decomposition& d, const Graph& g) {
  const auto& nodes = d.trace.nodes;
  auto fail = [](std::size_t t, const std::string& what) {
    throw Error(ErrorCode::VerificationFailed, "node " + std::to_string(t) + ": " + what);
  };
  if (nodes.empty() || nodes.front().vertex_set != VertexSet::all(g.n())) fail(0, "root does not cover V(G)");
  std::vector<Edge> connectors;
  for (std::size_t t = 0; t < nodes.size(); ++t) {
    const auto& node = nodes[t];
    const std::size_t size = node.vertex_set.size();
    if (node.children.empty()) {
      if (size != 1) fail(t, "leaf is not a singleton");
      if (node.height != 0 || !node.cut_edges.empty()) fail(t, "leaf carries a cut or height");
      continue;
    }
    const Subgraph sub = induced_subgraph(g, node.vertex_set);
    std::vector<Edge> local_f;
    for (const Edge& e : node.cut_edges) {
      if (!node.vertex_set.contains(e.u) || !node.vertex_set.contains(e.v) || !g.has_edge(e.u, e.v))
        fail(t, "cut edge outside G_t");
      local_f.emplace_back(local_id(sub.to_parent, e.u), local_id(sub.to_parent, e.v));
    }
    std::vector<VertexSet> expected;
    for (const VertexSet& comp : connected_components(remove_edges(sub.graph, local_f))) {
      std::vector<Vertex> host;
      for (Vertex v : comp) host.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
      expected.emplace_back(std::move(host), g.n());
    }
    if (expected.size() != node.children.size()) fail(t, "children are not the components of G_t - F");
    std::size_t max_height = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      const auto& child = nodes[node.children[i]];
      if (child.vertex_set != expected[i]) fail(t, "child " + std::to_string(i) + " is not a component of G_t - F");
      if (child.vertex_set.size() > balance_cap(size)) fail(t, "child exceeds the balance cap");
      if (child.depth != node.depth + 1) fail(t, "child depth mismatch");
      max_height = std::max(max_height, child.height);
    }
    if (node.height != max_height + 1) fail(t, "height is not 1 + max child height");
    for (const Edge& e : node.connector_edges)
      if (!std::binary_search(node.cut_edges.begin(), node.cut_edges.end(), e)) fail(t, "connector edge not in F");
    connectors.insert(connectors.end(), node.connector_edges.begin(), node.connector_edges.end());
  }
  std::sort(connectors.begin(), connectors.end());
  if (connectors != d.tree.edges()) fail(0, "final tree differs from the union of connector edges");
}

std::vector<RecurrenceCheck> verify_recurrence(const DecompositionTree& d, const Graph& g) {
  const auto edges = subtree_edges(d);
  std::vector<std::size_t> congestion(d.nodes.size(), 0);
  for (std::size_t t = 0; t < d.nodes.size(); ++t) {
    const auto& node = d.nodes[t];
    if (node.vertex_set.size() <= 1) continue;
    const Subgraph sub = induced_subgraph(g, node.vertex_set);
    std::vector<Edge> local;
    for (const Edge& e : edges[t])
      local.emplace_back(local_id(sub.to_parent, e.u), local_id(sub.to_parent, e.v));
    congestion[t] = tree_congestion_naive(sub.graph, SpanningTree(sub.graph.n(), std::move(local))).max_congestion;
    if (congestion[t] != node.congestion)
      throw Error(ErrorCode::VerificationFailed, "node " + std::to_string(t) + " records congestion " +
                                                     std::to_string(node.congestion) + " but has " +
                                                     std::to_string(congestion[t]));
  }
  std::vector<RecurrenceCheck> out;
  for (std::size_t t = 0; t < d.nodes.size(); ++t) {
    const auto& node = d.nodes[t];
    if (node.children.empty()) continue;
    RecurrenceCheck check;
    check.node = t;
    check.congestion = congestion[t];
    check.cut_size = node.cut_edges.size();
    for (std::size_t c : node.children) check.max_child_congestion = std::max(check.max_child_congestion, congestion[c]);
    check.slack = static_cast<long long>(check.max_child_congestion + check.cut_size) -
                  static_cast<long long>(check.congestion);
    if (check.slack < 0)
      throw Error(ErrorCode::VerificationFailed,
                  "recurrence violated at node " + std::to_string(t) + ": " + std::to_string(check.congestion) +
                      " > " + std::to_string(check.max_child_congestion) + " + " + std::to_string(check.cut_size));
    out.push_back(check);
  }
  return out;
}

GlobalBoundCheck verify_global_bound(const DecompositionTree& d, const Graph& g, std::size_t hb_limit) {
  if (d.oracle != OracleKind::Exact)
    throw Error(ErrorCode::InvalidParams, "the global bound is stated for the exact oracle");
  GlobalBoundCheck check;
  check.congestion = d.nodes.front().congestion;
  check.height = d.root_height();
  check.height_cap = log_three_halves_ceil(g.n());
  check.hereditary_bisection = g.n() >= 2 ? hereditary_bisection_exact(g, hb_limit).value : 0;
  if (check.congestion > check.height * check.hereditary_bisection)
    throw Error(ErrorCode::VerificationFailed, "c(G,T) = " + std::to_string(check.congestion) + " exceeds h * hb = " +
                                                   std::to_string(check.height) + " * " +
                                                   std::to_string(check.hereditary_bisection));
  if (check.height > check.height_cap)
    throw Error(ErrorCode::VerificationFailed, "height " + std::to_string(check.height) +
                                                   " exceeds ceil(log_{3/2} n) = " + std::to_string(check.height_cap));
  return check;
}

ApproximationRecord approximation_report(const Graph& g, const CutOracle& oracle, std::uint64_t stc_budget,
                                         std::size_t hb_limit) {
  const Decomposition run = cong_span_tree(g, oracle);
  ApproximationRecord rec;
  rec.n = g.n();
  rec.m = g.m();
  rec.max_degree = max_degree(g);
  rec.congestion = run.trace.nodes.front().congestion;
  rec.height = run.trace.root_height();
  if (g.n() >= 2 && g.n() <= hb_limit) rec.hereditary_bisection = hereditary_bisection_exact(g, hb_limit).value;

  if (spanning_tree_count(g) <= stc_budget) {
    rec.denominator = Rational(static_cast<std::int64_t>(exact_stc(g, stc_budget).value));
    rec.exact_denominator = true;
    rec.denominator_kind = "exact_stc";
  } else {
    BoundSearchOptions options;
    options.hb_limit = hb_limit;
    options.seed = oracle.seed;
    const BoundCertificate cert = best_certificate(g, options);
    rec.denominator = cert.value;
    rec.denominator_kind = std::string(certificate_name(cert.kind));
  }
  if (rec.denominator == Rational(0))
    rec.ratio = rec.congestion == 0 ? Rational(1) : Rational(static_cast<std::int64_t>(rec.congestion));
  else
    rec.ratio = Rational(static_cast<std::int64_t>(rec.congestion)) / rec.denominator;
  return rec;
}

}  // namespace stc
