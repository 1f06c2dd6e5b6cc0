#include <algorithm>
#include <limits>

#include "stc/errors.hpp"
#include "stc/spantree.hpp"

namespace stc {

namespace {

enum class Place : unsigned char { Below, Above, Outside };

class TreeSearch {
 public:
  explicit TreeSearch(const Graph& g) : edges_(g.edges()), n_(g.n()) {
    in_tree_.assign(n_, false);
    parent_.assign(n_, -1);
    excluded_.assign(edges_.size(), false);
    place_.assign(n_, Place::Outside);
    above_.assign(n_, 0);
    below_.assign(n_, 0);
  }

  void run(std::size_t initial_best, std::vector<Edge> initial_tree) {
    best_ = initial_best;
    best_tree_ = std::move(initial_tree);
    in_tree_[0] = true;
    order_.push_back(0);
    recurse();
  }

  std::size_t best() const { return best_; }
  const std::vector<Edge>& best_tree() const { return best_tree_; }
  std::size_t nodes() const { return nodes_; }

 private:
  // Largest lower bound over current tree edges on the congestion that edge
  // has in any completion. For tree edge (v, parent v) with A = subtree of v
  // and B = the other tree vertices, every completion separates A from B, and
  // each outside vertex w lands on one side, crossing at least
  // min(e(w,A), e(w,B)) edges.
  std::size_t partial_bound() {
    std::size_t bound = 0;
    for (std::size_t k = 1; k < order_.size(); ++k) {
      const Vertex v = order_[k];
      mark_subtree(v);
      std::size_t crossing = 0;
      for (const Edge& e : edges_) {
        const Place a = place_[static_cast<std::size_t>(e.u)];
        const Place b = place_[static_cast<std::size_t>(e.v)];
        if (a == b) continue;
        if (a != Place::Outside && b != Place::Outside) {
          ++crossing;
          continue;
        }
        const Vertex w = a == Place::Outside ? e.u : e.v;
        ((a == Place::Below || b == Place::Below) ? below_ : above_)[static_cast<std::size_t>(w)]++;
      }
      for (std::size_t w = 0; w < n_; ++w)
        if (!in_tree_[w]) {
          crossing += std::min(above_[w], below_[w]);
          above_[w] = below_[w] = 0;
        }
      bound = std::max(bound, crossing);
      if (bound >= best_) return bound;
    }
    return bound;
  }

  void mark_subtree(Vertex v) {
    for (Vertex x : order_) {
      const auto xi = static_cast<std::size_t>(x);
      Place p = Place::Above;
      if (x == v) p = Place::Below;
      else if (parent_[xi] >= 0 && place_[static_cast<std::size_t>(parent_[xi])] == Place::Below)
        p = Place::Below;
      place_[xi] = p;
    }
  }

  bool outside_reachable() {
    std::vector<bool> seen(in_tree_);
    std::vector<Vertex> stack(order_);
    std::size_t reached = order_.size();
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t k = 0; k < edges_.size(); ++k) {
        if (excluded_[k]) continue;
        const Edge& e = edges_[k];
        Vertex w;
        if (e.u == v) w = e.v;
        else if (e.v == v) w = e.u;
        else continue;
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
    return reached == n_;
  }

  void recurse() {
    ++nodes_;
    if (order_.size() == n_) {
      const std::size_t value = n_ == 1 ? 0 : partial_bound();
      if (value < best_) {
        best_ = value;
        best_tree_ = tree_edges_;
      }
      return;
    }
    std::size_t pick = edges_.size();
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (excluded_[k]) continue;
      const Edge& e = edges_[k];
      if (in_tree_[static_cast<std::size_t>(e.u)] != in_tree_[static_cast<std::size_t>(e.v)]) {
        pick = k;
        break;
      }
    }
    if (pick == edges_.size()) return;
    const Edge e = edges_[pick];
    const Vertex inside = in_tree_[static_cast<std::size_t>(e.u)] ? e.u : e.v;
    const Vertex added = inside == e.u ? e.v : e.u;

    // Include.
    in_tree_[static_cast<std::size_t>(added)] = true;
    parent_[static_cast<std::size_t>(added)] = inside;
    order_.push_back(added);
    tree_edges_.push_back(e);
    if (partial_bound() < best_) recurse();
    tree_edges_.pop_back();
    order_.pop_back();
    parent_[static_cast<std::size_t>(added)] = -1;
    in_tree_[static_cast<std::size_t>(added)] = false;
    place_[static_cast<std::size_t>(added)] = Place::Outside;

    // Exclude.
    excluded_[pick] = true;
    if (outside_reachable()) recurse();
    excluded_[pick] = false;
  }

  std::vector<Edge> edges_;
  std::size_t n_;
  std::vector<bool> in_tree_;
  std::vector<Vertex> parent_;
  std::vector<bool> excluded_;
  std::vector<Place> place_;
  std::vector<std::size_t> above_, below_;
  std::vector<Vertex> order_;  // insertion order; parents precede children
  std::vector<Edge> tree_edges_;
  std::size_t best_ = std::numeric_limits<std::size_t>::max();
  std::vector<Edge> best_tree_;
  std::size_t nodes_ = 0;
};

}  // namespace

ExactStcResult exact_stc(const Graph& g, std::uint64_t budget) {
  if (g.n() == 0) throw Error(ErrorCode::DisconnectedInput, "empty graph");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "graph is not connected");
  BigInt count = spanning_tree_count(g);
  if (count > budget)
    throw Error(ErrorCode::BudgetExceeded, "graph has " + count.str() + " spanning trees, budget " +
                                               std::to_string(budget));

  // Seed the bound with the best BFS tree; the search still returns the first
  // optimum in its own order because it only prunes at bound >= best.
  std::size_t seed_value = std::numeric_limits<std::size_t>::max();
  std::vector<Edge> seed_tree;
  for (std::size_t r = 0; r < g.n(); ++r) {
    SpanningTree t = bfs_tree(g, static_cast<Vertex>(r));
    const std::size_t c = tree_congestion(g, t).max_congestion;
    if (c < seed_value) {
      seed_value = c;
      seed_tree = t.edges();
    }
  }

  TreeSearch search(g);
  search.run(seed_value + 1, seed_tree);
  return ExactStcResult{search.best(), SpanningTree(g.n(), search.best_tree()), std::move(count),
                        search.nodes()};
}

}  // namespace stc
