#pragma once
// Brute-force reference computations for tests. Deliberately naive and
// independent of the library algorithms: only Graph/Edge plumbing is shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "stc/generators.hpp"
#include "stc/graph.hpp"
#include "stc/random.hpp"
#include "stc/rational.hpp"

namespace oracle {

using stc::Edge;
using stc::Graph;
using stc::Rational;
using stc::Vertex;

inline bool in_set(std::uint64_t s, int v) { return (s >> v) & 1U; }

inline std::size_t crossing(const Graph& g, std::uint64_t s) {
  std::size_t w = 0;
  for (const Edge& e : g.edges())
    if (in_set(s, e.u) != in_set(s, e.v)) ++w;
  return w;
}

inline bool is_spanning_tree(std::size_t n, const std::vector<Edge>& edges) {
  if (edges.size() + 1 != n) return false;
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  for (const Edge& e : edges) {
    const int a = comp[static_cast<std::size_t>(e.u)], b = comp[static_cast<std::size_t>(e.v)];
    if (a == b) return false;
    for (int& c : comp)
      if (c == b) c = a;
  }
  return true;
}

/// Every spanning tree, by trying all (n-1)-subsets of the edge set.
inline std::vector<std::vector<Edge>> all_spanning_trees(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  const auto edges = g.edges();
  if (g.n() == 1) return {{}};
  std::vector<Edge> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (pick.size() + 1 == g.n()) {
      if (is_spanning_tree(g.n(), pick)) out.push_back(pick);
      return;
    }
    if (i == edges.size() || edges.size() - i < g.n() - 1 - pick.size()) return;
    pick.push_back(edges[i]);
    rec(i + 1);
    pick.pop_back();
    rec(i + 1);
  };
  rec(0);
  return out;
}

/// Per tree edge (in the given order): remove it, find one side by DFS, count crossings.
inline std::vector<std::size_t> congestions(const Graph& g, const std::vector<Edge>& tree) {
  std::vector<std::size_t> out;
  for (std::size_t skip = 0; skip < tree.size(); ++skip) {
    std::uint64_t side = 1ULL << tree[skip].u;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < tree.size(); ++i) {
        if (i == skip) continue;
        const bool a = in_set(side, tree[i].u), b = in_set(side, tree[i].v);
        if (a != b) {
          side |= (1ULL << tree[i].u) | (1ULL << tree[i].v);
          grew = true;
        }
      }
    }
    out.push_back(crossing(g, side));
  }
  return out;
}

inline std::size_t max_congestion(const Graph& g, const std::vector<Edge>& tree) {
  const auto c = congestions(g, tree);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

inline std::size_t stc(const Graph& g) {
  std::size_t best = SIZE_MAX;
  for (const auto& t : all_spanning_trees(g)) best = std::min(best, max_congestion(g, t));
  return best;
}

/// Minimum crossing over S with |S| = floor(n/2).
inline std::size_t bisection(const Graph& g) {
  std::size_t best = SIZE_MAX;
  for (std::uint64_t s = 0; s < (1ULL << g.n()); ++s)
    if (static_cast<std::size_t>(__builtin_popcountll(s)) == g.n() / 2) best = std::min(best, crossing(g, s));
  return best;
}

/// Minimum crossing over nonempty proper S with both sides <= floor(2n/3).
inline std::size_t balanced(const Graph& g) {
  const std::size_t cap = 2 * g.n() / 3;
  std::size_t best = SIZE_MAX;
  for (std::uint64_t s = 1; s + 1 < (1ULL << g.n()); ++s) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (k <= cap && g.n() - k <= cap) best = std::min(best, crossing(g, s));
  }
  return best;
}

inline Rational expansion(const Graph& g) {
  Rational best(-1);
  for (std::uint64_t s = 1; s + 1 < (1ULL << g.n()); ++s) {
    const auto k = static_cast<std::int64_t>(__builtin_popcountll(s));
    const Rational r(static_cast<std::int64_t>(crossing(g, s)), std::min<std::int64_t>(k, static_cast<std::int64_t>(g.n()) - k));
    if (best < Rational(0) || r < best) best = r;
  }
  return best;
}

inline Graph induced(const Graph& g, std::uint64_t s) {
  std::vector<int> id(g.n(), -1);
  int k = 0;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (in_set(s, static_cast<int>(v))) id[v] = k++;
  std::vector<Edge> e;
  for (const Edge& x : g.edges())
    if (id[static_cast<std::size_t>(x.u)] >= 0 && id[static_cast<std::size_t>(x.v)] >= 0)
      e.emplace_back(id[static_cast<std::size_t>(x.u)], id[static_cast<std::size_t>(x.v)]);
  return Graph(static_cast<std::size_t>(k), e);
}

inline std::size_t hereditary_bisection(const Graph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (1ULL << g.n()); ++s)
    if (__builtin_popcountll(s) >= 2) best = std::max(best, bisection(induced(g, s)));
  return best;
}

inline std::size_t max_degree(const Graph& g) {
  std::vector<std::size_t> deg(g.n(), 0);
  for (const Edge& e : g.edges()) ++deg[static_cast<std::size_t>(e.u)], ++deg[static_cast<std::size_t>(e.v)];
  return g.n() == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
}

inline bool connected(const Graph& g) {
  if (g.n() == 0) return false;
  std::uint64_t reach = 1;
  for (std::size_t round = 0; round < g.n(); ++round)
    for (const Edge& e : g.edges())
      if (in_set(reach, e.u) || in_set(reach, e.v)) reach |= (1ULL << e.u) | (1ULL << e.v);
  return static_cast<std::size_t>(__builtin_popcountll(reach)) == g.n();
}

// ---- instance helpers ----

inline Graph path(std::size_t n) { return stc::generate(stc::Family::Path, {n, 0, 0.0}, 0); }
inline Graph cycle(std::size_t n) { return stc::generate(stc::Family::Cycle, {n, 0, 0.0}, 0); }
inline Graph complete(std::size_t n) { return stc::generate(stc::Family::Complete, {n, 0, 0.0}, 0); }
inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, e);
}

/// Connected G(n, p) with a random spanning tree planted first, so it always connects.
inline Graph random_connected(std::size_t n, double p, stc::Rng& rng) {
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v)
    e.emplace_back(static_cast<Vertex>(stc::uniform_below(rng, v)), static_cast<Vertex>(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (stc::uniform_unit(rng) < p) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  // Relabel so the planted tree is not always rooted at 0.
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  stc::shuffle(perm, rng);
  for (Edge& x : e) x = Edge(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]);
  return Graph(n, e);
}

/// Uniformly shuffled edge order, then Kruskal: a random spanning tree of a connected graph.
inline std::vector<Edge> random_spanning_tree(const Graph& g, stc::Rng& rng) {
  auto edges = g.edges();
  stc::shuffle(edges, rng);
  std::vector<int> comp(g.n());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]); };
  std::vector<Edge> tree;
  for (const Edge& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      comp[static_cast<std::size_t>(a)] = b;
      tree.push_back(e);
    }
  }
  return tree;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const Edge& x : g.edges()) e.emplace_back(perm[static_cast<std::size_t>(x.u)], perm[static_cast<std::size_t>(x.v)]);
  return Graph(g.n(), e);
}

}  // namespace oracle
