#include "stc/enumerate.hpp"

#include <algorithm>
#include <array>

#include "stc/errors.hpp"

namespace stc {

namespace {

constexpr std::size_t kMax = kMaxEnumerationVertices;

constexpr unsigned pair_index(unsigned i, unsigned j) { return j * (j - 1) / 2 + i; }  // i < j

struct SmallGraph {
  unsigned n = 0;
  std::array<std::uint16_t, kMax> adj{};
};

using Colouring = std::array<int, kMax>;

SmallGraph to_small(const Graph& g) {
  SmallGraph s;
  s.n = static_cast<unsigned>(g.n());
  for (unsigned v = 0; v < s.n; ++v) s.adj[v] = static_cast<std::uint16_t>(g.mask(static_cast<Vertex>(v)));
  return s;
}

int count_colours(const Colouring& c, unsigned n) {
  int k = 0;
  for (unsigned v = 0; v < n; ++v) k = std::max(k, c[v] + 1);
  return k;
}

// Rank-compresses arbitrary non-negative colours to 0..k-1, preserving order.
void densify(Colouring& colour, unsigned n) {
  Colouring sorted = colour;
  std::sort(sorted.begin(), sorted.begin() + n);
  const auto end = std::unique(sorted.begin(), sorted.begin() + n);
  for (unsigned v = 0; v < n; ++v)
    colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), end, colour[v]) - sorted.begin());
}

// Equitable refinement: split colour classes by (own colour, neighbour colour
// counts) until stable. Colours are dense ranks 0..k-1, ordered by signature.
void refine(const SmallGraph& g, Colouring& colour) {
  const unsigned n = g.n;
  densify(colour, n);
  int k = count_colours(colour, n);
  while (true) {
    std::array<std::array<int, kMax + 1>, kMax> sig{};
    for (unsigned v = 0; v < n; ++v) {
      sig[v][0] = colour[v];
      for (std::uint16_t rest = g.adj[v]; rest; rest &= static_cast<std::uint16_t>(rest - 1))
        ++sig[v][1 + colour[static_cast<unsigned>(__builtin_ctz(rest))]];
    }
    std::array<unsigned, kMax> order{};
    for (unsigned v = 0; v < n; ++v) order[v] = v;
    auto less = [&](unsigned a, unsigned b) {
      return std::lexicographical_compare(sig[a].begin(), sig[a].begin() + k + 1, sig[b].begin(),
                                          sig[b].begin() + k + 1);
    };
    std::sort(order.begin(), order.begin() + n, less);
    Colouring next{};
    int rank = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (i > 0 && less(order[i - 1], order[i])) ++rank;
      next[order[i]] = rank;
    }
    colour = next;
    if (rank + 1 == k) return;
    k = rank + 1;
  }
}

GraphCode code_for(const SmallGraph& g, const Colouring& label) {
  GraphCode code = 0;
  for (unsigned u = 0; u < g.n; ++u)
    for (std::uint16_t rest = g.adj[u]; rest; rest &= static_cast<std::uint16_t>(rest - 1)) {
      const unsigned w = static_cast<unsigned>(__builtin_ctz(rest));
      if (w <= u) continue;
      const auto a = static_cast<unsigned>(label[u]);
      const auto b = static_cast<unsigned>(label[w]);
      code |= GraphCode{1} << (a < b ? pair_index(a, b) : pair_index(b, a));
    }
  return code;
}

void search(const SmallGraph& g, Colouring colour, GraphCode& best) {
  refine(g, colour);
  const unsigned n = g.n;
  // First non-singleton cell (smallest colour with two or more members).
  std::array<int, kMax> size{};
  for (unsigned v = 0; v < n; ++v) ++size[static_cast<std::size_t>(colour[v])];
  int target = -1;
  for (unsigned c = 0; c < n; ++c)
    if (size[c] > 1) {
      target = static_cast<int>(c);
      break;
    }
  if (target < 0) {
    best = std::min(best, code_for(g, colour));
    return;
  }
  for (unsigned v = 0; v < n; ++v) {
    if (colour[v] != target) continue;
    Colouring split{};
    for (unsigned x = 0; x < n; ++x) split[x] = 2 * colour[x] + ((colour[x] == target && x != v) ? 1 : 0);
    search(g, split, best);
  }
}

GraphCode canonical_small(const SmallGraph& s) {
  Colouring start{};
  for (unsigned v = 0; v < s.n; ++v) start[v] = __builtin_popcount(s.adj[v]);
  GraphCode best = ~GraphCode{0};
  search(s, start, best);
  return best;
}

SmallGraph small_from_code(unsigned n, GraphCode code) {
  SmallGraph s;
  s.n = n;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i)
      if (code >> pair_index(i, j) & 1) {
        s.adj[i] |= static_cast<std::uint16_t>(1u << j);
        s.adj[j] |= static_cast<std::uint16_t>(1u << i);
      }
  return s;
}

}  // namespace

GraphCode graph_code(const Graph& g) {
  if (g.n() > kMax) throw Error(ErrorCode::TooLarge, "graph codes cover at most 11 vertices");
  Colouring identity{};
  for (unsigned v = 0; v < g.n(); ++v) identity[v] = static_cast<int>(v);
  return code_for(to_small(g), identity);
}

Graph graph_from_code(std::size_t n, GraphCode code) {
  std::vector<Edge> edges;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i)
      if (code >> pair_index(i, j) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, edges);
}

GraphCode canonical_code(const Graph& g) {
  if (g.n() > kMax) throw Error(ErrorCode::TooLarge, "canonical codes cover at most 11 vertices");
  if (g.n() == 0) return 0;
  return canonical_small(to_small(g));
}

std::vector<GraphCode> connected_graph_codes(std::size_t n) {
  if (n == 0) return {};
  if (n > kMax) throw Error(ErrorCode::TooLarge, "enumeration covers at most 11 vertices");
  // Children are deduplicated in batches so n = 10 (134M raw children) fits in memory.
  constexpr std::size_t kBatch = std::size_t{1} << 22;
  const auto compact = [](std::vector<GraphCode>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  std::vector<GraphCode> level{0};  // K1
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t prev = k - 1;
    std::vector<GraphCode> found;
#pragma omp parallel
    {
      std::vector<GraphCode> local, fresh;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::size_t i = 0; i < level.size(); ++i) {
        const SmallGraph parent = small_from_code(static_cast<unsigned>(k), level[i]);
        for (unsigned nbrs = 1; nbrs < (1u << prev); ++nbrs) {
          SmallGraph child = parent;
          child.adj[prev] = static_cast<std::uint16_t>(nbrs);
          for (unsigned rest = nbrs; rest; rest &= rest - 1)
            child.adj[static_cast<unsigned>(__builtin_ctz(rest))] |= static_cast<std::uint16_t>(1u << prev);
          fresh.push_back(canonical_small(child));
        }
        if (fresh.size() >= kBatch) {
          compact(fresh);
          local.insert(local.end(), fresh.begin(), fresh.end());
          compact(local);
          fresh.clear();
        }
      }
      local.insert(local.end(), fresh.begin(), fresh.end());
      compact(local);
#pragma omp critical
      found.insert(found.end(), local.begin(), local.end());
    }
    compact(found);
    level = std::move(found);
  }
  return level;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  const auto codes = connected_graph_codes(n);
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (GraphCode c : codes) out.push_back(graph_from_code(n, c));
  return out;
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t k = 1; k <= max_n; ++k) {
    auto level = connected_graphs(k);
    out.insert(out.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return out;
}

}  // namespace stc
