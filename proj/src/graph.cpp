#include "stc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>

#include "stc/errors.hpp"

namespace stc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EdgeCountMismatch: return "EdgeCountMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::TreeEdgeNotInGraph: return "TreeEdgeNotInGraph";
    case ErrorCode::DisconnectedHost: return "DisconnectedHost";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyMarkSet: return "EmptyMarkSet";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::SingleVertex: return "SingleVertex";
    case ErrorCode::OracleFailure: return "OracleFailure";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::EdgelessGraph: return "EdgelessGraph";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::vector<Vertex> ids, std::size_t host_n) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 0 || static_cast<std::size_t>(members_[i]) >= host_n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "vertex " + std::to_string(members_[i]) + " not in 0.." + std::to_string(host_n));
    if (i > 0 && members_[i] == members_[i - 1])
      throw Error(ErrorCode::InvalidParams, "duplicate vertex " + std::to_string(members_[i]));
  }
}

VertexSet VertexSet::from_mask(Mask mask) {
  VertexSet s;
  while (mask) {
    s.members_.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return s;
}

VertexSet VertexSet::all(std::size_t n) {
  VertexSet s;
  s.members_.resize(n);
  std::iota(s.members_.begin(), s.members_.end(), 0);
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Mask VertexSet::to_mask() const {
  Mask m = 0;
  for (Vertex v : members_) {
    if (v >= 64) throw Error(ErrorCode::TooLarge, "vertex id does not fit a 64-bit mask");
    m |= Mask{1} << v;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= n)
      throw Error(ErrorCode::VertexOutOfRange, "edge " + std::to_string(e.u) + " " +
                                                   std::to_string(e.v) + " with n=" + std::to_string(n));
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw Error(ErrorCode::DuplicateEdge,
                  "edge " + std::to_string(v) + " " + std::to_string(*dup) + " listed twice");
  }
  m_ = edges.size();
  if (n <= 64) {
    masks_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v)
      for (Vertex w : adj_[v]) masks_[v] |= Mask{1} << w;
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n() || static_cast<std::size_t>(v) >= n())
    return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n(); ++u)
    for (Vertex v : adj_[u])
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
  return out;
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

bool parse_uint(std::string_view tok, std::size_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

// Splits "<a> <b>" on a single space.
bool parse_pair(std::string_view line, std::size_t& a, std::size_t& b) {
  auto sp = line.find(' ');
  if (sp == std::string_view::npos) return false;
  return parse_uint(line.substr(0, sp), a) && parse_uint(line.substr(sp + 1), b);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  for (auto line : lines) {
    ++lineno;
    if (!line.empty() && line.front() == '#') continue;
    if (!have_header) {
      if (!parse_pair(line, n, m))
        throw Error(ErrorCode::MalformedHeader, "expected \"<n> <m>\" on line " + std::to_string(lineno));
      have_header = true;
      edges.reserve(m);
      continue;
    }
    std::size_t u = 0, v = 0;
    if (!parse_pair(line, u, v))
      throw Error(ErrorCode::MalformedLine, "expected \"<u> <v>\" on line " + std::to_string(lineno));
    if (u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(lineno) + ": vertex id >= n");
    if (u == v) throw Error(ErrorCode::SelfLoop, "line " + std::to_string(lineno));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw Error(ErrorCode::MalformedHeader, "missing header line");
  if (edges.size() != m)
    throw Error(ErrorCode::EdgeCountMismatch, "header declares " + std::to_string(m) + " edges, found " +
                                                  std::to_string(edges.size()));
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.m());
  for (const Edge& e : g.edges()) {
    out += '\n';
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structural operations

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "induced subgraph of an empty vertex set");
  if (static_cast<std::size_t>(s.members().back()) >= g.n())
    throw Error(ErrorCode::VertexOutOfRange, "vertex set exceeds host graph");
  std::vector<Vertex> local(g.n(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) local[static_cast<std::size_t>(s[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (Vertex w : g.neighbors(s[i])) {
      Vertex lw = local[static_cast<std::size_t>(w)];
      if (lw > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), lw);
    }
  return {Graph(s.size(), edges), std::vector<Vertex>(s.begin(), s.end())};
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> queue;
  for (std::size_t start = 0; start < g.n(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    queue.assign(1, static_cast<Vertex>(start));
    comp[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g.neighbors(queue[head]))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          queue.push_back(w);
        }
    out.emplace_back(queue, g.n());
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

Graph remove_edges(const Graph& g, std::span<const Edge> f) {
  std::vector<Edge> drop(f.begin(), f.end());
  std::sort(drop.begin(), drop.end());
  for (const Edge& e : drop)
    if (!g.has_edge(e.u, e.v))
      throw Error(ErrorCode::MissingEdge, "edge " + std::to_string(e.u) + " " + std::to_string(e.v));
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) keep.push_back(e);
  return Graph(g.n(), keep);
}

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t v = 0; v < g.n(); ++v) best = std::max(best, g.degree(static_cast<Vertex>(v)));
  return best;
}

Cut make_cut(const Graph& g, const VertexSet& s) {
  Cut cut{s, {}};
  for (Vertex u : s)
    for (Vertex w : g.neighbors(u))
      if (!s.contains(w)) cut.crossing_edges.emplace_back(u, w);
  std::sort(cut.crossing_edges.begin(), cut.crossing_edges.end());
  return cut;
}

std::size_t cut_width(const Graph& g, Mask s) {
  std::size_t width = 0;
  const Mask outside = ~s & full_mask(g.n());
  for (Mask rest = s; rest; rest &= rest - 1)
    width += static_cast<std::size_t>(popcount(g.mask(__builtin_ctzll(rest)) & outside));
  return width;
}

}  // namespace stc
