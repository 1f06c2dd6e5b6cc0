#include "stc/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "stc/errors.hpp"
#include "stc/random.hpp"

namespace stc {

namespace {

constexpr int kConnectRetries = 1000;

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, e);
}

Graph gnp_connected(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < kConnectRetries; ++attempt) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (uniform_unit(rng) < p) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    Graph g(n, e);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::GenerationFailed, "no connected G(n,p) sample after " +
                                               std::to_string(kConnectRetries) + " draws");
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Grid, Family::RandomRegular,
                   Family::GnpConnected, Family::ApexExpander})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::string_view family_name(Family f) noexcept {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Grid: return "grid";
    case Family::RandomRegular: return "random_regular";
    case Family::GnpConnected: return "gnp_connected";
    case Family::ApexExpander: return "apex_expander";
  }
  return "unknown";
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, int max_retries) {
  if (n == 0 || d >= n || (n * d) % 2 != 0)
    throw Error(ErrorCode::InvalidParams, "random_regular needs d < n and d*n even (n=" +
                                              std::to_string(n) + ", d=" + std::to_string(d) + ")");
  Rng rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    shuffle(points, rng);
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      if (points[i] == points[i + 1]) simple = false;
      else simple = seen.emplace(points[i], points[i + 1]).second;
    }
    if (simple) return Graph(n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw Error(ErrorCode::GenerationFailed, "pairing model produced no simple graph in " +
                                               std::to_string(max_retries) + " attempts");
}

Graph add_apex(const Graph& g) {
  auto edges = g.edges();
  const auto apex = static_cast<Vertex>(g.n());
  for (Vertex v = 0; v < apex; ++v) edges.emplace_back(v, apex);
  return Graph(g.n() + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

Graph generate(Family family, const GenParams& params, std::uint64_t seed) {
  const std::size_t n = params.n;
  auto require = [](bool ok, const char* msg) {
    if (!ok) throw Error(ErrorCode::InvalidParams, msg);
  };
  switch (family) {
    case Family::Path:
      require(n >= 1, "path needs n >= 1");
      return path_graph(n);
    case Family::Cycle:
      require(n >= 3, "cycle needs n >= 3");
      return cycle_graph(n);
    case Family::Complete:
      require(n >= 1, "complete needs n >= 1");
      return complete_graph(n);
    case Family::Grid:
      require(n >= 1, "grid needs n >= 1 rows");
      return grid_graph(n, params.d == 0 ? n : params.d);
    case Family::RandomRegular:
      return random_regular(n, params.d, seed);
    case Family::GnpConnected:
      require(n >= 1, "gnp_connected needs n >= 1");
      require(params.p > 0.0 && params.p <= 1.0, "gnp_connected needs 0 < p <= 1");
      return gnp_connected(n, params.p, seed);
    case Family::ApexExpander:
      return add_apex(random_regular(n, params.d, seed));
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

}  // namespace stc
