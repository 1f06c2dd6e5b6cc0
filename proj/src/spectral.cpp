#include <algorithm>
#include <cmath>
#include <numeric>

#include "stc/cuts.hpp"
#include "stc/errors.hpp"
#include "stc/random.hpp"

namespace stc {

namespace {

constexpr int kPowerIterations = 3000;
constexpr double kPowerTolerance = 1e-10;
constexpr std::size_t kSweepThresholds = 64;

void center_and_normalize(std::vector<double>& x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  double norm = 0.0;
  for (double& v : x) {
    v -= mean;
    norm += v * v;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0)
    for (double& v : x) v /= norm;
}

// Second Laplacian eigenvector by power iteration on (c I - L), with the
// all-ones direction projected out each step. c = 2*maxdeg + 1 bounds the
// Laplacian spectrum, so the shifted matrix is positive definite.
std::vector<double> fiedler_vector(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  const double shift = 2.0 * static_cast<double>(max_degree(g)) + 1.0;
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (double& v : x) v = 2.0 * uniform_unit(rng) - 1.0;
  center_and_normalize(x);
  const auto count = static_cast<long long>(n);
  for (int it = 0; it < kPowerIterations; ++it) {
    // Entries are independent, so the parallel matvec is bit-identical to the serial one.
#pragma omp parallel for schedule(static) if (n > 4096)
    for (long long i = 0; i < count; ++i) {
      const auto v = static_cast<Vertex>(i);
      double lx = static_cast<double>(g.degree(v)) * x[static_cast<std::size_t>(i)];
      for (Vertex w : g.neighbors(v)) lx -= x[static_cast<std::size_t>(w)];
      y[static_cast<std::size_t>(i)] = shift * x[static_cast<std::size_t>(i)] - lx;
    }
    center_and_normalize(y);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(y[i] - x[i]));
    x.swap(y);
    if (delta < kPowerTolerance) break;
  }
  return x;
}

class LocalSearch {
 public:
  LocalSearch(const Graph& g, std::vector<bool> in_s) : g_(g), in_s_(std::move(in_s)) {
    size_s_ = static_cast<std::size_t>(std::count(in_s_.begin(), in_s_.end(), true));
  }

  // gain(v) = (edges to the other side) - (edges to own side).
  long long gain(Vertex v) const {
    long long gain = 0;
    for (Vertex w : g_.neighbors(v))
      gain += in_s_[static_cast<std::size_t>(w)] != in_s_[static_cast<std::size_t>(v)] ? 1 : -1;
    return gain;
  }

  bool boundary(Vertex v) const {
    for (Vertex w : g_.neighbors(v))
      if (in_s_[static_cast<std::size_t>(w)] != in_s_[static_cast<std::size_t>(v)]) return true;
    return false;
  }

  bool move_allowed(Vertex v) const {
    const std::size_t cap = balance_cap(g_.n());
    const std::size_t new_s = in_s_[static_cast<std::size_t>(v)] ? size_s_ - 1 : size_s_ + 1;
    return new_s >= 1 && new_s < g_.n() && new_s <= cap && g_.n() - new_s <= cap;
  }

  // Applies the best strictly improving single move or swap; false at a local optimum.
  bool improve() {
    std::vector<Vertex> border_s, border_t;
    std::vector<long long> gains(g_.n(), 0);
    for (std::size_t v = 0; v < g_.n(); ++v) {
      const auto vv = static_cast<Vertex>(v);
      if (!boundary(vv)) continue;
      gains[v] = gain(vv);
      (in_s_[v] ? border_s : border_t).push_back(vv);
    }
    long long best_gain = 0;
    Vertex best_a = -1, best_b = -1;
    for (const auto* side : {&border_s, &border_t})
      for (Vertex v : *side)
        if (gains[static_cast<std::size_t>(v)] > best_gain && move_allowed(v)) {
          best_gain = gains[static_cast<std::size_t>(v)];
          best_a = v;
          best_b = -1;
        }
    for (Vertex a : border_s)
      for (Vertex b : border_t) {
        const long long swap_gain = gains[static_cast<std::size_t>(a)] + gains[static_cast<std::size_t>(b)] -
                                    (g_.has_edge(a, b) ? 2 : 0);
        if (swap_gain > best_gain) {
          best_gain = swap_gain;
          best_a = a;
          best_b = b;
        }
      }
    if (best_a < 0) return false;
    flip(best_a);
    if (best_b >= 0) flip(best_b);
    return true;
  }

  const std::vector<bool>& side() const { return in_s_; }

 private:
  void flip(Vertex v) {
    const auto i = static_cast<std::size_t>(v);
    size_s_ = in_s_[i] ? size_s_ - 1 : size_s_ + 1;
    in_s_[i] = !in_s_[i];
  }

  const Graph& g_;
  std::vector<bool> in_s_;
  std::size_t size_s_ = 0;
};

std::size_t width_of(const Graph& g, const std::vector<bool>& in_s) {
  std::size_t w = 0;
  for (const Edge& e : g.edges())
    if (in_s[static_cast<std::size_t>(e.u)] != in_s[static_cast<std::size_t>(e.v)]) ++w;
  return w;
}

}  // namespace

Cut balanced_cut_spectral(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  if (n < 2) throw Error(ErrorCode::TooSmall, "balanced cut needs at least 2 vertices");
  const std::size_t cap = balance_cap(n);
  const std::size_t lo = std::max<std::size_t>(1, n - cap);
  const std::size_t hi = std::min(cap, n - 1);
  if (lo > hi) throw Error(ErrorCode::OracleFailure, "no balanced prefix size");

  const auto fiedler = fiedler_vector(g, seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return fiedler[static_cast<std::size_t>(a)] < fiedler[static_cast<std::size_t>(b)];
  });

  std::vector<std::size_t> sizes;
  const std::size_t span = hi - lo;
  if (span + 1 <= kSweepThresholds) {
    for (std::size_t k = lo; k <= hi; ++k) sizes.push_back(k);
  } else {
    for (std::size_t i = 0; i < kSweepThresholds; ++i)
      sizes.push_back(lo + (i * span + (kSweepThresholds - 1) / 2) / (kSweepThresholds - 1));
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  }

  std::vector<bool> best_side;
  std::size_t best_width = static_cast<std::size_t>(-1);
  for (std::size_t k : sizes) {
    std::vector<bool> in_s(n, false);
    for (std::size_t i = 0; i < k; ++i) in_s[static_cast<std::size_t>(order[i])] = true;
    const std::size_t w = width_of(g, in_s);
    if (w < best_width) {
      best_width = w;
      best_side = std::move(in_s);
    }
  }

  LocalSearch search(g, std::move(best_side));
  const std::size_t round_cap = 10 * n + 100;
  for (std::size_t round = 0; round < round_cap && search.improve(); ++round) {
  }

  std::vector<Vertex> members;
  const auto& side = search.side();
  const bool flip = !side[0];
  for (std::size_t v = 0; v < n; ++v)
    if (side[v] != flip) members.push_back(static_cast<Vertex>(v));
  return make_cut(g, VertexSet(std::move(members), n));
}

}  // namespace stc
