#include "stc/cuts.hpp"

#include "stc/errors.hpp"
#include "stc/kernels.hpp"

namespace stc {

namespace {

void require_exact_size(const Graph& g, std::size_t limit, std::size_t min_n) {
  if (g.n() < min_n)
    throw Error(ErrorCode::TooSmall, "needs at least " + std::to_string(min_n) + " vertices");
  if (g.n() > limit || g.n() > kernels::kMaxMaskVertices)
    throw Error(ErrorCode::TooLarge, std::to_string(g.n()) + " vertices exceeds exact limit " +
                                         std::to_string(limit));
}

}  // namespace

std::string_view oracle_name(OracleKind kind) noexcept {
  return kind == OracleKind::Exact ? "exact" : "spectral";
}

Cut bisection_exact(const Graph& g, std::size_t limit) {
  require_exact_size(g, limit, 2);
  const auto best = kernels::min_bisection_parallel(g);
  return make_cut(g, VertexSet::from_mask(best.side));
}

Cut balanced_cut_exact(const Graph& g, std::size_t limit) {
  require_exact_size(g, limit, 2);
  const auto best = kernels::min_balanced_cut_parallel(g, balance_cap(g.n()));
  if (best.side == 0) throw Error(ErrorCode::OracleFailure, "no 2/3-balanced cut exists");
  return make_cut(g, VertexSet::from_mask(best.side));
}

Cut balanced_cut(const Graph& g, const CutOracle& oracle) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "balanced cut needs at least 2 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "balanced cut of a disconnected graph");
  Cut cut = oracle.kind == OracleKind::Exact ? balanced_cut_exact(g, oracle.exact_limit)
                                             : balanced_cut_spectral(g, oracle.seed);
  const std::size_t s = cut.side_s.size();
  if (s == 0 || s == g.n() || s > balance_cap(g.n()) || g.n() - s > balance_cap(g.n()))
    throw Error(ErrorCode::OracleFailure, "oracle returned an unbalanced cut");
  return cut;
}

Rational expansion_ratio(const Graph& g, const VertexSet& a) {
  if (a.empty() || a.size() >= g.n()) throw Error(ErrorCode::InvalidParams, "A must be a proper nonempty subset");
  const auto crossing = static_cast<std::int64_t>(make_cut(g, a).width());
  const auto smaller = static_cast<std::int64_t>(std::min(a.size(), g.n() - a.size()));
  return Rational(crossing, smaller);
}

ExpansionCertificate edge_expansion_exact(const Graph& g, std::size_t limit) {
  if (g.n() == 1) throw Error(ErrorCode::SingleVertex, "expansion of a single vertex is undefined");
  require_exact_size(g, limit, 2);
  const auto best = kernels::min_expansion_parallel(g);
  return {Rational(best.crossing, best.size), VertexSet::from_mask(best.side)};
}

ExpanderResult extract_expander(const Graph& g, Rational target, std::size_t limit) {
  require_exact_size(g, limit, 2);
  Mask remaining = full_mask(g.n());
  std::size_t removals = 0;
  while (popcount(remaining) >= 2) {
    const Mask sparse =
        kernels::smallest_sparse_set(g, remaining, target.numerator(), target.denominator());
    if (sparse == 0) break;
    remaining &= ~sparse;
    ++removals;
  }
  if (remaining == 0) throw Error(ErrorCode::Exhausted, "every vertex was removed");

  ExpanderResult result{VertexSet::from_mask(remaining), false, Rational(0), removals};
  if (popcount(remaining) >= 2) {
    const Subgraph sub = induced_subgraph(g, result.vertices);
    result.expansion = edge_expansion_exact(sub.graph, limit).value;
  }
  result.certified = result.expansion >= target;
  return result;
}

}  // namespace stc
