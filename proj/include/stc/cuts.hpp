#pragma once

#include <cstdint>
#include <string_view>

#include "stc/graph.hpp"
#include "stc/rational.hpp"

namespace stc {

inline constexpr std::size_t kDefaultExactLimit = 20;

/// Largest side allowed in a 2/3-balanced cut of n vertices: floor(2n/3).
inline constexpr std::size_t balance_cap(std::size_t n) noexcept { return 2 * n / 3; }

enum class OracleKind { Exact, SpectralKL };

std::string_view oracle_name(OracleKind kind) noexcept;

/// Black-box balanced-cut contract used by the decomposer. The exact kind
/// returns a minimum-width 2/3-balanced cut, so its width is at most b(G)
/// (alpha = 1); the spectral kind carries no approximation certificate.
struct CutOracle {
  OracleKind kind = OracleKind::Exact;
  std::size_t exact_limit = kDefaultExactLimit;
  std::uint64_t seed = 0;

  bool certified() const noexcept { return kind == OracleKind::Exact; }
  std::string_view guarantee() const noexcept { return certified() ? "alpha=1" : "uncertified"; }
};

/// Minimum-width cut with |S| = floor(n/2); width = b(G). Ties go to the
/// lexicographically smallest S. Throws TooSmall (n < 2) or TooLarge.
Cut bisection_exact(const Graph& g, std::size_t limit = kDefaultExactLimit);

/// Both sides nonempty and at most balance_cap(n). Throws TooSmall,
/// TooLarge (exact kind), DisconnectedInput or OracleFailure.
Cut balanced_cut(const Graph& g, const CutOracle& oracle);

/// Minimum over all 2/3-balanced cuts; S is the side holding vertex 0.
Cut balanced_cut_exact(const Graph& g, std::size_t limit = kDefaultExactLimit);

/// Fiedler-vector sweep over at most 64 balanced prefixes, then best-improvement
/// boundary moves and swaps until no move lowers the width.
Cut balanced_cut_spectral(const Graph& g, std::uint64_t seed);

struct ExpansionCertificate {
  Rational value;
  VertexSet witness;  // lexicographically smallest minimiser with |A| <= |V \ A|
};

/// beta(G) = min over nonempty proper A of e(A, V \ A) / min(|A|, |V \ A|).
/// Throws SingleVertex (n == 1) or TooLarge.
ExpansionCertificate edge_expansion_exact(const Graph& g, std::size_t limit = kDefaultExactLimit);

/// Ratio e(A, V \ A) / min(|A|, |V \ A|) for a given proper nonempty A.
Rational expansion_ratio(const Graph& g, const VertexSet& a);

struct ExpanderResult {
  VertexSet vertices;
  bool certified = false;
  Rational expansion;  // exact beta of the induced subgraph on `vertices`
  std::size_t removals = 0;
};

/// Repeatedly deletes the smallest set A (at most half of what remains) with
/// e(A, rest) / |A| < target, then certifies the expansion of what is left.
/// Throws Exhausted if nothing remains, TooSmall or TooLarge.
ExpanderResult extract_expander(const Graph& g, Rational target, std::size_t limit = kDefaultExactLimit);

}  // namespace stc
