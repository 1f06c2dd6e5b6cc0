#pragma once

// Exhaustive subset kernels behind the exact oracles. Each kernel has a
// serial reference and an OpenMP version; both return the same optimum and
// the same witness because ties are broken by a total order on masks.
//
// All kernels require g.n() <= kMaxMaskVertices.

#include <cstddef>
#include <cstdint>

#include "stc/graph.hpp"

namespace stc::kernels {

inline constexpr std::size_t kMaxMaskVertices = 62;

/// Lexicographic order of the sorted member lists of two vertex sets.
inline bool lex_less(Mask a, Mask b) noexcept {
  const Mask diff = a ^ b;
  if (!diff) return false;
  const Mask low = diff & (~diff + 1);
  if (a & low) return (b & ~(low - 1)) != 0;  // b continues past the common prefix with a larger id
  return (a & ~(low - 1)) == 0;                // a ended where b continues
}

struct MaskChoice {
  std::size_t width = 0;
  Mask side = 0;
};

/// Minimum e(S, V \ S) over |S| = floor(n/2); ties to the lexicographically
/// smallest S. Requires n >= 2.
MaskChoice min_bisection_serial(const Graph& g);
MaskChoice min_bisection_parallel(const Graph& g);

/// Minimum e(S, V \ S) over S containing vertex 0 with 1 <= |S|, |V \ S| <= cap;
/// ties to the lexicographically smallest S. Returns side = 0 if infeasible.
MaskChoice min_balanced_cut_serial(const Graph& g, std::size_t cap);
MaskChoice min_balanced_cut_parallel(const Graph& g, std::size_t cap);

struct RatioChoice {
  std::int64_t crossing = 0;
  std::int64_t size = 1;  // min(|A|, |V \ A|)
  Mask side = 0;
};

/// Minimum of e(A, V \ A) / |A| over nonempty A with |A| <= |V \ A|; ties to
/// the lexicographically smallest A. Requires n >= 2.
RatioChoice min_expansion_serial(const Graph& g);
RatioChoice min_expansion_parallel(const Graph& g);

/// Bisection width of the subgraph induced by `within`, using global masks.
std::size_t induced_bisection_width(const Graph& g, Mask within, std::size_t stop_below = 0);

struct HeredChoice {
  std::size_t value = 0;
  Mask subset = 0;
};

/// max over |S| >= 2 of b(G[S]); ties to larger |S|, then lexicographically
/// smallest S. Requires n >= 2.
HeredChoice hereditary_bisection_serial(const Graph& g);
HeredChoice hereditary_bisection_parallel(const Graph& g);

/// Smallest A inside `within` with 1 <= |A| <= |within|/2 and
/// e(A, within \ A) * target_den < target_num * |A| (size first, then
/// lexicographic). Returns 0 when there is none.
Mask smallest_sparse_set(const Graph& g, Mask within, std::int64_t target_num, std::int64_t target_den);

}  // namespace stc::kernels
