#include "stc/kernels.hpp"

#include <omp.h>

namespace stc::kernels {

namespace {

bool better_cut(const MaskChoice& a, const MaskChoice& b) {
  if (a.side == 0) return false;
  if (b.side == 0) return true;
  return a.width < b.width || (a.width == b.width && lex_less(a.side, b.side));
}

bool better_ratio(const RatioChoice& a, const RatioChoice& b) {
  if (a.side == 0) return false;
  if (b.side == 0) return true;
  const auto lhs = a.crossing * b.size;
  const auto rhs = b.crossing * a.size;
  return lhs < rhs || (lhs == rhs && lex_less(a.side, b.side));
}

bool better_hered(const HeredChoice& a, const HeredChoice& b) {
  if (a.subset == 0) return false;
  if (b.subset == 0) return true;
  if (a.value != b.value) return a.value > b.value;
  const int pa = popcount(a.subset), pb = popcount(b.subset);
  if (pa != pb) return pa > pb;
  return lex_less(a.subset, b.subset);
}

// e(S, W \ S) restricted to the vertices in W.
inline std::size_t width_within(const Graph& g, Mask s, Mask within) {
  const Mask outside = within & ~s;
  std::size_t w = 0;
  for (Mask rest = s; rest; rest &= rest - 1)
    w += static_cast<std::size_t>(popcount(g.mask(__builtin_ctzll(rest)) & outside));
  return w;
}

inline std::size_t induced_edges(const Graph& g, Mask s) {
  std::size_t twice = 0;
  for (Mask rest = s; rest; rest &= rest - 1)
    twice += static_cast<std::size_t>(popcount(g.mask(__builtin_ctzll(rest)) & s));
  return twice / 2;
}

// Next mask with the same popcount (Gosper's hack).
inline Mask next_combination(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Bisection

MaskChoice min_bisection_serial(const Graph& g) {
  const std::size_t n = g.n();
  const std::size_t k = n / 2;
  const Mask all = full_mask(n);
  MaskChoice best;
  for (Mask s = (Mask{1} << k) - 1; s <= all && s != 0; s = next_combination(s)) {
    const MaskChoice cand{width_within(g, s, all), s};
    if (better_cut(cand, best)) best = cand;
    if (s == (all ^ ((Mask{1} << (n - k)) - 1))) break;  // highest k-subset reached
  }
  return best;
}

MaskChoice min_bisection_parallel(const Graph& g) {
  const std::size_t n = g.n();
  const int k = static_cast<int>(n / 2);
  const Mask all = full_mask(n);
  const auto total = static_cast<long long>(all) + 1;
  MaskChoice best;
#pragma omp parallel
  {
    MaskChoice local;
#pragma omp for schedule(static) nowait
    for (long long x = 0; x < total; ++x) {
      const auto s = static_cast<Mask>(x);
      if (popcount(s) != k) continue;
      const MaskChoice cand{width_within(g, s, all), s};
      if (better_cut(cand, local)) local = cand;
    }
#pragma omp critical
    if (better_cut(local, best)) best = local;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Balanced cut

MaskChoice min_balanced_cut_serial(const Graph& g, std::size_t cap) {
  const std::size_t n = g.n();
  const Mask all = full_mask(n);
  MaskChoice best;
  for (Mask x = 0; x < (Mask{1} << (n - 1)); ++x) {
    const Mask s = (x << 1) | 1;
    const auto size = static_cast<std::size_t>(popcount(s));
    if (size > cap || n - size > cap || size == n) continue;
    const MaskChoice cand{width_within(g, s, all), s};
    if (better_cut(cand, best)) best = cand;
  }
  return best;
}

MaskChoice min_balanced_cut_parallel(const Graph& g, std::size_t cap) {
  const std::size_t n = g.n();
  const Mask all = full_mask(n);
  const auto total = static_cast<long long>(Mask{1} << (n - 1));
  MaskChoice best;
#pragma omp parallel
  {
    MaskChoice local;
#pragma omp for schedule(static) nowait
    for (long long x = 0; x < total; ++x) {
      const Mask s = (static_cast<Mask>(x) << 1) | 1;
      const auto size = static_cast<std::size_t>(popcount(s));
      if (size > cap || n - size > cap || size == n) continue;
      const MaskChoice cand{width_within(g, s, all), s};
      if (better_cut(cand, local)) local = cand;
    }
#pragma omp critical
    if (better_cut(local, best)) best = local;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Edge expansion

RatioChoice min_expansion_serial(const Graph& g) {
  const std::size_t n = g.n();
  const Mask all = full_mask(n);
  RatioChoice best;
  for (Mask a = 1; a < all; ++a) {
    const auto size = static_cast<std::size_t>(popcount(a));
    if (2 * size > n) continue;
    const RatioChoice cand{static_cast<std::int64_t>(width_within(g, a, all)),
                           static_cast<std::int64_t>(size), a};
    if (better_ratio(cand, best)) best = cand;
  }
  return best;
}

RatioChoice min_expansion_parallel(const Graph& g) {
  const std::size_t n = g.n();
  const Mask all = full_mask(n);
  const auto total = static_cast<long long>(all);
  RatioChoice best;
#pragma omp parallel
  {
    RatioChoice local;
#pragma omp for schedule(static) nowait
    for (long long x = 1; x < total; ++x) {
      const auto a = static_cast<Mask>(x);
      const auto size = static_cast<std::size_t>(popcount(a));
      if (2 * size > n) continue;
      const RatioChoice cand{static_cast<std::int64_t>(width_within(g, a, all)),
                             static_cast<std::int64_t>(size), a};
      if (better_ratio(cand, local)) local = cand;
    }
#pragma omp critical
    if (better_ratio(local, best)) best = local;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Hereditary bisection

std::size_t induced_bisection_width(const Graph& g, Mask within, std::size_t stop_below) {
  const int k = popcount(within) / 2;
  std::size_t best = static_cast<std::size_t>(-1);
  // Submasks of `within` in decreasing order; only size-k halves count.
  for (Mask t = within;; t = (t - 1) & within) {
    if (popcount(t) == k) {
      const std::size_t w = width_within(g, t, within);
      if (w < best) {
        best = w;
        if (best < stop_below) return best;
      }
    }
    if (t == 0) break;
  }
  return best;
}

namespace {

// Candidate S can beat `incumbent` only if b(G[S]) >= incumbent.value, which
// needs |E(S)| >= incumbent.value since b(G[S]) <= |E(S)|.
void consider_subset(const Graph& g, Mask s, HeredChoice& incumbent) {
  if (popcount(s) < 2) return;
  if (incumbent.subset != 0 && induced_edges(g, s) < incumbent.value) return;
  const std::size_t floor_value = incumbent.subset != 0 ? incumbent.value : 0;
  const std::size_t b = induced_bisection_width(g, s, floor_value);
  const HeredChoice cand{b, s};
  if (better_hered(cand, incumbent)) incumbent = cand;
}

}  // namespace

HeredChoice hereditary_bisection_serial(const Graph& g) {
  const Mask all = full_mask(g.n());
  HeredChoice best;
  for (Mask s = all;; --s) {
    consider_subset(g, s, best);
    if (s == 0) break;
  }
  return best;
}

HeredChoice hereditary_bisection_parallel(const Graph& g) {
  const Mask all = full_mask(g.n());
  const auto total = static_cast<long long>(all) + 1;
  HeredChoice best;
#pragma omp parallel
  {
    HeredChoice local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long long x = total - 1; x >= 0; --x) consider_subset(g, static_cast<Mask>(x), local);
#pragma omp critical
    if (better_hered(local, best)) best = local;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Sparse-set search for expander extraction

Mask smallest_sparse_set(const Graph& g, Mask within, std::int64_t target_num, std::int64_t target_den) {
  const int half = popcount(within) / 2;
  Mask best = 0;
  int best_size = half + 1;
  for (Mask a = (within - 1) & within; a != 0; a = (a - 1) & within) {
    const int size = popcount(a);
    if (size > half || size > best_size) continue;
    const auto crossing = static_cast<std::int64_t>(width_within(g, a, within));
    if (crossing * target_den >= target_num * size) continue;
    if (size < best_size || lex_less(a, best)) {
      best = a;
      best_size = size;
    }
  }
  return best;
}

}  // namespace stc::kernels
