#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "stc/cuts.hpp"
#include "stc/graph.hpp"
#include "stc/rational.hpp"

namespace stc {

inline constexpr std::size_t kDefaultHbLimit = 12;

enum class CertificateKind { LemmaLb1, CorollaryLb2, Averaging };

std::string_view certificate_name(CertificateKind kind) noexcept;

/// Exact-rational lower bound on STC(G) together with what it was computed from.
struct BoundCertificate {
  CertificateKind kind = CertificateKind::Averaging;
  Rational value;
  std::size_t max_degree = 0;
  /// LemmaLb1: the subgraph H. CorollaryLb2: the vertex set S with b(G[S]) = hb(G).
  VertexSet subgraph;
  /// LemmaLb1 only: expansion of G[H], witness in host ids.
  std::optional<ExpansionCertificate> expansion;
  /// CorollaryLb2 only: the hereditary bisection value and a minimum bisection of G[S] in host ids.
  std::size_t hereditary_bisection = 0;
  std::optional<Cut> bisection;
};

/// The literal right-hand side beta(G[H]) * |H| / maxdeg(G).
///
/// This is NOT a valid lower bound in general: for G = H = K2 it evaluates to
/// 2 while STC(K2) = 1. The separator vertex of the spanning tree may itself
/// lie in H, leaving only |H| - 1 marked vertices to share among at most
/// maxdeg components. lemma1_bound uses the corrected count.
Rational lemma1_stated_value(const Graph& g, const VertexSet& h, std::size_t limit = kDefaultExactLimit);

/// Sound subgraph-expansion bound beta(G[H]) * ceil((|H| - 1) / maxdeg(G)).
/// A single-vertex H gives 0. Throws EdgelessGraph or TooLarge.
BoundCertificate lemma1_bound(const Graph& g, const VertexSet& h, std::size_t limit = kDefaultExactLimit);

struct HereditaryBisection {
  std::size_t value = 0;
  VertexSet witness;
};

/// hb(G) as the maximum of b(G[S]) over induced subgraphs with |S| >= 2.
/// Deleting edges never increases a bisection width, so induced subgraphs
/// attain the maximum over all subgraphs. Throws TooSmall or TooLarge.
HereditaryBisection hereditary_bisection_exact(const Graph& g, std::size_t limit = kDefaultHbLimit);

/// 2 * hb(G) / (3 * maxdeg(G)).
BoundCertificate corollary_bound(const Graph& g, std::size_t limit = kDefaultHbLimit);

/// ceil(m / (n - 1)): every graph edge loads at least one of the n - 1 tree edges.
BoundCertificate averaging_bound(const Graph& g);

struct BoundSearchOptions {
  std::size_t exact_limit = kDefaultExactLimit;
  std::size_t hb_limit = kDefaultHbLimit;
  /// Graphs up to this size get every induced subgraph tried for the lemma bound.
  std::size_t exhaustive_limit = 12;
  /// Largest H tried by the local search.
  std::size_t search_subgraph_cap = 12;
  /// Number of lemma evaluations the local search may spend.
  std::size_t effort = 2000;
  std::uint64_t seed = 0;
};

/// Best lemma certificate: exhaustive over induced subgraphs when small,
/// otherwise a seeded hill climb over connected vertex sets.
BoundCertificate best_lemma_certificate(const Graph& g, const BoundSearchOptions& options = {});

/// Every applicable certificate (lemma, corollary if hb is computable, averaging).
std::vector<BoundCertificate> all_certificates(const Graph& g, const BoundSearchOptions& options = {});

/// Maximum value among all_certificates; ties prefer lemma, then corollary.
BoundCertificate best_certificate(const Graph& g, const BoundSearchOptions& options = {});

/// Recomputes the value from the witness; equals cert.value for valid certificates.
Rational recompute_value(const Graph& g, const BoundCertificate& cert);

}  // namespace stc
