#include "stc/bounds.hpp"

#include <algorithm>

#include "stc/errors.hpp"
#include "stc/kernels.hpp"
#include "stc/random.hpp"

namespace stc {

namespace {

std::size_t require_degree(const Graph& g) {
  const std::size_t delta = max_degree(g);
  if (delta == 0) throw Error(ErrorCode::EdgelessGraph, "bound needs at least one edge");
  return delta;
}

std::int64_t ceil_div(std::size_t a, std::size_t b) { return static_cast<std::int64_t>((a + b - 1) / b); }

VertexSet to_host(const Subgraph& sub, const VertexSet& local) {
  std::vector<Vertex> ids;
  ids.reserve(local.size());
  for (Vertex v : local) ids.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  return VertexSet(std::move(ids), static_cast<std::size_t>(sub.to_parent.back()) + 1);
}

VertexSet to_local(const Subgraph& sub, const VertexSet& host) {
  std::vector<Vertex> ids;
  for (Vertex v : host) {
    auto it = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), v);
    if (it == sub.to_parent.end() || *it != v)
      throw Error(ErrorCode::VerificationFailed, "witness vertex outside the subgraph");
    ids.push_back(static_cast<Vertex>(it - sub.to_parent.begin()));
  }
  return VertexSet(std::move(ids), sub.to_parent.size());
}

// Lemma value of G[h] without building the certificate; mask-based.
Rational lemma_value(const Graph& g, Mask h, std::size_t delta) {
  const int size = popcount(h);
  if (size < 2) return Rational(0);
  const Subgraph sub = induced_subgraph(g, VertexSet::from_mask(h));
  const auto beta = kernels::min_expansion_serial(sub.graph);
  return Rational(beta.crossing, beta.size) * ceil_div(static_cast<std::size_t>(size) - 1, delta);
}

bool better_lemma(const Rational& value, Mask h, const Rational& best_value, Mask best_h) {
  if (best_h == 0) return true;
  if (value != best_value) return value > best_value;
  if (popcount(h) != popcount(best_h)) return popcount(h) > popcount(best_h);
  return kernels::lex_less(h, best_h);
}

// First `size` vertices of a BFS from root, among vertices below mask_n.
Mask bfs_ball(const Graph& g, Vertex root, std::size_t size, std::size_t mask_n) {
  std::vector<Vertex> queue{root};
  Mask ball = Mask{1} << root;
  for (std::size_t head = 0; head < queue.size() && queue.size() < size; ++head)
    for (Vertex w : g.neighbors(queue[head])) {
      if (static_cast<std::size_t>(w) >= mask_n || (ball >> w & 1)) continue;
      ball |= Mask{1} << w;
      queue.push_back(w);
      if (queue.size() == size) break;
    }
  return ball;
}

}  // namespace

std::string_view certificate_name(CertificateKind kind) noexcept {
  switch (kind) {
    case CertificateKind::LemmaLb1: return "lemma_lb1";
    case CertificateKind::CorollaryLb2: return "corollary_lb2";
    case CertificateKind::Averaging: return "averaging";
  }
  return "unknown";
}

Rational lemma1_stated_value(const Graph& g, const VertexSet& h, std::size_t limit) {
  const std::size_t delta = require_degree(g);
  if (h.size() > limit) throw Error(ErrorCode::TooLarge, "subgraph exceeds exact limit");
  if (h.size() < 2) return Rational(0);
  const Subgraph sub = induced_subgraph(g, h);
  return edge_expansion_exact(sub.graph, limit).value * static_cast<std::int64_t>(h.size()) /
         static_cast<std::int64_t>(delta);
}

BoundCertificate lemma1_bound(const Graph& g, const VertexSet& h, std::size_t limit) {
  const std::size_t delta = require_degree(g);
  if (h.size() > limit) throw Error(ErrorCode::TooLarge, "subgraph exceeds exact limit");
  BoundCertificate cert;
  cert.kind = CertificateKind::LemmaLb1;
  cert.max_degree = delta;
  cert.subgraph = h;
  cert.value = 0;
  if (h.size() < 2) return cert;
  const Subgraph sub = induced_subgraph(g, h);
  auto beta = edge_expansion_exact(sub.graph, limit);
  cert.value = beta.value * ceil_div(h.size() - 1, delta);
  cert.expansion = ExpansionCertificate{beta.value, to_host(sub, beta.witness)};
  return cert;
}

HereditaryBisection hereditary_bisection_exact(const Graph& g, std::size_t limit) {
  if (g.n() < 2) throw Error(ErrorCode::TooSmall, "hereditary bisection needs at least 2 vertices");
  if (g.n() > limit || g.n() > kernels::kMaxMaskVertices)
    throw Error(ErrorCode::TooLarge, std::to_string(g.n()) + " vertices exceeds hb limit " +
                                         std::to_string(limit));
  const auto best = kernels::hereditary_bisection_parallel(g);
  return {best.value, VertexSet::from_mask(best.subset)};
}

BoundCertificate corollary_bound(const Graph& g, std::size_t limit) {
  const std::size_t delta = require_degree(g);
  const auto hb = hereditary_bisection_exact(g, limit);
  BoundCertificate cert;
  cert.kind = CertificateKind::CorollaryLb2;
  cert.max_degree = delta;
  cert.subgraph = hb.witness;
  cert.hereditary_bisection = hb.value;
  cert.value = Rational(static_cast<std::int64_t>(2 * hb.value), static_cast<std::int64_t>(3 * delta));
  const Subgraph sub = induced_subgraph(g, hb.witness);
  const Cut local = bisection_exact(sub.graph, limit);
  Cut host{to_host(sub, local.side_s), {}};
  for (const Edge& e : local.crossing_edges)
    host.crossing_edges.emplace_back(sub.to_parent[static_cast<std::size_t>(e.u)],
                                     sub.to_parent[static_cast<std::size_t>(e.v)]);
  std::sort(host.crossing_edges.begin(), host.crossing_edges.end());
  cert.bisection = std::move(host);
  return cert;
}

BoundCertificate averaging_bound(const Graph& g) {
  BoundCertificate cert;
  cert.kind = CertificateKind::Averaging;
  cert.max_degree = max_degree(g);
  cert.value = g.n() < 2 ? Rational(0) : Rational(ceil_div(g.m(), g.n() - 1));
  return cert;
}

BoundCertificate best_lemma_certificate(const Graph& g, const BoundSearchOptions& options) {
  const std::size_t delta = require_degree(g);
  const std::size_t n = g.n();
  Mask best_h = 0;
  Rational best_value(0);

  if (n <= std::min(options.exhaustive_limit, options.exact_limit)) {
    const Mask all = full_mask(n);
    for (Mask h = all; h != 0; --h) {
      if (popcount(h) < 2) continue;
      const Rational value = lemma_value(g, h, delta);
      if (better_lemma(value, h, best_value, best_h)) {
        best_value = value;
        best_h = h;
      }
    }
    return lemma1_bound(g, VertexSet::from_mask(best_h), options.exact_limit);
  }

  const std::size_t cap = std::min({options.search_subgraph_cap, options.exact_limit, n});
  const std::size_t mask_n = std::min(n, kernels::kMaxMaskVertices);
  Rng rng(options.seed);
  std::size_t evaluations = 0;
  auto evaluate = [&](Mask h) {
    ++evaluations;
    const Rational value = lemma_value(g, h, delta);
    if (better_lemma(value, h, best_value, best_h)) {
      best_value = value;
      best_h = h;
    }
    return value;
  };

  // Masks cover the first 62 vertices; larger graphs are searched there only.
  while (evaluations < options.effort) {
    const auto root = static_cast<Vertex>(uniform_below(rng, mask_n));
    const std::size_t size = 2 + uniform_below(rng, cap - 1);
    Mask current = bfs_ball(g, root, size, mask_n);
    if (popcount(current) < 2) {
      ++evaluations;
      continue;
    }
    Rational current_value = evaluate(current);
    bool improved = true;
    while (improved && evaluations < options.effort) {
      improved = false;
      std::vector<Mask> moves;
      Mask frontier = 0;
      for (Mask rest = current; rest; rest &= rest - 1)
        for (Vertex w : g.neighbors(__builtin_ctzll(rest)))
          if (static_cast<std::size_t>(w) < mask_n) frontier |= Mask{1} << w;
      frontier &= ~current;
      if (static_cast<std::size_t>(popcount(current)) < cap)
        for (Mask rest = frontier; rest; rest &= rest - 1) moves.push_back(current | (rest & (~rest + 1)));
      if (popcount(current) > 2)
        for (Mask rest = current; rest; rest &= rest - 1) moves.push_back(current & ~(rest & (~rest + 1)));
      for (Mask next : moves) {
        if (evaluations >= options.effort) break;
        const Rational value = evaluate(next);
        if (value > current_value) {
          current = next;
          current_value = value;
          improved = true;
          break;
        }
      }
    }
  }
  if (best_h == 0) best_h = bfs_ball(g, 0, 2, mask_n);
  return lemma1_bound(g, VertexSet::from_mask(best_h), options.exact_limit);
}

std::vector<BoundCertificate> all_certificates(const Graph& g, const BoundSearchOptions& options) {
  std::vector<BoundCertificate> out;
  if (g.n() >= 2 && max_degree(g) >= 1) {
    out.push_back(best_lemma_certificate(g, options));
    if (g.n() <= options.hb_limit) out.push_back(corollary_bound(g, options.hb_limit));
  }
  out.push_back(averaging_bound(g));
  return out;
}

BoundCertificate best_certificate(const Graph& g, const BoundSearchOptions& options) {
  auto certs = all_certificates(g, options);
  std::size_t best = 0;
  for (std::size_t i = 1; i < certs.size(); ++i)
    if (certs[i].value > certs[best].value) best = i;
  return std::move(certs[best]);
}

Rational recompute_value(const Graph& g, const BoundCertificate& cert) {
  switch (cert.kind) {
    case CertificateKind::Averaging:
      return g.n() < 2 ? Rational(0) : Rational(ceil_div(g.m(), g.n() - 1));
    case CertificateKind::LemmaLb1: {
      const std::size_t delta = require_degree(g);
      if (cert.subgraph.size() < 2) return Rational(0);
      if (!cert.expansion) throw Error(ErrorCode::VerificationFailed, "lemma certificate lacks an expansion witness");
      const Subgraph sub = induced_subgraph(g, cert.subgraph);
      const Rational ratio = expansion_ratio(sub.graph, to_local(sub, cert.expansion->witness));
      if (ratio != cert.expansion->value)
        throw Error(ErrorCode::VerificationFailed, "expansion witness does not reproduce its value");
      return ratio * ceil_div(cert.subgraph.size() - 1, delta);
    }
    case CertificateKind::CorollaryLb2: {
      const std::size_t delta = require_degree(g);
      if (!cert.bisection) throw Error(ErrorCode::VerificationFailed, "corollary certificate lacks a bisection");
      const Subgraph sub = induced_subgraph(g, cert.subgraph);
      const VertexSet local_side = to_local(sub, cert.bisection->side_s);
      const std::size_t k = local_side.size();
      if (k != sub.graph.n() / 2) throw Error(ErrorCode::VerificationFailed, "bisection is unbalanced");
      const std::size_t width = make_cut(sub.graph, local_side).width();
      if (width != cert.hereditary_bisection || width != cert.bisection->width())
        throw Error(ErrorCode::VerificationFailed, "bisection width does not match hb");
      return Rational(static_cast<std::int64_t>(2 * width), static_cast<std::int64_t>(3 * delta));
    }
  }
  throw Error(ErrorCode::InternalError, "unknown certificate kind");
}

}  // namespace stc
