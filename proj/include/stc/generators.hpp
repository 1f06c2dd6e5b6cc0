#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stc/graph.hpp"

namespace stc {

enum class Family { Path, Cycle, Complete, Grid, RandomRegular, GnpConnected, ApexExpander };

std::optional<Family> family_from_name(std::string_view name);
std::string_view family_name(Family f) noexcept;

struct GenParams {
  std::size_t n = 0;
  std::size_t d = 0;    // degree for random_regular/apex_expander; column count for grid (0 = square)
  double p = 0.0;       // edge probability for gnp_connected
};

/// Deterministic for a fixed (family, params, seed).
/// Throws InvalidParams, or GenerationFailed once the retry budget is spent.
Graph generate(Family family, const GenParams& params, std::uint64_t seed);

/// Pairing-model d-regular graph; loops and multi-edges are rejected and the
/// pairing redrawn, at most `max_retries` times.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, int max_retries = 1000);

/// Adds a vertex n adjacent to every vertex 0..n-1.
Graph add_apex(const Graph& g);

Graph petersen_graph();

}  // namespace stc
