#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stc/cuts.hpp"
#include "stc/generators.hpp"
#include "stc/spantree.hpp"

namespace stc::cli {

struct BenchJob {
  Family family = Family::Path;
  GenParams params;
  std::uint64_t seed = 0;
  OracleKind oracle = OracleKind::Exact;
};

struct BenchSpec {
  std::uint64_t stc_budget = kDefaultTreeBudget;
  std::vector<BenchJob> jobs;  // instance order x n x seed x oracle, as written
};

/// TOML bench spec:
///
///   stc_budget = 1000000            # optional
///   oracles = ["exact", "spectral"] # optional default for every instance
///   [[instances]]
///   family = "cycle"
///   n = [6, 7, 8]                   # or a single integer
///   d = 3                           # optional
///   p = 0.3                         # optional
///   seeds = [1, 2]                  # or seed = 1; default 0
///   oracles = ["exact"]             # optional override
///
/// Throws InvalidParams naming the offending key.
BenchSpec parse_bench_spec(const std::string& text, const std::string& source);

}  // namespace stc::cli
