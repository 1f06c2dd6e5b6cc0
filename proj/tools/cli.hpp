#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "stc/cuts.hpp"
#include "stc/graph.hpp"

namespace stc::cli {

enum Exit : int { kOk = 0, kIo = 1, kParams = 2, kDisconnected = 3, kBudget = 4, kInvariant = 5 };

// File-system failures; everything else arrives as stc::Error.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant check failed; `name` identifies which one.
struct InvariantViolation : std::runtime_error {
  InvariantViolation(const std::string& name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name(name) {}
  std::string name;
};

std::string read_file(const std::string& path);
/// "-" or empty writes to stdout.
void write_output(const std::string& path, const std::string& content);
Graph load_graph(const std::string& path);
/// STC_EXACT_LIMIT, or the library default.
std::size_t exact_limit_from_env();
OracleKind parse_oracle(const std::string& name);

struct GenOptions {
  std::string family;
  std::size_t n = 0, d = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveOptions {
  std::string input;
  std::string oracle = "exact";
  std::uint64_t seed = 0;
  std::string tree_out, dot_out, out;
  bool timing = false;
};

struct ExactOptions {
  std::string input;
  std::uint64_t budget = 10'000'000;
  std::string out;
  bool timing = false;
};

struct BoundsOptions {
  std::string input;
  std::string mode = "exact";
  std::size_t effort = 2000;
  std::uint64_t seed = 0;
  std::string out;
};

struct VerifyOptions {
  std::string input;
  std::string tree;
  std::string oracle = "exact";
  std::uint64_t seed = 0;
  std::size_t small_exhaustive = 0;
  std::uint64_t budget = 1'000'000;
};

struct BenchOptions {
  std::string spec;
  std::string out;
  bool timing = false;
};

int run_gen(const GenOptions& o);
int run_solve(const SolveOptions& o);
int run_exact(const ExactOptions& o);
int run_bounds(const BoundsOptions& o);
int run_verify(const VerifyOptions& o);
int run_bench(const BenchOptions& o);

}  // namespace stc::cli
