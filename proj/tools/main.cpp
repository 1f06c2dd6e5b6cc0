#include <CLI11.hpp>
#include <iostream>

#include "cli.hpp"
#include "stc/errors.hpp"

namespace {

using stc::ErrorCode;
using namespace stc::cli;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader:
    case ErrorCode::MalformedLine:
    case ErrorCode::DuplicateEdge:
    case ErrorCode::SelfLoop:
    case ErrorCode::VertexOutOfRange:
    case ErrorCode::EdgeCountMismatch:
      return kIo;
    case ErrorCode::DisconnectedInput:
    case ErrorCode::DisconnectedHost:
      return kDisconnected;
    case ErrorCode::BudgetExceeded:
      return kBudget;
    case ErrorCode::VerificationFailed:
    case ErrorCode::InternalError:
    case ErrorCode::OracleFailure:
    case ErrorCode::NotSpanningTree:
    case ErrorCode::TreeEdgeNotInGraph:
      return kInvariant;
    default:
      return kParams;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning tree congestion toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph as an edge list");
  gen_cmd->add_option("--family", gen.family, "path|cycle|complete|grid|random_regular|gnp_connected|apex_expander")
      ->required();
  gen_cmd->add_option("--n", gen.n, "Number of vertices (apex_expander: of the regular part)")->required();
  gen_cmd->add_option("--d", gen.d, "Degree (random_regular, apex_expander) or grid columns");
  gen_cmd->add_option("--p", gen.p, "Edge probability (gnp_connected)");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("-o,--out", gen.out, "Output path (default stdout)");

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Build a low-congestion spanning tree by recursive balanced cuts");
  solve_cmd->add_option("-i,--input", solve.input)->required();
  solve_cmd->add_option("--oracle", solve.oracle)->check(CLI::IsMember({"exact", "spectral"}));
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--tree-out", solve.tree_out, "Write the tree as an edge list");
  solve_cmd->add_option("--dot", solve.dot_out, "Write the decomposition tree as DOT");
  solve_cmd->add_option("--out", solve.out, "Report path (default stdout)");
  solve_cmd->add_flag("--timing", solve.timing, "Include wall-clock milliseconds (breaks byte-stability)");

  ExactOptions exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact spanning tree congestion by branch and bound");
  exact_cmd->add_option("-i,--input", exact.input)->required();
  exact_cmd->add_option("--budget", exact.budget, "Largest spanning-tree count to attempt");
  exact_cmd->add_option("--out", exact.out);
  exact_cmd->add_flag("--timing", exact.timing);

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Lower-bound certificates on the spanning tree congestion");
  bounds_cmd->add_option("-i,--input", bounds.input)->required();
  bounds_cmd->add_option("--mode", bounds.mode)->check(CLI::IsMember({"exact", "search"}));
  bounds_cmd->add_option("--effort", bounds.effort, "Subgraph evaluations for --mode search");
  bounds_cmd->add_option("--seed", bounds.seed);
  bounds_cmd->add_option("--out", bounds.out);

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite on one graph or on all small graphs");
  verify_cmd->add_option("-i,--input", verify.input);
  verify_cmd->add_option("--tree", verify.tree, "Check this tree instead of solving");
  verify_cmd->add_option("--oracle", verify.oracle)->check(CLI::IsMember({"exact", "spectral"}));
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--small-exhaustive", verify.small_exhaustive, "Every connected graph on <= N vertices")
      ->check(CLI::Range(1, 9));
  verify_cmd->add_option("--budget", verify.budget, "Spanning-tree count cap for the exact STC comparison");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Ratio table from a TOML instance spec");
  bench_cmd->add_option("--spec", bench.spec)->required();
  bench_cmd->add_option("--out", bench.out, "CSV path (default stdout)");
  bench_cmd->add_flag("--timing", bench.timing, "Fill the millis column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParams;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*exact_cmd) return run_exact(exact);
    if (*bounds_cmd) return run_bounds(bounds);
    if (*verify_cmd) return run_verify(verify);
    if (*bench_cmd) return run_bench(bench);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const stc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  }
  return kParams;
}
