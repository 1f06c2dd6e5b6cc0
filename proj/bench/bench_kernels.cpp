// Serial references vs OpenMP kernels. Each pair runs on identical inputs;
// compare the */serial and */parallel rows (OMP_NUM_THREADS sets the width).

#include <benchmark/benchmark.h>

#include "stc/cuts.hpp"
#include "stc/decomposer.hpp"
#include "stc/generators.hpp"
#include "stc/kernels.hpp"
#include "stc/spantree.hpp"

namespace {

using namespace stc;

Graph instance(std::int64_t n) {
  return generate(Family::GnpConnected, {static_cast<std::size_t>(n), 0, 0.3}, 42);
}

template <class Kernel>
void run_kernel(benchmark::State& state, Kernel kernel) {
  const Graph g = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(g));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void bisection_serial(benchmark::State& s) { run_kernel(s, kernels::min_bisection_serial); }
void bisection_parallel(benchmark::State& s) { run_kernel(s, kernels::min_bisection_parallel); }
void balanced_serial(benchmark::State& s) {
  run_kernel(s, [](const Graph& g) { return kernels::min_balanced_cut_serial(g, balance_cap(g.n())); });
}
void balanced_parallel(benchmark::State& s) {
  run_kernel(s, [](const Graph& g) { return kernels::min_balanced_cut_parallel(g, balance_cap(g.n())); });
}
void expansion_serial(benchmark::State& s) { run_kernel(s, kernels::min_expansion_serial); }
void expansion_parallel(benchmark::State& s) { run_kernel(s, kernels::min_expansion_parallel); }
void hereditary_serial(benchmark::State& s) { run_kernel(s, kernels::hereditary_bisection_serial); }
void hereditary_parallel(benchmark::State& s) { run_kernel(s, kernels::hereditary_bisection_parallel); }

BENCHMARK(bisection_serial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(bisection_parallel)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(balanced_serial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(balanced_parallel)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(expansion_serial)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(expansion_parallel)->DenseRange(14, 20, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(hereditary_serial)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(hereditary_parallel)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

// Whole decomposition with sibling subproblems as tasks vs one thread.
void decompose(benchmark::State& state, OracleKind kind, bool parallel) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Graph g = kind == OracleKind::Exact ? instance(state.range(0))
                                             : generate(Family::RandomRegular, {n, 4, 0.0}, 7);
  const CutOracle oracle{kind, kDefaultExactLimit, 0};
  for (auto _ : state) benchmark::DoNotOptimize(cong_span_tree(g, oracle, parallel));
}
BENCHMARK_CAPTURE(decompose, exact/serial, OracleKind::Exact, false)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decompose, exact/parallel, OracleKind::Exact, true)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decompose, spectral/serial, OracleKind::SpectralKL, false)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decompose, spectral/parallel, OracleKind::SpectralKL, true)->Arg(512)->Unit(benchmark::kMillisecond);

// Path-accumulation congestion vs the split-and-count reference.
void congestion(benchmark::State& state, bool naive) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Graph g = generate(Family::RandomRegular, {n, 4, 0.0}, 3);
  const SpanningTree t = bfs_tree(g);
  for (auto _ : state) benchmark::DoNotOptimize(naive ? tree_congestion_naive(g, t) : tree_congestion(g, t));
}
BENCHMARK_CAPTURE(congestion, naive, true)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(congestion, accumulate, false)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
