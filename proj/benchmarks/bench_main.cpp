#include <benchmark/benchmark.h>

#include "hcpack/coloring.hpp"
#include "hcpack/harness.hpp"
#include "hcpack/posa.hpp"
#include "hcpack/process.hpp"

namespace hcpack {
namespace {

void BM_StreamToHittingTime(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  const auto mode = state.range(1) == 0 ? StreamMode::kFullShuffle : StreamMode::kRejection;
  std::uint64_t seed = 0;
  std::uint64_t edges = 0;
  for (auto _ : state) {
    EdgeStream s = new_stream(n, ++seed, mode);
    edges += hitting_time(s, 4);
  }
  state.counters["edges/s"] = benchmark::Counter(static_cast<double>(edges), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_StreamToHittingTime)->Args({1024, 0})->Args({4096, 0})->Args({4096, 1})->Args({16384, 1})
    ->Unit(benchmark::kMillisecond);

void BM_ColorEdges(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  EdgeStream s = new_stream(n, 7, StreamMode::kRejection);
  const std::uint64_t tau = hitting_time(s, 4);
  const auto edges = s.produced().first(tau);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    ColoringState col(n, ColoringParams{2, 0.1, ++seed, std::nullopt});
    for (std::uint64_t t = 1; t <= tau; ++t) col.color_edge(edges[t - 1], t);
    benchmark::DoNotOptimize(col.total_need());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * tau));
}
BENCHMARK(BM_ColorEdges)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Engine(benchmark::State& state) {
  const auto n = static_cast<Vertex>(state.range(0));
  EdgeStream s = new_stream(n, 11, StreamMode::kRejection);
  const std::uint64_t tau = hitting_time(s, 4);
  ColoringState col(n, ColoringParams{2, 0.1, 11, std::nullopt});
  for (std::uint64_t t = 1; t <= tau; ++t) col.color_edge(s.produced()[t - 1], t);
  const MergedColoring merged = merge_colors(col);
  const ColorClassGraph g(n, merged.classes[0].star, merged.classes[0].boosters);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_hamilton_cycle(g, EngineOptions{.seed = ++seed}).success());
}
BENCHMARK(BM_Engine)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Trial(benchmark::State& state) {
  TrialConfig c;
  c.n = static_cast<Vertex>(state.range(0));
  c.validation = static_cast<ValidationLevel>(state.range(1));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_trial(c, i++).tau);
}
BENCHMARK(BM_Trial)->Args({4096, 0})->Args({4096, 2})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hcpack

BENCHMARK_MAIN();
