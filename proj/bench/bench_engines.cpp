#include <benchmark/benchmark.h>

#include <random>

#include "lcg/core.hpp"

namespace {

lcg::Universe soup(std::int64_t side, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution alive(0.35);
  std::vector<lcg::Coord> cells;
  for (std::int64_t y = 0; y < side; ++y)
    for (std::int64_t x = 0; x < side; ++x)
      if (alive(rng)) cells.push_back({x, y});
  return lcg::Universe(std::move(cells));
}

void run(benchmark::State& state, lcg::Engine engine) {
  const lcg::Universe start = lcg::step_n(soup(state.range(0), 7), 16, lcg::Engine::Fast);
  for (auto _ : state) {
    lcg::Universe u = lcg::step_n(start, 32, engine);
    benchmark::DoNotOptimize(u.population());
  }
  state.SetItemsProcessed(state.iterations() * 32);
}

void BM_StepNaive(benchmark::State& state) { run(state, lcg::Engine::Naive); }
void BM_StepFast(benchmark::State& state) { run(state, lcg::Engine::Fast); }

}  // namespace

BENCHMARK(BM_StepNaive)->Arg(32)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StepFast)->Arg(32)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
