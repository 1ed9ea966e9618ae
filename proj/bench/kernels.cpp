#include <benchmark/benchmark.h>

#include "../tests/support.hpp"
#include <map>

#include "tame/covering.hpp"

using namespace tame;

namespace {

// Known summands behind random bases; range(0) is m, vertex dims stay <= 6.
const CircleRep& rep_for(long m) {
  static std::map<long, CircleRep> cache;
  auto it = cache.find(m);
  if (it == cache.end()) {
    testing::Rng rng(static_cast<std::uint64_t>(m));
    it = cache.emplace(m, testing::random_known_rep(Field::prime(5), static_cast<std::size_t>(m), 6, rng, true, 6 * static_cast<int>(m)).rep).first;
  }
  return it->second;
}

void run(benchmark::State& state, CoverKernel kernel) {
  Zigzag z = Zigzag::from(rep_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(barcodes_from_cover(z, kernel));
  state.counters["dim"] = static_cast<double>(z.total_dim());
}

void BM_parallel(benchmark::State& s) { run(s, CoverKernel::parallel); }
void BM_serial(benchmark::State& s) { run(s, CoverKernel::serial); }
void BM_reduction(benchmark::State& s) { run(s, CoverKernel::reduction); }

}  // namespace

BENCHMARK(BM_parallel)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_serial)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_reduction)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
