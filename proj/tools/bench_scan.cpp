// Signature kernel against the serial reference.

#include <benchmark/benchmark.h>

#include "misere/game.hpp"
#include "misere/outcome.hpp"
#include "misere/scan.hpp"
#include "misere/universe.hpp"

using namespace misere;

namespace {

void BM_Kernel(benchmark::State& state) {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_ending(s, static_cast<unsigned>(state.range(0)), 2);
  Scanner sc(o, t);
  GameId const g = s.sum(s.star(), s.dyadic({3, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(sc.compute_signature(g));
  state.counters["slots"] = static_cast<double>(t.size());
}

void BM_Reference(benchmark::State& state) {
  GameStore s;
  OutcomeSolver o(s);
  TestSet const t = gen_dead_ending(s, static_cast<unsigned>(state.range(0)), 2);
  Scanner sc(o, t);
  GameId const g = s.sum(s.star(), s.dyadic({3, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(sc.signature_reference(g));
  state.counters["slots"] = static_cast<double>(t.size());
}

}  // namespace

BENCHMARK(BM_Kernel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reference)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
