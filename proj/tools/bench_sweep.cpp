// Compares the serial reference generator sweep against the OpenMP
// parallel one. Both run a full greedy trace from every language member.
#include <benchmark/benchmark.h>

#include "graygreed/generators.hpp"
#include "graygreed/language.hpp"

namespace {

using graygreed::LanguageSpec;
using graygreed::MoveOrder;

LanguageSpec instance(int which) {
  switch (which) {
    case 0: return LanguageSpec::run_constrained(10, 3);
    case 1: return LanguageSpec::run_constrained(12, 4);
    default: return LanguageSpec::prefix_constrained(10, 3, graygreed::Rational(1));
  }
}

void BM_SweepSerial(benchmark::State& state) {
  const LanguageSpec spec = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto gens = graygreed::sweep_gen_set_serial(spec, MoveOrder::OneFirst);
    benchmark::DoNotOptimize(gens);
  }
}

void BM_SweepParallel(benchmark::State& state) {
  const LanguageSpec spec = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto gens = graygreed::sweep_gen_set_parallel(spec, MoveOrder::OneFirst);
    benchmark::DoNotOptimize(gens);
  }
}

BENCHMARK(BM_SweepSerial)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
