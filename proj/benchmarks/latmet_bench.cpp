#include <benchmark/benchmark.h>

#include <vector>

#include "latmet/algebra_star.hpp"
#include "latmet/completion.hpp"
#include "latmet/counterexamples.hpp"
#include "latmet/interval_set.hpp"
#include "latmet/measure_algebra.hpp"
#include "latmet/sampling.hpp"
#include "latmet/scenarios.hpp"

namespace {

using namespace latmet;

std::vector<IntervalSet> sample_sets(std::size_t count, unsigned pieces) {
  Sampler sampler(12345);
  std::vector<IntervalSet> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(sampler.interval_set(pieces, 64));
  }
  return out;
}

void BM_Symdiff(benchmark::State& state) {
  auto sets = sample_sets(64, static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(symdiff(sets[i % 64], sets[(i + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Symdiff)->Arg(4)->Arg(16);

void BM_MetricD(benchmark::State& state) {
  auto sets = sample_sets(64, 8);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(metric_d(sets[i % 64], sets[(i + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_MetricD);

void BM_HalvingPoint(benchmark::State& state) {
  auto sets = sample_sets(64, 8);
  std::size_t i = 0;
  for (auto _ : state) {
    const IntervalSet& s = sets[i % 64];
    if (!s.empty()) {
      benchmark::DoNotOptimize(find_halving_point(s));
    }
    ++i;
  }
}
BENCHMARK(BM_HalvingPoint);

void BM_DPrime(benchmark::State& state) {
  FiniteAlgebra z6 = FiniteAlgebra::zmod(6);
  Sampler sampler(999);
  std::vector<StepFunction> fns;
  for (int i = 0; i < 32; ++i) {
    fns.push_back(sampler.step_function(z6, 8));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d_prime(fns[i % 32], fns[(i + 5) % 32]));
    ++i;
  }
}
BENCHMARK(BM_DPrime);

void BM_LiftOp(benchmark::State& state) {
  FiniteAlgebra z6 = FiniteAlgebra::zmod(6);
  Sampler sampler(999);
  std::vector<StepFunction> fns;
  for (int i = 0; i < 32; ++i) {
    fns.push_back(sampler.step_function(z6, 8));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    std::vector<StepFunction> args = {fns[i % 32], fns[(i + 5) % 32]};
    benchmark::DoNotOptimize(lift_op(z6, "mul", args));
    ++i;
  }
}
BENCHMARK(BM_LiftOp);

void BM_PrimeBisection(benchmark::State& state) {
  ChooserOracle oracle = seeded_chooser(7);
  for (auto _ : state) {
    IntervalSet u = IntervalSet::unit();
    for (int step = 0; step < state.range(0); ++step) {
      u = prime_bisection_step(u, oracle);
    }
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_PrimeBisection)->Arg(8)->Arg(20);

void BM_CompletionPipeline(benchmark::State& state) {
  const IntervalSetLatticeCarrier carrier;
  IntervalScenario scenario = scenario_typewriter_fast();
  for (auto _ : state) {
    CompletionEngine<IntervalSetLatticeCarrier> engine(
        carrier, scenario.certificate, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(engine.run_pipeline(scenario.oracle));
  }
}
BENCHMARK(BM_CompletionPipeline)->Arg(16)->Arg(32);

void BM_DvViolationSearch(benchmark::State& state) {
  PointSpace space = PointSpace::harmonic(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_dv_violation(space, 3));
  }
}
BENCHMARK(BM_DvViolationSearch);

}  // namespace

BENCHMARK_MAIN();
