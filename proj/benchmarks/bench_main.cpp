#include <benchmark/benchmark.h>

#include "solenoid/covering.hpp"
#include "solenoid/dynamics.hpp"
#include "solenoid/numtheory.hpp"

using namespace solenoid;

namespace {

void BM_DegreeHugeK(benchmark::State& state) {
  const auto seq = PrimeSeqSpec::parse("universal=exclude[2,3]");
  const Integer k = nt::ipow(6, static_cast<unsigned>(state.range(0))) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(degree(seq, k));
}
BENCHMARK(BM_DegreeHugeK)->Arg(16)->Arg(64)->Arg(256);

void BM_FiberConstruction(benchmark::State& state) {
  const auto seq = PrimeSeqSpec::parse("prefix=[3];cycle=[2]");
  const Integer k = state.range(0);
  const auto depth = std::max(stabilization_level(seq, k), oracle_min_depth(seq, k));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_over_identity(seq, k, depth));
}
BENCHMARK(BM_FiberConstruction)->Arg(15)->Arg(243)->Arg(1215);

void BM_FiberOracle(benchmark::State& state) {
  const auto seq = PrimeSeqSpec::parse("prefix=[3];cycle=[2]");
  const Integer k = state.range(0);
  const auto depth = std::max(stabilization_level(seq, k), oracle_min_depth(seq, k));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_oracle(seq, k, depth));
}
BENCHMARK(BM_FiberOracle)->Arg(15)->Arg(243)->Arg(1215);

void BM_Witness(benchmark::State& state) {
  const auto seq = PrimeSeqSpec::parse("prefix=[5,5];cycle=[2]");
  const Arc arc(Rational(1, 3), Rational(1, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(construct_periodic_witness(seq, 3, 2, arc, 5));
}
BENCHMARK(BM_Witness)->Arg(1000)->Arg(1000000);

void BM_Orbit(benchmark::State& state) {
  const auto seq = PrimeSeqSpec::parse("cycle=[2]");
  const auto w = construct_periodic_witness(seq, 3, 1, Arc(Rational(1, 10), Rational(1, state.range(0))), 5);
  for (auto _ : state) benchmark::DoNotOptimize(orbit(w.point, 3, 1000000));
}
BENCHMARK(BM_Orbit)->Arg(10)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
