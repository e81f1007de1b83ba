#include <complex>
#include <cstdint>

#include <benchmark/benchmark.h>

#include "htldp/brute_force.hpp"
#include "htldp/experiments.hpp"
#include "htldp/heavy_tail.hpp"
#include "htldp/perm_distance.hpp"
#include "htldp/spike.hpp"
#include "htldp/variational.hpp"

using namespace htldp;

namespace {

TailParams case_c() {
  TailParams p;
  p.alpha = 1.5;
  p.nu1_support = parse_support("1");
  p.nu2_support = parse_support("1");
  return p;
}

void BM_ClosedForm(benchmark::State& state) {
  TailParams p = case_c();
  p.alpha = 1.7;
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_c(p).c);
}
BENCHMARK(BM_ClosedForm);

void BM_BruteForce(benchmark::State& state) {
  const TailParams p = case_c();
  BruteForceBudget budget;
  budget.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_c(p, static_cast<int>(state.range(0)), 1, budget).c);
}
BENCHMARK(BM_BruteForce)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_LargestEigenvalue(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EntrySampler sampler(TailParams{});
  Stream stream(7);
  const RealMatrix X = sample_wigner<double>(n, sampler, stream);
  for (auto _ : state) benchmark::DoNotOptimize(largest_eigenvalue(X));
}
BENCHMARK(BM_LargestEigenvalue)->RangeMultiplier(2)->Range(100, 800)->Unit(benchmark::kMillisecond);

void BM_SampleWigner(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const EntrySampler sampler(TailParams{});
  Stream stream(8);
  for (auto _ : state) benchmark::DoNotOptimize(sample_wigner<double>(n, sampler, stream).data());
}
BENCHMARK(BM_SampleWigner)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_EigenEquation(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const EntrySampler sampler(TailParams{}, LawKind::Rademacher);
  Stream stream(9);
  const RealMatrix H = sample_wigner<double>(static_cast<std::size_t>(n), sampler, stream);
  SpikeSpec spike;
  spike.thetas = {1.5, 3.0};
  spike.vectors = ComplexMatrix::Zero(n, 2);
  spike.vectors(0, 0) = 1.0;
  spike.vectors(1, 1) = 1.0;
  const EigenEquation eq(H, spike);
  const double x = eq.spectrum_top() + 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(f_N(eq, x));
}
BENCHMARK(BM_EigenEquation)->Arg(200)->Arg(800);

void BM_EigenEquationZero(benchmark::State& state) {
  const EntrySampler sampler(TailParams{}, LawKind::Rademacher);
  Stream stream(10);
  const RealMatrix H = sample_wigner<double>(200, sampler, stream);
  SpikeSpec spike;
  spike.thetas = {2.0};
  spike.vectors = ComplexMatrix::Zero(200, 1);
  spike.vectors(0, 0) = 1.0;
  const EigenEquation eq(H, spike);
  for (auto _ : state) benchmark::DoNotOptimize(eq.largest_zero());
}
BENCHMARK(BM_EigenEquationZero)->Unit(benchmark::kMillisecond);

void BM_PermDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Stream stream(11);
  SparseHermitian A(n), B(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      A.set(i, j, {stream.normal(), i == j ? 0.0 : stream.normal()});
      B.set(i, j, {stream.normal(), i == j ? 0.0 : stream.normal()});
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(perm_invariant_distance(A, B));
}
BENCHMARK(BM_PermDistance)->DenseRange(3, 6, 1);

}  // namespace

BENCHMARK_MAIN();
