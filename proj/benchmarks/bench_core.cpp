#include <benchmark/benchmark.h>

#include "ocqst/metrics.hpp"
#include "ocqst/mle.hpp"
#include "ocqst/states.hpp"

using namespace ocqst;

namespace {

DensityMatrix fixed_state(int n_qubits) {
  RngStream rng(derive_seed(42, "bench/state", n_qubits));
  return random_density(n_qubits, rng);
}

CountRecord fixed_record(int n_qubits, std::int64_t total_n) {
  RngStream rng(derive_seed(42, "bench/record", n_qubits));
  const BasisSet set = overcomplete_set(n_qubits);
  return simulate_counts(fixed_state(n_qubits), set, total_n, rng);
}

void BM_HermitianEigensystem4(benchmark::State& state) {
  const ComplexMatrix m = fixed_state(2).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigensystem(m));
  }
}
BENCHMARK(BM_HermitianEigensystem4);

void BM_MatrixSqrt4(benchmark::State& state) {
  const ComplexMatrix m = fixed_state(2).matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(matrix_sqrt_psd(m));
  }
}
BENCHMARK(BM_MatrixSqrt4);

void BM_BornProbability36(benchmark::State& state) {
  const DensityMatrix rho = fixed_state(2);
  const BasisSet set = overcomplete_set(2);
  for (auto _ : state) {
    double sum = 0.0;
    for (const auto& basis : set.bases) sum += born_probability(basis, rho);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_BornProbability36);

void BM_ParamsToDensity(benchmark::State& state) {
  RngStream rng(3);
  TParams t = TParams::maximally_mixed(2);
  for (auto& v : t.values) v = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(params_to_density(t));
  }
}
BENCHMARK(BM_ParamsToDensity);

void BM_NegLogLikelihood36(benchmark::State& state) {
  const CountRecord record = fixed_record(2, 250000);
  const DensityMatrix probe = fixed_state(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(neg_log_likelihood(probe, record, 0.5));
  }
}
BENCHMARK(BM_NegLogLikelihood36);

void BM_SimulateCounts(benchmark::State& state) {
  const DensityMatrix rho = fixed_state(2);
  const BasisSet set = overcomplete_set(2);
  RngStream rng(11);
  const auto total_n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_counts(rho, set, total_n, rng));
  }
}
BENCHMARK(BM_SimulateCounts)->Arg(10000)->Arg(250000);

void BM_Concurrence(benchmark::State& state) {
  const DensityMatrix rho = fixed_state(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_unclamped(rho));
  }
}
BENCHMARK(BM_Concurrence);

void BM_Anneal(benchmark::State& state) {
  const int n_qubits = static_cast<int>(state.range(0));
  const CountRecord record = fixed_record(n_qubits, 10000);
  const AnnealConfig config;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    RngStream rng(derive_seed(42, "bench/anneal", seed++));
    benchmark::DoNotOptimize(anneal(record, config, rng));
  }
}
BENCHMARK(BM_Anneal)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GridOracle(benchmark::State& state) {
  const CountRecord record = fixed_record(1, 10000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(grid_oracle_1q(record, 64));
  }
}
BENCHMARK(BM_GridOracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
