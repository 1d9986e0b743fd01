#include <benchmark/benchmark.h>

#include "qsi/analytic.hpp"
#include "qsi/ist.hpp"
#include "qsi/sdp.hpp"
#include "qsi/tensor.hpp"

using namespace qsi;

static void BM_IsotypicProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_projector(Partition{n - 1, 1}, 2));
}
BENCHMARK(BM_IsotypicProjector)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_PsdCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition mu{n - 1, 1};
  const auto w = build_dual_witness(mu, Rational(1, 2), 2);
  const Matrix slack = w.y.op - w.states->rho_neq.op * Rational(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(psd_certificate(slack));
}
BENCHMARK(BM_PsdCertificate)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_CertifyWitness(benchmark::State& state) {
  const Partition mu{3, 2};
  const auto states = make_states(mu, 2);
  for (auto _ : state) benchmark::DoNotOptimize(certify(build_dual_witness(states, mu, Rational(1, 2))));
}
BENCHMARK(BM_CertifyWitness)->Unit(benchmark::kMillisecond);

static void BM_IstMeanAccept(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int h = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(ist_mean_accept(n, h, 2));
}
BENCHMARK(BM_IstMeanAccept)->Args({8, 2})->Args({8, 4})->Args({16, 2})->Args({16, 4})->Unit(benchmark::kMillisecond);

static void BM_GammaTable(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int h = 0; h <= 5; ++h) benchmark::DoNotOptimize(gamma(h, m));
}
BENCHMARK(BM_GammaTable)->DenseRange(4, 12, 4);

// The mirrored side γ(2^m − h, m) dominates the cost.
static void BM_GammaSymmetric(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int h = 0; h <= 5; ++h) benchmark::DoNotOptimize(gamma_symmetric(h, m));
}
BENCHMARK(BM_GammaSymmetric)->DenseRange(4, 8, 2);

static void BM_CircleRate(benchmark::State& state) {
  const auto route = static_cast<CircleRoute>(state.range(0));
  for (auto _ : state)
    for (const auto& l : partitions_of(8)) benchmark::DoNotOptimize(circle_rate(l, route));
}
BENCHMARK(BM_CircleRate)->DenseRange(0, 2);

BENCHMARK_MAIN();
