#include <benchmark/benchmark.h>

#include <random>

#include "fkl/divergence.hpp"
#include "fkl/frechet.hpp"
#include "fkl/quadrature.hpp"
#include "fkl/specfun.hpp"

namespace {

void BM_Gamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fkl::gamma(x));
    x += 0.1;
    if (x > 30.0) x = 0.1;
  }
}
BENCHMARK(BM_Gamma);

void BM_Pdf(benchmark::State& state) {
  const fkl::FrechetShape d(2.0);
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fkl::pdf(d, x));
    x += 0.37;
    if (x > 50.0) x = 0.01;
  }
}
BENCHMARK(BM_Pdf);

void BM_Quantile(benchmark::State& state) {
  const fkl::FrechetShape d(2.0);
  double u = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fkl::quantile(d, u));
    u += 0.017;
    if (u >= 1.0) u = 0.01;
  }
}
BENCHMARK(BM_Quantile);

void BM_Sample(benchmark::State& state) {
  const fkl::FrechetShape d(2.0);
  std::mt19937_64 rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(fkl::sample(d, rng, 1024));
}
BENCHMARK(BM_Sample);

void BM_KlClosedForm(benchmark::State& state) {
  const fkl::FrechetShape p(1.0), q(2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fkl::kl_closed_form(p, q).value);
}
BENCHMARK(BM_KlClosedForm);

void BM_KlQuadrature(benchmark::State& state) {
  const fkl::FrechetShape p(1.0), q(2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fkl::kl_quadrature(p, q, 1e-8).value);
}
BENCHMARK(BM_KlQuadrature);

void BM_KlMonteCarlo(benchmark::State& state) {
  const fkl::FrechetShape p(1.0), q(2.0);
  std::mt19937_64 rng(7);
  for (auto _ : state)
    benchmark::DoNotOptimize(fkl::kl_monte_carlo(p, q, 4096, rng).value);
}
BENCHMARK(BM_KlMonteCarlo);

void BM_DerivationIntegrals(benchmark::State& state) {
  const fkl::FrechetShape p(1.0), q(2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(fkl::verify_derivation_integrals(p, q, 1e-10));
}
BENCHMARK(BM_DerivationIntegrals);

}  // namespace

BENCHMARK_MAIN();
