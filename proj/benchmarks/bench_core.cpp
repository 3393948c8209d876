// Microbenchmarks for the exact kernels the suites lean on hardest.

#include <benchmark/benchmark.h>

#include <cmath>

#include "torkit/bundle.hpp"
#include "torkit/lattice.hpp"
#include "torkit/matrix.hpp"
#include "torkit/monodromy.hpp"
#include "torkit/smith.hpp"
#include "torkit/symring.hpp"
#include "torkit/workspace.hpp"

namespace {

using namespace torkit;

ExactMatrix random_matrix(std::size_t n, RandomSource& rng) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = GaussianRational(Rational(rng.range(-4, 4)) / Rational(rng.range(1, 3)),
                                    Rational(rng.range(-4, 4)));
    }
  }
  return m;
}

void BM_KernelBasis(benchmark::State& state) {
  RandomSource rng(1);
  ExactMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_basis(m));
  }
}
BENCHMARK(BM_KernelBasis)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithNormalForm(benchmark::State& state) {
  RandomSource rng(2);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = GaussianRational(rng.range(-9, 9));
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

void BM_DualLattice(benchmark::State& state) {
  RandomSource rng(3);
  PeriodLattice lat = random_lattice(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dual_lattice(lat));
  }
}
BENCHMARK(BM_DualLattice)->Arg(2)->Arg(4);

void BM_PhiFromTranslations(benchmark::State& state) {
  AppellHumbertBundle b =
      random_bundle(static_cast<std::size_t>(state.range(0)), 0, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_from_translations(b, Integer(4)));
  }
}
BENCHMARK(BM_PhiFromTranslations)->Arg(1)->Arg(2)->Arg(3);

void BM_BetaKernel(benchmark::State& state) {
  AppellHumbertBundle b = random_bundle(3, static_cast<std::size_t>(state.range(1)), 23);
  std::size_t d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(beta_kernel_dim(b.form, d));
  }
}
BENCHMARK(BM_BetaKernel)->Args({2, 1})->Args({4, 1})->Args({4, 2})->Args({6, 3});

void BM_RingDimensionCertificate(benchmark::State& state) {
  AppellHumbertBundle b = random_bundle(3, 2, 29);
  std::size_t d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(function_ring_dimension(b, d));
  }
}
BENCHMARK(BM_RingDimensionCertificate)->Arg(2)->Arg(4)->Arg(6);

void BM_MonodromyRoundTrip(benchmark::State& state) {
  RandomSource rng(31);
  std::size_t g = static_cast<std::size_t>(state.range(0));
  NumericLattice nl = numeric_lattice(random_lattice(g, rng));
  Character t;
  for (std::size_t j = 0; j < 2 * g; ++j) {
    double mod = std::exp(rng.uniform(-1.0, 1.0));
    double ang = rng.uniform(0.0, 6.28);
    t.values.emplace_back(mod * std::cos(ang), mod * std::sin(ang));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(monodromy(nl, character_to_connection(nl, t)));
  }
}
BENCHMARK(BM_MonodromyRoundTrip)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
