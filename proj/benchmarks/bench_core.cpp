#include <benchmark/benchmark.h>

#include <cmath>

#include "covosc/coupled_oscillator.hpp"
#include "covosc/covariant_oscillator.hpp"
#include "covosc/fourier.hpp"
#include "covosc/grid.hpp"
#include "covosc/hermite.hpp"
#include "covosc/quadrature.hpp"
#include "covosc/reduced_state.hpp"

namespace {

void BM_HermitePhi(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::hermite_phi(k, x));
    x += 1e-6;
  }
}
BENCHMARK(BM_HermitePhi)->Arg(8)->Arg(32)->Arg(64);

void BM_HermiteSequence(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::hermite_phi_sequence(64, 1.3));
  }
}
BENCHMARK(BM_HermiteSequence);

void BM_Integrate1DGaussian(benchmark::State& state) {
  const covosc::QuadratureSpec spec{1e-10, 2000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        covosc::integrate_1d([](double x) { return std::exp(-x * x); }, spec).value);
  }
}
BENCHMARK(BM_Integrate1DGaussian);

void BM_Integrate2DGroundState(benchmark::State& state) {
  const covosc::QuadratureSpec spec{1e-8, 4000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        covosc::integrate_2d(
            [](double x1, double x2) { return std::exp(-(x1 * x1 + x2 * x2)) / M_PI; }, spec)
            .value);
  }
}
BENCHMARK(BM_Integrate2DGroundState);

void BM_ReducedDensityClosed(benchmark::State& state) {
  const covosc::DensityKernel kernel = covosc::DensityKernel::closed_form(1.0);
  double x = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(x, 0.3));
    x += 1e-6;
  }
}
BENCHMARK(BM_ReducedDensityClosed);

void BM_ReducedDensitySpectral(benchmark::State& state) {
  const covosc::DensityKernel kernel =
      covosc::DensityKernel::spectral(1.0, covosc::truncation_order(1.0, 1e-12));
  double x = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel(x, 0.3));
    x += 1e-6;
  }
}
BENCHMARK(BM_ReducedDensitySpectral);

void BM_SchmidtSpectrum(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::schmidt_spectrum(2.0, 200));
  }
}
BENCHMARK(BM_SchmidtSpectrum);

void BM_Entropy(benchmark::State& state) {
  double eta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::entropy(eta));
    eta += 1e-6;
  }
}
BENCHMARK(BM_Entropy);

void BM_OscillatorResidual(benchmark::State& state) {
  covosc::GridSpec grid;
  grid.n_z = grid.n_t = 21;
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::oscillator_residual(1.2, grid));
  }
}
BENCHMARK(BM_OscillatorResidual);

void BM_Fourier2DPoint(benchmark::State& state) {
  const covosc::QuadratureSpec spec{1e-6, 4000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(covosc::fourier_2d(
        [](double z, double t) { return covosc::psi_boosted(0.8, z, t); }, {}, 1.0, 0.5,
        spec));
  }
}
BENCHMARK(BM_Fourier2DPoint);

}  // namespace

BENCHMARK_MAIN();
