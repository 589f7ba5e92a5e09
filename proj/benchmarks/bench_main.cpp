#include <benchmark/benchmark.h>

#include <cmath>

#include "configeo/configcount.hpp"
#include "configeo/energy.hpp"
#include "configeo/fourier.hpp"
#include "configeo/pointset.hpp"

namespace {

using namespace configeo;

void BM_CountPairs(benchmark::State& state) {
  const auto algo = state.range(1) ? count::Algorithm::pruned : count::Algorithm::brute;
  const auto p = pointgen::uniform_random(2, static_cast<std::size_t>(state.range(0)), 1);
  const std::vector<double> t{0.3};
  for (auto _ : state) benchmark::DoNotOptimize(count::count_simplex(p, 1, t, 0.01, algo).count);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountPairs)->ArgsProduct({{500, 1000, 2000, 4000}, {0, 1}});

void BM_CountTriangles(benchmark::State& state) {
  const auto algo = state.range(1) ? count::Algorithm::pruned : count::Algorithm::brute;
  const auto p = pointgen::uniform_random(2, static_cast<std::size_t>(state.range(0)), 2);
  const std::vector<double> t{0.2, 0.25, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(count::count_simplex(p, 2, t, 0.01, algo).count);
}
BENCHMARK(BM_CountTriangles)->ArgsProduct({{100, 200, 400}, {0, 1}});

void BM_CountAngles(benchmark::State& state) {
  const auto p = pointgen::uniform_random(2, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(count::count_angle(p, 1.0, 0.01).count);
}
BENCHMARK(BM_CountAngles)->Arg(100)->Arg(200);

void BM_Energy(benchmark::State& state) {
  const auto p = pointgen::uniform_random(3, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(energy::discrete_energy(p, 1.5));
}
BENCHMARK(BM_Energy)->Arg(1000)->Arg(4000);

void BM_SphereDecayFit(benchmark::State& state) {
  const auto radii = fourier::linear_radii(10.0, 1000.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        fourier::decay_fit([](double r) { return std::abs(fourier::ft_sphere_radial(3, r)); },
                           radii)
            .fitted_exponent);
  }
}
BENCHMARK(BM_SphereDecayFit)->Arg(10000)->Arg(99001);

void BM_MonteCarloRay(benchmark::State& state) {
  fourier::MonteCarloOptions opt;
  opt.samples = static_cast<std::size_t>(state.range(0));
  opt.epsilon = 0.01;
  const double c = std::sqrt(0.5);
  const fourier::FrequencyPoint dir{{{c, 0, 0}, {-c, 0, 0}}};
  const auto radii = fourier::linear_radii(2.0, 40.0, 761);
  const auto spec = fourier::MeasureSpec::chain_spheres(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier::ft_montecarlo_ray(spec, dir, radii, opt).size());
  }
}
BENCHMARK(BM_MonteCarloRay)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
