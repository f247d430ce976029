#include <benchmark/benchmark.h>

#include "vplin/dispersion_function.hpp"
#include "vplin/dispersion_relation.hpp"
#include "vplin/greens_function.hpp"
#include "vplin/poisson_kernels.hpp"
#include "vplin/volterra.hpp"

using namespace vplin;

namespace {

void bm_eval_k_closed(benchmark::State& state) {
  const auto gp2 = RadialEquilibrium::generalized_poisson(2);
  const Complex z(1.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(eval_k(gp2, z));
}
BENCHMARK(bm_eval_k_closed);

void bm_eval_k_maxwellian(benchmark::State& state) {
  const auto mx = RadialEquilibrium::maxwellian();
  const Complex z(1.3, 0.2);
  for (auto _ : state) benchmark::DoNotOptimize(eval_k(mx, z));
}
BENCHMARK(bm_eval_k_maxwellian);

void bm_solve_zeta_maxwellian(benchmark::State& state) {
  const auto mx = RadialEquilibrium::maxwellian();
  for (auto _ : state) benchmark::DoNotOptimize(solve_zeta(mx, 0.2));
}
BENCHMARK(bm_solve_zeta_maxwellian);

void bm_poles_general(benchmark::State& state) {
  const int j = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pk::poles_general(j, 0.05));
}
BENCHMARK(bm_poles_general)->Arg(3)->Arg(6);

void bm_greens_closed_form(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(greens_closed_form(3, 0.5, 7.5));
}
BENCHMARK(bm_greens_closed_form);

void bm_greens_real_line(benchmark::State& state) {
  const auto mx = RadialEquilibrium::maxwellian();
  GreensRealLine line(mx, 1.0);
  double tau = 0.0;
  for (auto _ : state) {
    tau = (tau < 20.0) ? tau + 0.125 : 0.125;
    benchmark::DoNotOptimize(line(tau));
  }
}
BENCHMARK(bm_greens_real_line);

void bm_volterra_march(benchmark::State& state) {
  const auto gp1 = RadialEquilibrium::generalized_poisson(1);
  const auto forcing = ForcingSpec::free_streaming({1.0}, {});
  const int n = int(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        solve_volterra(gp1, forcing, {0.5, 0.0, 0.0}, 40.0, n));
  state.SetComplexityN(n);
}
BENCHMARK(bm_volterra_march)->Arg(512)->Arg(1024)->Arg(2048)->Complexity();

}  // namespace

BENCHMARK_MAIN();
