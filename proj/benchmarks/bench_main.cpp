#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "regshannon/bounds.hpp"
#include "regshannon/diagnostics.hpp"
#include "regshannon/harness.hpp"
#include "regshannon/reconstruction.hpp"
#include "regshannon/special_fn.hpp"
#include "regshannon/windows.hpp"

using namespace regshannon;

namespace {

constexpr double pi = std::numbers::pi;

void BM_BesselJ1(benchmark::State& st) {
  double x = 0.37;
  for (auto _ : st) {
    benchmark::DoNotOptimize(bessel_j1(x));
    x = x > 40 ? 0.37 : x + 0.731;
  }
}
BENCHMARK(BM_BesselJ1);

void BM_BesselI0Scaled(benchmark::State& st) {
  double x = 0.37;
  for (auto _ : st) {
    benchmark::DoNotOptimize(bessel_i0_scaled(x));
    x = x > 80 ? 0.37 : x + 1.37;
  }
}
BENCHMARK(BM_BesselI0Scaled);

void BM_I0MinusL0(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bessel_i0_minus_struve_l0(17.5));
}
BENCHMARK(BM_I0MinusL0);

void BM_Reconstruct(benchmark::State& st) {
  const auto fam = static_cast<WindowFamily>(st.range(0));
  const int m = static_cast<int>(st.range(1));
  const double d = pi / 2;
  const auto spec = alpha_spec(fam, m, d, 1.0);
  const auto s = sample_function([d](double x) { return test_function(x, d); }, -m - 2, m + 3, d);
  double t = -0.999;
  for (auto _ : st) {
    benchmark::DoNotOptimize(reconstruct(s, spec, t));
    t = t > 0.99 ? -0.999 : t + 0.0137;
  }
  st.SetLabel(std::string(family_name(fam)));
}
BENCHMARK(BM_Reconstruct)->ArgsProduct({{0, 1, 2, 3}, {4, 10}});

void BM_ReconstructGrid(benchmark::State& st) {
  const double d = pi / 2;
  const auto spec = optimal_spec(WindowFamily::Sinh, 8, d);
  const auto s = sample_function([d](double x) { return test_function(x, d); }, -10, 10, d);
  const auto grid = evaluation_grid(-1.0, 1.0, 100000);
  for (auto _ : st) benchmark::DoNotOptimize(reconstruct_grid(s, spec, grid, static_cast<unsigned>(st.range(0))));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(grid.size()));
}
BENCHMARK(BM_ReconstructGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_E1Numeric(benchmark::State& st) {
  const auto spec = optimal_spec(WindowFamily::Sinh, 6, pi / 2);
  for (auto _ : st) benchmark::DoNotOptimize(e1_numeric(spec, pi / 2));
}
BENCHMARK(BM_E1Numeric)->Unit(benchmark::kMillisecond);

void BM_DeltaSplit(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(delta_ckb_split(8, pi / 2, 1.0));
}
BENCHMARK(BM_DeltaSplit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
