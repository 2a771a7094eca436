#include <benchmark/benchmark.h>

#include <cmath>

#include "fhle/estimates.hpp"
#include "fhle/exponents.hpp"
#include "fhle/extension.hpp"
#include "fhle/kernels.hpp"
#include "fhle/monotonicity.hpp"
#include "fhle/parallel.hpp"

using namespace fhle;

// Each benchmark takes Execution as its first argument: 0 = serial reference, 1 = parallel.
namespace {
Execution mode(const benchmark::State& st) { return st.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void BM_JlScan(benchmark::State& st) {
  JlOptions o;
  o.exec = mode(st);
  o.nodes = 4096;
  for (auto _ : st) benchmark::DoNotOptimize(jl_brackets(10, 0.5, 0.0, 1e6, o));
}

void BM_AConstant(benchmark::State& st) {
  KernelQuadrature q;
  q.exec = mode(st);
  const auto P = ProblemParams::make(3, 0.5, 1.0, 4.0);
  for (auto _ : st) benchmark::DoNotOptimize(a_constant(P, q));
}

void BM_ExtendRadial(benchmark::State& st) {
  ExtendOptions o;
  o.exec = mode(st);
  const auto u = RadialProfile::analytic([](double x) { return std::exp(-x * x); });
  const auto g = HalfSpaceGrid::make(4.0, 33, 1e-3, 4.0, 17, 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(extend_radial(u, g, 1, 0.25, o));
}

void BM_EnergyFirstOrder(benchmark::State& st) {
  EnergyOptions o;
  o.exec = mode(st);
  const auto g = HalfSpaceGrid::make(5.0, 11, 1e-3, 5.0, 11, 0.0);
  const auto f = HalfSpaceField::from_function(g, ProblemParams::make(2, 0.5, 0.0, 3.0),
                                               [](double r, double y) { return 1.0 / std::hypot(r, 1.0 + y); });
  for (auto _ : st) benchmark::DoNotOptimize(energy_first_order(f, 1.3, o));
}

void BM_RhoRatio(benchmark::State& st) {
  CutoffSpec c;
  std::vector<double> xs;
  for (int i = 0; i <= 40; ++i) xs.push_back(2.5 * i);
  for (auto _ : st) benchmark::DoNotOptimize(rho_ratio_check(c, 1, 0.25, xs, mode(st)));
}
}  // namespace

BENCHMARK(BM_JlScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AConstant)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtendRadial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnergyFirstOrder)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RhoRatio)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  apply_thread_cap();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
