#include <benchmark/benchmark.h>

#include "lieab/iab.hpp"
#include "lieab/suites.hpp"

using namespace lieab;

namespace {

const char* kGradings[] = {"D4:0,0,1,0,0", "E6:0,0,1,0,0,0,0", "E7:0,0,1,0,0,0,0,0", "E8:0,0,0,0,0,0,0,0,1",
                           "D8:0,0,0,0,1,0,0,0,0"};

const GradedRoots& graded(int i) {
  static std::vector<std::unique_ptr<GradedRoots>> cache(std::size(kGradings));
  if (!cache[i]) cache[i] = std::make_unique<GradedRoots>(parse_grading(kGradings[i]));
  return *cache[i];
}

void BM_serial(benchmark::State& st) {
  const auto& gr = graded(int(st.range(0)));
  size_t n = 0;
  for (auto _ : st) n = enumerate_minuscule_serial(gr).size();
  st.SetLabel(std::string(kGradings[st.range(0)]) + " " + std::to_string(n));
}

void BM_parallel(benchmark::State& st) {
  const auto& gr = graded(int(st.range(0)));
  size_t n = 0;
  for (auto _ : st) n = enumerate_minuscule_parallel(gr).size();
  st.SetLabel(std::string(kGradings[st.range(0)]) + " " + std::to_string(n));
}

void BM_biconvex(benchmark::State& st) {
  const auto& gr = graded(int(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_biconvex(gr));
  st.SetLabel(kGradings[st.range(0)]);
}

void BM_suite(benchmark::State& st) {
  SweepConfig cfg;
  cfg.max_rank = 6;
  cfg.jobs = int(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_suite("orbit-dim", cfg));
  st.SetLabel(cfg.jobs == 1 ? "orbit-dim r6 serial" : "orbit-dim r6 parallel");
}

}  // namespace

BENCHMARK(BM_serial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
// the scan is exponential in |Phi_1|; only the small cases
BENCHMARK(BM_biconvex)->DenseRange(0, 0)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_suite)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
