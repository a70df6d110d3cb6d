#include <benchmark/benchmark.h>

#include <string>

#include "svt/matrixlab.hpp"
#include "svt/spectrum.hpp"

using namespace svt;

namespace {

// case6:n=R with chi(2(R-1)) ... chi(-2(R-1)) xR[2]
std::pair<SymmetricSpace, ArthurParameter> unitary_instance(int r) {
  auto x = SymmetricSpace::make(6, r);
  std::string s;
  for (int i = 0; i < r; ++i) s += (i ? " + " : "") + std::string("chi(") + std::to_string(2 * (r - 1 - 2 * i)) + ")xR[2]";
  return {x, parse_psi(dual_lgroup(x.group()), s)};
}

void BM_enumerate_parallel(benchmark::State& st) {
  auto [x, psi] = unitary_instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_eps(x, psi));
}

void BM_enumerate_serial(benchmark::State& st) {
  auto [x, psi] = unitary_instance(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_eps_serial(x, psi));
}

void BM_matrices_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_all(static_cast<int>(st.range(0))));
}

void BM_matrices_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_all_serial(static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_enumerate_parallel)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_serial)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matrices_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_matrices_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
