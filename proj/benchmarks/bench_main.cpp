#include <benchmark/benchmark.h>

#include "m2z/mat2.hpp"
#include "m2z/numtheory.hpp"
#include "m2z/oracle.hpp"
#include "m2z/quadfield.hpp"

namespace {

using m2z::Int;
using m2z::Mat2;

Mat2 naive_pow(const Mat2& a, unsigned long n) {
  Mat2 out = a;
  for (unsigned long i = 1; i < n; ++i) out = out * a;
  return out;
}

void BM_PowClosed(benchmark::State& state) {
  const Mat2 a{3, -2, 5, 7};
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m2z::pow_closed(a, n));
}
BENCHMARK(BM_PowClosed)->RangeMultiplier(4)->Range(4, 4096);

void BM_PowNaive(benchmark::State& state) {
  const Mat2 a{3, -2, 5, 7};
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(naive_pow(a, n));
}
BENCHMARK(BM_PowNaive)->RangeMultiplier(4)->Range(4, 4096);

void BM_Commutes(benchmark::State& state) {
  const Mat2 a{2, 2, 3, 1}, b{3, 4, 6, 1};
  for (auto _ : state) benchmark::DoNotOptimize(m2z::commutes(a, b));
}
BENCHMARK(BM_Commutes);

void BM_ScalarOrder(benchmark::State& state) {
  const Mat2 a{1, 1, -1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(m2z::scalar_order_classify(a));
}
BENCHMARK(BM_ScalarOrder);

void BM_PellFundamental(benchmark::State& state) {
  const Int d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(m2z::pell_fundamental(d));
}
BENCHMARK(BM_PellFundamental)->Arg(61)->Arg(991)->Arg(1000099);

void BM_UvSolutions(benchmark::State& state) {
  const auto limit = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(m2z::uv_solutions(1, -5, 2, limit));
}
BENCHMARK(BM_UvSolutions)->Arg(8)->Arg(64);

void BM_EmbedLift(benchmark::State& state) {
  const m2z::CommutantFrame frame(1, 1, -1);
  const Mat2 b{5, 3, -3, 2};
  for (auto _ : state) benchmark::DoNotOptimize(m2z::lift(m2z::embed(b, frame), frame));
}
BENCHMARK(BM_EmbedLift);

void BM_Oracle(benchmark::State& state) {
  const m2z::EquationSpec spec{1, -3, -1, 2, 2};
  const Int bound = state.range(0);
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(m2z::enumerate_solutions(spec, bound, jobs));
}
BENCHMARK(BM_Oracle)->Args({2, 1})->Args({3, 1})->Args({3, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
