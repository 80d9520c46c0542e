// Parallel kernels against their serial references.
#include <random>

#include <benchmark/benchmark.h>

#include "polypart/families.hpp"
#include "polypart/genfun.hpp"
#include "polypart/identities.hpp"
#include "polypart/oracle.hpp"

using namespace polypart;

namespace {

void BM_Enumerate(benchmark::State& state) {
  const LinearConstraintSystem cs = hermite_constraints(5);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(cs, state.range(0)));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const LinearConstraintSystem cs = hermite_constraints(5);
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate(cs, state.range(0)));
}

void BM_Expand(benchmark::State& state) {
  const RationalGF g = rhs_hermite_full(6);
  for (auto _ : state) benchmark::DoNotOptimize(expand(g, static_cast<int>(state.range(0))));
}

void BM_ExpandSerial(benchmark::State& state) {
  const RationalGF g = rhs_hermite_full(6);
  for (auto _ : state) benchmark::DoNotOptimize(serial::expand(g, static_cast<int>(state.range(0))));
}

std::vector<std::vector<BigRat>> points(std::size_t count, std::size_t nvars) {
  std::mt19937_64 rng(0);
  std::vector<std::vector<BigRat>> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point(rng, nvars));
  return out;
}

void BM_EvaluateAt(benchmark::State& state) {
  const RationalGF g = rhs_ngon_full(6);
  const auto p = points(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_at(g, p));
}

void BM_EvaluateAtSerial(benchmark::State& state) {
  const RationalGF g = rhs_ngon_full(6);
  const auto p = points(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(serial::evaluate_at(g, p));
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(16)->Arg(22)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Expand)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandSerial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateAt)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateAtSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
