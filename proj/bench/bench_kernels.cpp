// OpenMP kernels against their serial reference versions.

#include <benchmark/benchmark.h>

#include <random>

#include "mcf/classify.hpp"
#include "mcf/constructions.hpp"
#include "mcf/saturate.hpp"

using namespace mcf;

namespace {

PointSet random_set(const Space& sp, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<PointIdx> pick(0, static_cast<PointIdx>(sp.num_points() - 1));
  PointSet S(sp.num_points());
  while (static_cast<int>(S.size()) < n) S.insert(pick(rng));
  return S;
}

void BM_Coverage(benchmark::State& st) {
  Space sp(2, make_field(static_cast<int>(st.range(0))));
  auto S = random_set(sp, static_cast<int>(st.range(1)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(coverage(sp, S).sum());
}

void BM_CoverageReference(benchmark::State& st) {
  Space sp(2, make_field(static_cast<int>(st.range(0))));
  auto S = random_set(sp, static_cast<int>(st.range(1)), 1);
  for (auto _ : st) benchmark::DoNotOptimize(reference::coverage(sp, S).sum());
}

void BM_Minimal(benchmark::State& st) {
  Space sp(2, make_field(static_cast<int>(st.range(0))));
  auto S = constructions::line_plus_two_points(sp).point_set;
  for (auto _ : st) benchmark::DoNotOptimize(is_minimal(sp, S, 2));
}

void BM_MinimalReference(benchmark::State& st) {
  Space sp(2, make_field(static_cast<int>(st.range(0))));
  auto S = constructions::line_plus_two_points(sp).point_set;
  for (auto _ : st) benchmark::DoNotOptimize(reference::is_minimal(sp, S, 2));
}

void BM_CountLabelled(benchmark::State& st) {
  Space sp(2, make_field(static_cast<int>(st.range(0))));
  PlaneKernel K(sp);
  for (auto _ : st) benchmark::DoNotOptimize(classify::count_labelled(K, 2, classify::Predicate::minimal, 6, 7));
}

void BM_CountLabelledReference(benchmark::State& st) {
  Space sp(2, make_field(static_cast<int>(st.range(0))));
  PlaneKernel K(sp);
  for (auto _ : st)
    benchmark::DoNotOptimize(classify::reference::count_labelled(K, 2, classify::Predicate::minimal, 6, 7));
}

}  // namespace

BENCHMARK(BM_Coverage)->Args({31, 60})->Args({64, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageReference)->Args({31, 60})->Args({64, 200})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Minimal)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinimalReference)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountLabelled)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountLabelledReference)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
