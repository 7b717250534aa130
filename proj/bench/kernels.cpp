// Serial reference against the OpenMP kernels on synthetic curves.

#include <benchmark/benchmark.h>

#include "arfc/bounds.hpp"
#include "arfc/lipman.hpp"
#include "arfc/locality.hpp"
#include "arfc/tree.hpp"

using namespace arfc;

namespace {

// n distinct branches through one point: branch i is (t^3 + (i+1) t^4, t^4 + t^(5+i)).
Parametrization fan(std::size_t n) {
  Parametrization p{n, {}};
  std::vector<SeriesFraction> g1, g2;
  for (std::size_t i = 0; i < n; ++i) {
    g1.emplace_back(Polynomial({{3, 1}, {4, Rational(long(i + 1))}}));
    g2.emplace_back(Polynomial({{4, 1}, {Exponent(5 + i), 1}}));
  }
  p.generators = {CurveElement(g1), CurveElement(g2)};
  return p;
}

ExecutionPolicy policy_of(const benchmark::State& s) {
  return s.range(1) ? ExecutionPolicy::parallel : ExecutionPolicy::serial;
}

void BM_locality_matrix(benchmark::State& state) {
  const Parametrization p = fan(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(locality_matrix(p, policy_of(state)));
}

void BM_small_elements_by_scan(benchmark::State& state) {
  const MultiplicityTree t = build_tree(lipman_sequence(fan(std::size_t(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(small_elements_by_scan(t, policy_of(state)));
  state.counters["small"] = double(small_elements(t).size());
}

void BM_bound_curve(benchmark::State& state) {
  const Parametrization p = fan(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bound_curve(p, {64, policy_of(state)}));
}

void BM_lipman_sequence(benchmark::State& state) {
  const Parametrization p = fan(std::size_t(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lipman_sequence(p, {512, policy_of(state)}));
}

}  // namespace

// Second argument: 0 serial, 1 parallel.
BENCHMARK(BM_locality_matrix)->ArgsProduct({{8, 32}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_small_elements_by_scan)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bound_curve)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_lipman_sequence)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
