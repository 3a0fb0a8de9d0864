#include "spinor_inv/analysis.hpp"
#include "spinor_inv/catalog.hpp"
#include "spinor_inv/contraction.hpp"

#include <benchmark/benchmark.h>

using namespace spinv;

namespace {

const char* const kW1 =
    "C[i l] C[j m] C[k q] g0[n t] g0[o u] g0[p s] C[r x] C[w z] C[v y] "
    "Psi*[i j k] Psi*[l m n] Psi*[o p q] Psi[r s t] Psi[u v w] Psi[x y z]";

void BM_PlannedW1(benchmark::State& st) {
  const EvaluationPlan p = plan(parse_pattern(kW1));
  const StateTensor s = random_state(3, 1);
  for (auto _ : st) benchmark::DoNotOptimize(execute(p, s));
}
BENCHMARK(BM_PlannedW1);

void BM_NaiveW1(benchmark::State& st) {
  const ContractionPattern p = parse_pattern(kW1);
  const StateTensor s = random_state(3, 1);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_naive(p, s));
}
BENCHMARK(BM_NaiveW1)->Unit(benchmark::kMillisecond);

void BM_ParseAndPlanW1(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(plan(parse_pattern(kW1)));
}
BENCHMARK(BM_ParseAndPlanW1);

void BM_FamilyRank(benchmark::State& st) {
  const auto& names = family(family_ids()[static_cast<std::size_t>(st.range(0))]);
  for (auto _ : st) benchmark::DoNotOptimize(numeric_rank(names));
  st.SetLabel(family_ids()[static_cast<std::size_t>(st.range(0))]);
}
BENCHMARK(BM_FamilyRank)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Balance(benchmark::State& st) {
  const WeightSystem w = weight_vectors(catalog_state("req1").state);
  for (auto _ : st) benchmark::DoNotOptimize(is_balanced(w));
}
BENCHMARK(BM_Balance);

}  // namespace
BENCHMARK_MAIN();
