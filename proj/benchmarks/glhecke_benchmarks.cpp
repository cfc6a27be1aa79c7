#include <benchmark/benchmark.h>

#include "glhecke/gamma.hpp"
#include "glhecke/hecke_module.hpp"
#include "glhecke/ktype_oracle.hpp"
#include "glhecke/psi.hpp"

namespace {

using namespace glhecke;

Multisegment singletons(int k) {
  std::vector<Segment> segs;
  for (const auto& x : rho(k)) segs.emplace_back(x, 1);
  return Multisegment(segs);
}

void BM_StandardModule(benchmark::State& state) {
  const auto ms = singletons(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_standard_module(ms).dim());
}
BENCHMARK(BM_StandardModule)->DenseRange(2, 5);

void BM_VerifyRelations(benchmark::State& state) {
  const auto m = build_standard_module(singletons(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(m.matrices()));
}
BENCHMARK(BM_VerifyRelations)->DenseRange(2, 5);

void BM_Quotient(benchmark::State& state) {
  const auto hp = HeckeParam::dominant_representative(singletons(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_quotient(hp).dim);
}
BENCHMARK(BM_Quotient)->DenseRange(2, 5);

void BM_TensorPower(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_power_standard(2, 2, k).total_dimension());
}
BENCHMARK(BM_TensorPower)->DenseRange(2, 8, 2);

void BM_BijectionAtConsecutive(benchmark::State& state) {
  const auto lambda = IntegralWeight::consecutive(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_bijection_level_n(lambda).pairs.size());
}
BENCHMARK(BM_BijectionAtConsecutive)->DenseRange(4, 8, 2);

void BM_PsiWellPosed(benchmark::State& state) {
  const IntegralWeight lambda({3, 3, 2, 2, 1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(verify_psi_wellposed(lambda).variants);
}
BENCHMARK(BM_PsiWellPosed);

}  // namespace

BENCHMARK_MAIN();
