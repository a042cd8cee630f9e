#include <benchmark/benchmark.h>

#include <random>

#include "gbt/claims.hpp"
#include "gbt/enumeration.hpp"

namespace {

std::vector<gbt::GbtSpace> random_spaces(unsigned n, std::size_t count) {
  const auto families = gbt::gt_families(n);
  std::mt19937_64 rng(7);
  std::vector<gbt::GbtSpace> out;
  for (std::size_t k = 0; k < count; ++k)
    out.push_back(gbt::space_from_families(n, families[rng() % families.size()], families[rng() % families.size()]));
  return out;
}

void BM_GtFamilies(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbt::gt_families(n));
}
BENCHMARK(BM_GtFamilies)->DenseRange(2, 4);

void BM_Closure(benchmark::State& state) {
  const auto spaces = random_spaces(4, 64);
  for (auto _ : state)
    for (const auto& s : spaces)
      for (gbt::Mask a = 0; a < 16; ++a) benchmark::DoNotOptimize(s.mu1().closure_bits(a));
}
BENCHMARK(BM_Closure);

void BM_AxiomProfile(benchmark::State& state) {
  const auto spaces = random_spaces(static_cast<unsigned>(state.range(0)), 64);
  for (auto _ : state)
    for (const auto& s : spaces) benchmark::DoNotOptimize(gbt::axiom_profile(s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spaces.size()));
}
BENCHMARK(BM_AxiomProfile)->Arg(3)->Arg(4)->Arg(5);

void BM_FastProfile(benchmark::State& state) {
  const auto spaces = random_spaces(static_cast<unsigned>(state.range(0)), 64);
  for (auto _ : state)
    for (const auto& s : spaces) benchmark::DoNotOptimize(gbt::fast_profile(s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spaces.size()));
}
BENCHMARK(BM_FastProfile)->Arg(3)->Arg(4)->Arg(5);

void BM_CanonicalPairs(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gbt::canonical_pairs(n, gbt::Symmetry::permutations_and_swap, 1));
}
BENCHMARK(BM_CanonicalPairs)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MineExhausted(benchmark::State& state) {
  gbt::MiningQuery q;
  q.antecedents = {gbt::Property::T1_4};
  q.consequent = gbt::Property::T3_8;
  q.n_min = q.n_max = 4;
  for (auto _ : state) benchmark::DoNotOptimize(gbt::mine(q, gbt::SearchOptions{1}));
}
BENCHMARK(BM_MineExhausted)->Unit(benchmark::kMillisecond);

void BM_ClaimsSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gbt::run_claims());
}
BENCHMARK(BM_ClaimsSweep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
