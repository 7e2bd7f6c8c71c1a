#include "epiclo/closure.hpp"
#include "epiclo/congruence.hpp"
#include "epiclo/corpus.hpp"
#include "epiclo/homomorphism.hpp"
#include "epiclo/instances.hpp"
#include "epiclo/reflection.hpp"

#include <benchmark/benchmark.h>

using namespace epiclo;

static void BM_ConLatticeCyclic(benchmark::State& state) {
  auto g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(con_lattice(g));
}
BENCHMARK(BM_ConLatticeCyclic)->Arg(8)->Arg(16)->Arg(32);

static void BM_ConLatticeQuandle(benchmark::State& state) {
  auto q = dihedral_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(con_lattice(q));
}
BENCHMARK(BM_ConLatticeQuandle)->Arg(6)->Arg(12)->Arg(24);

static void BM_EnumerateHoms(benchmark::State& state) {
  auto x = dihedral_group(static_cast<std::size_t>(state.range(0)));
  auto y = dihedral_group(3);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_homs(x, y));
}
BENCHMARK(BM_EnumerateHoms)->Arg(3)->Arg(6);

static void BM_Corpus(benchmark::State& state) {
  auto kind = static_cast<CorpusKind>(state.range(0));
  auto max = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(corpus(kind, max));
}
BENCHMARK(BM_Corpus)
    ->Args({int(CorpusKind::groups), 8})
    ->Args({int(CorpusKind::groups), 12})
    ->Args({int(CorpusKind::rngs), 24})
    ->Args({int(CorpusKind::quandles), 4})
    ->Unit(benchmark::kMillisecond);

static void BM_AbelianizationChecks(benchmark::State& state) {
  auto u = corpus(CorpusKind::groups, 12);
  for (auto _ : state) {
    auto c = abelianization_operator(u);
    benchmark::DoNotOptimize(is_natural(c));
    benchmark::DoNotOptimize(is_idempotent(c));
    benchmark::DoNotOptimize(is_cohereditary(c));
    benchmark::DoNotOptimize(is_minimal(c));
  }
}
BENCHMARK(BM_AbelianizationChecks)->Unit(benchmark::kMillisecond);

static void BM_OracleReflector(benchmark::State& state) {
  auto u = corpus(CorpusKind::rngs, 24);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_reflector(u, reduced_rngs()));
}
BENCHMARK(BM_OracleReflector)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
