#include <benchmark/benchmark.h>

#include "vnum/combinatorics.hpp"
#include "vnum/corpus.hpp"
#include "vnum/homology.hpp"
#include "vnum/symbolic.hpp"
#include "vnum/vnumber.hpp"

using namespace vnum;

namespace {

// Cover ideal of C_n, the running example throughout.
MonomialIdeal cover_of_cycle(std::size_t n) { return cover_ideal(cycle_graph(n)); }

void BM_SymbolicPower(benchmark::State& state) {
  const auto J = cover_of_cycle(5);
  const auto k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(J, k));
}
BENCHMARK(BM_SymbolicPower)->DenseRange(1, 4);

void BM_SymbolicPowerSquareFree(benchmark::State& state) {
  const auto J = cover_of_cycle(5);
  const auto k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power_square_free(J, k));
}
BENCHMARK(BM_SymbolicPowerSquareFree)->DenseRange(1, 4);

void BM_VNumber(benchmark::State& state) {
  const auto S = symbolic_power(cover_of_cycle(5), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(v_number(S));
}
BENCHMARK(BM_VNumber)->DenseRange(1, 4);

void BM_Regularity(benchmark::State& state) {
  const auto S = symbolic_power(cover_of_cycle(5), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regularity(S));
}
BENCHMARK(BM_Regularity)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BettiEdgeIdeal(benchmark::State& state) {
  const auto I = edge_ideal(cycle_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(betti_numbers(I));
}
BENCHMARK(BM_BettiEdgeIdeal)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_Waldschmidt(benchmark::State& state) {
  const auto I = edge_ideal(cycle_graph(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(waldschmidt_constant(I));
}
BENCHMARK(BM_Waldschmidt)->DenseRange(5, 12, 1);

void BM_VertexEnumeration(benchmark::State& state) {
  const auto P = symbolic_polyhedron(edge_ideal(cycle_graph(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_vertices(P));
}
BENCHMARK(BM_VertexEnumeration)->DenseRange(5, 9, 1)->Unit(benchmark::kMillisecond);

void BM_GraphCorpus(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graphs_on(n, GraphFilter::All));
}
BENCHMARK(BM_GraphCorpus)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_SquareFreeCorpus(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(square_free_ideals(m, 6));
}
BENCHMARK(BM_SquareFreeCorpus)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
