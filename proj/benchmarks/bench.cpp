#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "morsetw/acfm.hpp"
#include "morsetw/morse.hpp"
#include "morsetw/reductions.hpp"
#include "morsetw/simplicial_complex.hpp"
#include "morsetw/tree_decomposition.hpp"

using namespace morsetw;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return make_graph(n, arcs);
}

SimplicialComplex tetra_boundary() {
  return validate_complex({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex simplex4_boundary() {
  return validate_complex(
      {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4}});
}

Graph random_sparse(int n, int m, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> arcs;
  while (static_cast<int>(arcs.size()) < m) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v) continue;
    arcs.insert({std::min(u, v), std::max(u, v)});
  }
  return make_graph(n, {arcs.begin(), arcs.end()});
}

void bm_acfm_cycle(benchmark::State& state) {
  Graph g = cycle(static_cast<int>(state.range(0)));
  NiceTreeDecomposition d = default_decomposition(g);
  for (auto _ : state) benchmark::DoNotOptimize(max_acfm(g, d).size);
}
BENCHMARK(bm_acfm_cycle)->Arg(16)->Arg(64)->Arg(256);

void bm_optimal_morse_simplex4(benchmark::State& state) {
  SimplicialComplex k = simplex4_boundary();
  for (auto _ : state) benchmark::DoNotOptimize(optimal_morse_3manifold(k).matching.total_critical());
}
BENCHMARK(bm_optimal_morse_simplex4);

void bm_erasability_pipeline(benchmark::State& state) {
  SimplicialComplex k = tetra_boundary();
  for (auto _ : state) benchmark::DoNotOptimize(erasability_via_acfm(k).er);
}
BENCHMARK(bm_erasability_pipeline);

void bm_minfill(benchmark::State& state) {
  Graph g = random_sparse(static_cast<int>(state.range(0)), 3 * static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(heuristic_decomposition(g).width());
}
BENCHMARK(bm_minfill)->Arg(50)->Arg(100);

void bm_exact_treewidth(benchmark::State& state) {
  Graph g = random_sparse(12, 24, 7);
  for (auto _ : state) benchmark::DoNotOptimize(exact_treewidth(g).first);
}
BENCHMARK(bm_exact_treewidth);

void bm_erase_greedy_gadget(benchmark::State& state) {
  MasInstance inst;
  inst.sentences = {"a", "b", "c"};
  inst.relations = {{{0, 1}, 2}, {{0}, 1}};
  SimplicialComplex k = mas_to_erasability_gadget(inst).complex;
  for (auto _ : state) benchmark::DoNotOptimize(erase_greedy(k).erasable);
}
BENCHMARK(bm_erase_greedy_gadget);

void bm_brute_force_er(benchmark::State& state) {
  SimplicialComplex k = tetra_boundary();
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_er(k, 4));
}
BENCHMARK(bm_brute_force_er);

} // namespace

BENCHMARK_MAIN();
