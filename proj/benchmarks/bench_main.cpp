#include <benchmark/benchmark.h>

#include <vector>

#include "treedeg/embed.hpp"
#include "treedeg/graph.hpp"
#include "treedeg/numerics.hpp"
#include "treedeg/oracle.hpp"
#include "treedeg/ramsey.hpp"
#include "treedeg/tree.hpp"

using namespace treedeg;

namespace {

void bm_canonical_form(benchmark::State& state) {
    Graph g = random_graph(int(state.range(0)), 3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(10)->Arg(12);

void bm_subgraph_embed_hit(benchmark::State& state) {
    Tree t = make_tpq(2, 4);
    Graph host = complete_multipartite(3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(subgraph_embed(t.graph(), host));
}
BENCHMARK(bm_subgraph_embed_hit);

void bm_subgraph_embed_miss(benchmark::State& state) {
    Tree t = make_tpq(1, 5);
    Graph host = complete_multipartite(3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(subgraph_embed(t.graph(), host));
}
BENCHMARK(bm_subgraph_embed_miss);

void bm_decide_and_embed(benchmark::State& state) {
    Tree t = make_tpq(2, 4);
    Graph host = complete_multipartite(3, 3);
    for (auto _ : state) benchmark::DoNotOptimize(decide_and_embed(t, host));
}
BENCHMARK(bm_decide_and_embed);

void bm_enumerate_graphs(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_graphs(int(state.range(0)), 2, true));
}
BENCHMARK(bm_enumerate_graphs)->Arg(6)->Arg(7);

void bm_enumerate_trees(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_trees(int(state.range(0))));
}
BENCHMARK(bm_enumerate_trees)->Arg(9)->Arg(10);

void bm_is_lin_comb(benchmark::State& state) {
    std::vector<int> parts{9, 8, 12};
    CombWitness w;
    for (auto _ : state) benchmark::DoNotOptimize(is_lin_comb(271, parts, &w));
}
BENCHMARK(bm_is_lin_comb);

void bm_exact_ramsey(benchmark::State& state) {
    Tree t = make_tpq(1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(exact_ramsey(t, 3, 10));
}
BENCHMARK(bm_exact_ramsey);

}  // namespace

BENCHMARK_MAIN();
