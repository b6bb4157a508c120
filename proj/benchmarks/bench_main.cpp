#include <benchmark/benchmark.h>

#include "parhom/classify.hpp"
#include "parhom/generators.hpp"

using namespace parhom;

namespace {

Graph grid(int rows, int cols) {
    Graph g(rows * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
            if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
        }
    return g;
}

void bm_count_hom_tree_dp(benchmark::State& state) {
    Graph g = grid(2, static_cast<int>(state.range(0)));
    Graph h = generate(GraphFamily::h2());
    for (auto _ : state)
        benchmark::DoNotOptimize(count_hom(g, h, CountStrategy::TreeDp));
}
BENCHMARK(bm_count_hom_tree_dp)->Arg(4)->Arg(8)->Arg(12);

void bm_count_hom_enumerate(benchmark::State& state) {
    Graph g = grid(2, static_cast<int>(state.range(0)));
    Graph h = generate(GraphFamily::h2());
    for (auto _ : state)
        benchmark::DoNotOptimize(count_hom(g, h, CountStrategy::Enumerate));
}
BENCHMARK(bm_count_hom_enumerate)->Arg(4)->Arg(6);

void bm_involution_free_reduction(benchmark::State& state) {
    Graph h = generate(GraphFamily::skl(3, 3));
    for (auto _ : state)
        benchmark::DoNotOptimize(involution_free_reduction(h).result.vertex_count());
}
BENCHMARK(bm_involution_free_reduction);

void bm_classify_h2(benchmark::State& state) {
    Graph h = generate(GraphFamily::h2());
    for (auto _ : state) benchmark::DoNotOptimize(classify_parhom(h).hstar_n);
}
BENCHMARK(bm_classify_h2);

void bm_classify_impasse_chain(benchmark::State& state) {
    Graph skl = generate(GraphFamily::skl(1, 1));
    Graph host(12);
    for (auto [u, v] : skl.edges()) host.add_edge(u, v);
    host.add_edge(0, 8);
    host.add_edge(2, 9);
    host.add_edge(9, 10);
    host.add_edge(1, 11);
    for (auto _ : state) benchmark::DoNotOptimize(classify_parhom(host).hstar_n);
}
BENCHMARK(bm_classify_impasse_chain);

}  // namespace

BENCHMARK_MAIN();
