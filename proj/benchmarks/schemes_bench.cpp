#include <benchmark/benchmark.h>

#include "majcol/instances.hpp"
#include "majcol/schemes.hpp"

using namespace majcol;

namespace {

void BM_Scheme(benchmark::State& state, Algorithm algorithm, bool bipartite) {
    const auto k = static_cast<unsigned>(state.range(0));
    std::size_t delta = 0;
    switch (algorithm) {
        case Algorithm::bipartite: delta = bipartite_threshold(k); break;
        case Algorithm::general: delta = general_threshold(k); break;
        case Algorithm::refined: delta = refined_threshold(k); break;
        case Algorithm::small_k: delta = small_k_threshold(k); break;
    }
    auto g = random_min_degree_graph({bipartite ? 4 * delta : 2 * delta, delta, bipartite, 0, 11});
    for (auto _ : state) benchmark::DoNotOptimize(colour_with(algorithm, g, k));
    state.counters["edges"] = static_cast<double>(g.edge_count());
}

BENCHMARK_CAPTURE(BM_Scheme, bipartite, Algorithm::bipartite, true)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scheme, general, Algorithm::general, false)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scheme, refined, Algorithm::refined, false)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scheme, small_k, Algorithm::small_k, false)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
