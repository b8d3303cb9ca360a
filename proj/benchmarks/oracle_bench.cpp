#include <benchmark/benchmark.h>

#include "majcol/instances.hpp"

using namespace majcol;

namespace {

void BM_OracleGeneralLowerBound(benchmark::State& state) {
    auto g = general_lower_bound(2);
    for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(g, 2, 3));
}
BENCHMARK(BM_OracleGeneralLowerBound);

void BM_OracleRandomFeasible(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto g = random_min_degree_graph({n, 4, false, 0, 21});
    SearchOutcome last;
    for (auto _ : state) last = exhaustive_search(g, 2, 3, 1'000'000);
    state.counters["nodes"] = static_cast<double>(last.node_count);
}
BENCHMARK(BM_OracleRandomFeasible)->Arg(8)->Arg(12)->Arg(16);

}  // namespace
