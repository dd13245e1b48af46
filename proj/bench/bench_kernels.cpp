// Copyright 2026 The qpebble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels versus their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "qpebble/analysis.hpp"
#include "qpebble/trial_batch.hpp"

namespace {

using namespace qpebble;

struct HuntFixture {
    PortGraph graph = gen_padded_path(10, 4, 42);
    Placement placement = place_pebbles(graph, Scheme::General);
    ObliviousAgent agent{QuantumFixedN{53}, Scheme::General, 4};
    TrialBatch batch{graph, placement, agent, 10, 42};
};

void BM_trials_serial(benchmark::State &state) {
    HuntFixture f;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials_serial(f.batch, static_cast<int>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_trials_serial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_trials_parallel(benchmark::State &state) {
    HuntFixture f;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials_parallel(f.batch, static_cast<int>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_trials_parallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_node_decodes_serial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_node_decodes_serial(Scheme::General, 8, 20, state.range(0), 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_node_decodes_serial)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_node_decodes_parallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_node_decodes(Scheme::General, 8, 20, state.range(0), 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_node_decodes_parallel)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_impossibility_serial(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_impossibility_serial());
    }
}
BENCHMARK(BM_impossibility_serial)->Unit(benchmark::kMillisecond);

void BM_impossibility_parallel(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_impossibility());
    }
}
BENCHMARK(BM_impossibility_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
