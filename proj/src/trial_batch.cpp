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

#include "qpebble/trial_batch.hpp"

#include <omp.h>

namespace qpebble {

namespace {

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

void node_decode(const BasisFamily &family, int n, uint64_t seed, long long i, NodeDecodeStats &acc) {
    RngStream rng(seed, static_cast<uint64_t>(i));
    const long long delta = family.delta();
    const long long port = 1 + static_cast<long long>(rng.bounded(static_cast<uint32_t>(delta)));
    const Outcome label = port_label(port);
    const QubitState state = encode_port(port, delta, family.scheme());
    auto tallies = measure_node_fixed(state, family, n, rng);
    if (!tallies[label.basis_index].uniform()) {
        ++acc.correct_basis_broken;
    }
    auto decided = decide_fixed(tallies, family);
    ++acc.decodes;
    if (!decided) {
        ++acc.ambiguous;
    } else if (*decided == port) {
        ++acc.correct;
    } else {
        ++acc.wrong;
    }
}

}  // namespace

std::vector<TrialResult> run_trials_serial(const TrialBatch &batch, int trials) {
    std::vector<TrialResult> results(trials);
    for (int i = 0; i < trials; ++i) {
        RngStream rng(batch.seed, static_cast<uint64_t>(i));
        results[i] = run_trial(batch.graph, batch.placement, batch.agent, batch.step_budget, rng);
    }
    return results;
}

std::vector<TrialResult> run_trials_parallel(const TrialBatch &batch, int trials, int workers) {
    std::vector<TrialResult> results(trials);
    const int threads = thread_count(workers);
#pragma omp parallel for num_threads(threads) schedule(static)
    for (int i = 0; i < trials; ++i) {
        RngStream rng(batch.seed, static_cast<uint64_t>(i));
        results[i] = run_trial(batch.graph, batch.placement, batch.agent, batch.step_budget, rng);
    }
    return results;
}

NodeDecodeStats run_node_decodes_serial(Scheme scheme, long long delta, int n, long long decodes, uint64_t seed) {
    const BasisFamily family(scheme, delta);
    NodeDecodeStats total;
    for (long long i = 0; i < decodes; ++i) {
        node_decode(family, n, seed, i, total);
    }
    return total;
}

NodeDecodeStats run_node_decodes(Scheme scheme, long long delta, int n, long long decodes, uint64_t seed,
                                 int workers) {
    const BasisFamily family(scheme, delta);
    long long correct = 0, ambiguous = 0, wrong = 0, broken = 0;
    const int threads = thread_count(workers);
#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : correct, ambiguous, wrong, broken)
    for (long long i = 0; i < decodes; ++i) {
        NodeDecodeStats one;
        node_decode(family, n, seed, i, one);
        correct += one.correct;
        ambiguous += one.ambiguous;
        wrong += one.wrong;
        broken += one.correct_basis_broken;
    }
    return {decodes, correct, ambiguous, wrong, broken};
}

WrongRunStats run_bitsign4_wrong_basis(int n, long long runs, uint64_t seed, int workers) {
    const BasisFamily family(Scheme::BitSign4, 4);
    long long plus = 0, minus = 0;
    const int threads = thread_count(workers);
#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : plus, minus)
    for (long long i = 0; i < runs; ++i) {
        RngStream rng(seed, static_cast<uint64_t>(i));
        const long long port = 1 + rng.bounded(4);
        const int wrong_basis = 1 - port_label(port).basis_index;
        const double p_plus = plus_probability(encode_port(port, 4, Scheme::BitSign4), family.basis(wrong_basis));
        int plus_count = 0;
        for (int k = 0; k < n; ++k) {
            plus_count += sample_sign(p_plus, rng) == Sign::Plus ? 1 : 0;
        }
        plus += plus_count == n ? 1 : 0;
        minus += plus_count == 0 ? 1 : 0;
    }
    return {runs, plus, minus};
}

}  // namespace qpebble
