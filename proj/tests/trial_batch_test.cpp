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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qpebble/analysis.hpp"

using namespace qpebble;

TEST(TrialBatch, parallel_equals_serial) {
    auto g = gen_padded_path(10, 4, 42);
    auto placement = place_pebbles(g, Scheme::General);
    for (AgentStrategy s : {AgentStrategy{QuantumFixedN{6}}, AgentStrategy{QuantumAdaptive{80}},
                            AgentStrategy{RandomWalk{}}}) {
        ObliviousAgent agent(s, Scheme::General, 4);
        TrialBatch batch{g, placement, agent, 40, 7};
        auto serial = run_trials_serial(batch, 3000);
        for (int workers : {1, 2, 3, 8}) {
            EXPECT_EQ(run_trials_parallel(batch, 3000, workers), serial) << describe(s) << " x" << workers;
        }
    }
}

TEST(TrialBatch, seed_changes_results) {
    auto g = gen_padded_path(10, 4, 42);
    auto placement = place_pebbles(g, Scheme::General);
    ObliviousAgent agent(QuantumFixedN{4}, Scheme::General, 4);
    auto a = run_trials_serial({g, placement, agent, 20, 1}, 500);
    auto b = run_trials_serial({g, placement, agent, 20, 2}, 500);
    EXPECT_NE(a, b);
}

TEST(NodeDecodes, parallel_equals_serial_and_bound_holds) {
    for (long long delta : {4, 8}) {
        for (int n : {5, 10}) {
            auto ser = run_node_decodes_serial(Scheme::General, delta, n, 20000, 3);
            EXPECT_EQ(run_node_decodes(Scheme::General, delta, n, 20000, 3, 4), ser);
            EXPECT_EQ(ser.decodes, 20000);
            EXPECT_EQ(ser.correct + ser.ambiguous + ser.wrong, ser.decodes);
            EXPECT_EQ(ser.wrong, 0);
            EXPECT_EQ(ser.correct_basis_broken, 0);
            double bound = std::min(1.0, delta * std::pow(delta_bound(delta), n));
            double rate = static_cast<double>(ser.ambiguous) / ser.decodes;
            EXPECT_LE(rate, bound + 4 * oracle::binomial_sigma(bound, ser.decodes));
        }
    }
}

TEST(WrongBasisRuns, within_four_sigma_of_closed_form) {
    for (int n : {1, 3, 8}) {
        auto stats = run_bitsign4_wrong_basis(n, 200000, 11, 2);
        EXPECT_EQ(stats, run_bitsign4_wrong_basis(n, 200000, 11, 1));
        double p = bitsign4_wrong_run_prob(n);
        double freq = static_cast<double>(stats.uniform_either()) / stats.runs;
        EXPECT_NEAR(freq, p, 4 * oracle::binomial_sigma(p, stats.runs) + 1e-12) << n;
        double half = p / 2;
        EXPECT_NEAR(static_cast<double>(stats.uniform_plus) / stats.runs, half,
                    4 * oracle::binomial_sigma(half, stats.runs) + 1e-12);
    }
}
