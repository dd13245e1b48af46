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

#pragma once

#include <cstdint>
#include <vector>

#include "qpebble/agent.hpp"
#include "qpebble/encoding.hpp"
#include "qpebble/graph.hpp"

namespace qpebble {

/// Everything a batch of independent hunts shares. Trial i draws from
/// RngStream(seed, i), so results depend only on (batch, i).
struct TrialBatch {
    const PortGraph &graph;
    const Placement &placement;
    const ObliviousAgent &agent;
    int step_budget = 0;
    uint64_t seed = 0;
};

/// Reference loop, one trial after another.
std::vector<TrialResult> run_trials_serial(const TrialBatch &batch, int trials);

/// OpenMP loop over trial indices. workers <= 0 uses the OpenMP default.
/// Returns exactly what run_trials_serial returns.
std::vector<TrialResult> run_trials_parallel(const TrialBatch &batch, int trials, int workers = 0);

/// Tallies of isolated per-node decodes of the fixed-n protocol.
struct NodeDecodeStats {
    long long decodes = 0;
    long long correct = 0;
    long long ambiguous = 0;
    long long wrong = 0;
    /// Samples where the basis holding the pebble state was not uniform.
    long long correct_basis_broken = 0;

    bool operator==(const NodeDecodeStats &) const = default;
};

/// `decodes` independent pebbles with a uniformly drawn port label in
/// [1, delta], each measured n times per basis and decided by decide_fixed.
/// Decode i uses RngStream(seed, i).
NodeDecodeStats run_node_decodes(Scheme scheme, long long delta, int n, long long decodes, uint64_t seed,
                                 int workers = 0);
NodeDecodeStats run_node_decodes_serial(Scheme scheme, long long delta, int n, long long decodes, uint64_t seed);

struct WrongRunStats {
    long long runs = 0;
    long long uniform_plus = 0;
    long long uniform_minus = 0;

    long long uniform_either() const { return uniform_plus + uniform_minus; }
    bool operator==(const WrongRunStats &) const = default;
};

/// Bit/sign protocol: n samples of a random psi_j in the basis that does not
/// hold it, counting uniform runs of each sign.
WrongRunStats run_bitsign4_wrong_basis(int n, long long runs, uint64_t seed, int workers = 0);

}  // namespace qpebble
