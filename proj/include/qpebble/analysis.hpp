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

#include <optional>
#include <vector>

#include "json.hpp"
#include "qpebble/agent.hpp"
#include "qpebble/graph.hpp"

namespace qpebble {

inline constexpr double kDefaultEps = 0.01;

/// Probabilities for the fixed-n protocol on a path of length D.
struct BoundReport {
    /// cos^2(pi / 2 delta)
    double delta = 0.0;
    /// delta_max * delta^n (not clamped; may exceed 1)
    double per_node_failure = 0.0;
    /// max(0, 1 - per_node_failure)^D
    double success_lower = 0.0;
    int required_n = 1;
};

/// max(0, 1 - delta * cos^2(pi/2 delta)^n)^D, evaluated with log1p.
double success_lower_bound(int distance, long long delta, int n);

/// Smallest n with delta * cos^2(pi/2 delta)^n <= eps / D.
int required_n(int distance, long long delta, double eps);

BoundReport bound_report(int distance, long long delta, double eps, std::optional<int> n = std::nullopt);
nlohmann::json to_json(const BoundReport &report);

/// Probability that n samples in a wrong bit/sign basis form a uniform run of
/// either sign: 2 * (1/2)^n.
double bitsign4_wrong_run_prob(int n);

/// The bit/sign protocol has one wrong basis with single-shot overlap 1/2, so
/// its constants differ from the M(j) family's: per-node failure 2^(1-n).
BoundReport bitsign4_bound_report(int distance, double eps, std::optional<int> n = std::nullopt);

/// Single-qubit full-path encoding: the overlap bound becomes
/// cos^2(pi / (2 delta^D)). Everything is kept as logarithms so that D and
/// delta far beyond double range stay finite.
struct FullPathBound {
    /// ln ln(1/delta') where delta' = cos^2(pi / (2 delta^D)).
    double log_log_inv_delta_prime = 0.0;
    /// ln(1/delta'); underflows to 0 when delta^D is astronomically large.
    double log_inv_delta_prime = 0.0;
    /// ln(delta D / eps) / ln(1/delta'), and its logarithm.
    double measurement_count_estimate = 0.0;
    double log_measurement_count_estimate = 0.0;
};

FullPathBound full_path_log_bound(int distance, long long delta, double eps = kDefaultEps);

/// -2 ln cos(x), switching to x^2 + x^4/6 below x = 1e-4.
double neg_two_log_cos(double x);

struct PathComparison {
    int distance = 0;
    long long max_degree = 0;
    double per_node_total = 0.0;
    double full_path_total = 0.0;
    /// ln(full_path_total / per_node_total)
    double log_ratio = 0.0;
    bool full_path_not_better = false;
};

/// Total samples: per node D * required_n * delta/2; full path
/// estimate * delta^D / 2.
PathComparison compare_single_vs_per_node(int distance, long long delta, double eps = kDefaultEps);
nlohmann::json to_json(const PathComparison &cmp);

// ---- classical impossibility -----------------------------------------------

struct TableVerdict {
    int table_index = 0;
    /// First gadget family index defeating the table under all 64 placements,
    /// or -1.
    int witness_graph = -1;
};

struct ImpossibilityReport {
    int tables_total = 0;
    int tables_defeated = 0;
    int graphs_examined = 0;
    int placements_per_graph = 0;
    /// Longest trajectory seen (entries, including the start).
    int max_trajectory_length = 0;
    /// Some gadget defeats every table at once.
    bool universal_graph_exists = false;
    std::vector<TableVerdict> verdicts;

    bool passed() const { return tables_total > 0 && tables_defeated == tables_total; }
};

/// True iff every one of the 2^6 marker placements fails to reach T on `g`.
bool table_defeated_on(const PortGraph &g, const DecisionTable &table, int *max_len = nullptr);

/// Exhaustive check over 64 tables x 216 gadgets x 64 placements. Tables are
/// distributed over OpenMP threads; results are aggregated by table index.
ImpossibilityReport check_impossibility();
/// Single-threaded reference of the same search.
ImpossibilityReport check_impossibility_serial();

nlohmann::json to_json(const ImpossibilityReport &report);

}  // namespace qpebble
