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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qpebble/agent.hpp"
#include "qpebble/analysis.hpp"
#include "qpebble/encoding.hpp"
#include "qpebble/graph.hpp"

namespace qpebble {

class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Where the graph comes from. Text forms:
///   path:D=10,delta=4[,seed=S]
///   gadget:p=2,q=2,r=2[,flip=M]
///   file:PATH
struct GraphSource {
    enum class Kind { PaddedPath, Gadget, File };
    Kind kind = Kind::PaddedPath;
    int distance = 1;
    int delta = 2;
    /// Generator seed; falls back to the experiment seed.
    std::optional<uint64_t> seed;
    GadgetSpec gadget;
    std::string path;

    static GraphSource parse(std::string_view text);
    std::string to_string() const;
};

PortGraph build_graph(const GraphSource &source, uint64_t fallback_seed);

/// Strategy before it is resolved against a concrete graph. Text forms:
///   fixed:auto | fixed:N | adaptive:auto | adaptive:CAP | qudit | random | table:INDEX
struct StrategySpec {
    enum class Kind { Fixed, Adaptive, Qudit, Random, Table };
    Kind kind = Kind::Fixed;
    /// n, cap or table index; nullopt means "auto".
    std::optional<long long> param;

    static StrategySpec parse(std::string_view text);
    std::string to_string() const;
};

/// Multiplier on n*delta/2 for adaptive:auto.
inline constexpr long long kAdaptiveAutoCapFactor = 10;

struct ExperimentConfig {
    GraphSource graph_source;
    Scheme scheme = Scheme::General;
    StrategySpec strategy;
    int trials = 1;
    uint64_t seed = 0;
    /// Defaults to the shortest-path length D.
    std::optional<int> step_budget;
    double eps = kDefaultEps;
    /// OpenMP threads; 0 uses the runtime default. Never affects results.
    int workers = 0;

    void check() const;
    static ExperimentConfig from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;
};

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// 95% Wilson score interval.
WilsonInterval wilson_interval(long long successes, long long trials, double z = 1.959963984540054);

struct SummaryStats {
    long long trials = 0;
    long long successes = 0;
    double success_rate = 0.0;
    WilsonInterval wilson_ci_95;
    double mean_steps = 0.0;
    double mean_measurements = 0.0;
    std::array<long long, kFailureKindCount> failure_breakdown{};
    BoundReport bound;
};

/// Order-independent aggregation keyed by trial index.
SummaryStats summarize(const std::vector<TrialResult> &trials, const BoundReport &bound);

struct ExperimentResult {
    int distance = 0;
    long long max_degree = 0;
    /// n actually used by a fixed-n strategy, else 0.
    int resolved_n = 0;
    int step_budget = 0;
    AgentStrategy strategy;
    Placement placement;
    SummaryStats summary;
    std::vector<TrialResult> trials;
};

AgentStrategy resolve_strategy(const StrategySpec &spec, int distance, long long delta, double eps);

ExperimentResult run_experiment(const ExperimentConfig &cfg);

void write_trials_csv(std::ostream &out, const std::vector<TrialResult> &trials);
nlohmann::json summary_to_json(const ExperimentResult &result, const ExperimentConfig &cfg);

enum class SweepAxis { N, D, Delta };
SweepAxis parse_axis(std::string_view name);
std::string_view to_string(SweepAxis axis);

struct SweepRow {
    long long value = 0;
    int resolved_n = 0;
    SummaryStats stats;
};

/// One experiment per value, all with the base seed.
std::vector<SweepRow> sweep(const ExperimentConfig &cfg, SweepAxis axis, const std::vector<long long> &values);
void write_sweep_csv(std::ostream &out, SweepAxis axis, const std::vector<SweepRow> &rows);
nlohmann::json sweep_to_json(SweepAxis axis, const std::vector<SweepRow> &rows);

}  // namespace qpebble
