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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qpebble/encoding.hpp"
#include "qpebble/graph.hpp"
#include "qpebble/quantum.hpp"
#include "qpebble/rng.hpp"

namespace qpebble {

/// What a deterministic classical agent does on one observation.
struct Action {
    static constexpr PortNumber kStay = -1;
    PortNumber port = kStay;

    static Action stay() { return {}; }
    static Action take(PortNumber p) { return {p}; }
    bool is_stay() const { return port == kStay; }
    bool operator==(const Action &) const = default;
};

/// Oblivious classical policy: (degree, pebble present) -> action.
class DecisionTable {
  public:
    void set(int degree, bool pebble, Action action) { actions_[{degree, pebble}] = action; }
    std::optional<Action> lookup(int degree, bool pebble) const;
    bool operator==(const DecisionTable &) const = default;

    /// Tables over degrees {1, 3} with actions stay or a valid port: the whole
    /// policy space on the impossibility gadget. index in [0, 64).
    static constexpr int kGadgetTableCount = 64;
    static DecisionTable gadget_table(int index);
    std::string describe() const;

  private:
    std::map<std::pair<int, bool>, Action> actions_;
};

struct QuantumFixedN {
    int n = 1;
};
struct QuantumAdaptive {
    long long cap = 1;
};
struct QuditOneShot {};
struct ClassicalTable {
    DecisionTable table;
};
struct RandomWalk {};

using AgentStrategy = std::variant<QuantumFixedN, QuantumAdaptive, QuditOneShot, ClassicalTable, RandomWalk>;

std::string describe(const AgentStrategy &strategy);

enum class FailureKind {
    None,
    AmbiguousDecode,
    WrongPortRange,
    MissingPebble,
    StepBudgetExhausted,
    DeclaredFailure,
};

std::string_view to_string(FailureKind kind);
inline constexpr int kFailureKindCount = 6;

struct TrialResult {
    bool success = false;
    int steps_taken = 0;
    long long measurements_total = 0;
    FailureKind failure = FailureKind::None;
    NodeId final_node = -1;

    bool operator==(const TrialResult &) const = default;
};

// ---- per-node quantum decoding ---------------------------------------------

struct BasisTally {
    int basis_index = 0;
    /// Outcomes in sampling order.
    std::vector<Sign> outcomes;

    int plus_count() const;
    /// All outcomes share one sign (vacuously false when empty).
    bool uniform() const;
};

using NodeTallies = std::vector<BasisTally>;

/// n independent samples of `state` in every basis of `family`, basis by
/// basis. Total samples: n * family.size().
NodeTallies measure_node_fixed(const QubitState &state, const BasisFamily &family, int n, RngStream &rng);

/// Port of the single uniform basis; nullopt (ambiguous) when zero or several
/// bases are uniform.
std::optional<long long> decide_fixed(const NodeTallies &tallies, const BasisFamily &family);

struct AdaptiveResult {
    std::optional<long long> port;
    long long measurements = 0;
    bool budget_exhausted = false;
};

/// Round-robin elimination: one sample per live basis per sweep; a basis is
/// dropped the first time an outcome differs from its earlier ones. Stops
/// when one sampled basis survives, or after `cap` samples.
AdaptiveResult measure_node_adaptive(const QubitState &state, const BasisFamily &family, long long cap,
                                     RngStream &rng);

// ---- the walk ---------------------------------------------------------------

/// Everything an oblivious agent may see in one round.
struct Observation {
    int degree = 0;
    const QuantumPebble *pebble = nullptr;
};

struct RoundDecision {
    enum class Kind { Move, Stay, Fail };
    Kind kind = Kind::Stay;
    PortNumber port = -1;
    FailureKind failure = FailureKind::None;
    long long measurements = 0;
};

/**
 * A protocol plus the static knowledge it is configured with (scheme and max
 * degree). act() is const: nothing observed in one round survives into the
 * next, and the only inputs are the observation and fresh randomness.
 */
class ObliviousAgent {
  public:
    ObliviousAgent(AgentStrategy strategy, Scheme scheme, long long delta);

    RoundDecision act(const Observation &obs, RngStream &rng) const;
    const AgentStrategy &strategy() const { return strategy_; }

  private:
    AgentStrategy strategy_;
    std::optional<BasisFamily> family_;
};

/// Walk from g.start() until the treasure, a failure, or step_budget rounds.
TrialResult run_trial(const PortGraph &g, const Placement &placement, const ObliviousAgent &agent, int step_budget,
                      RngStream &rng);
TrialResult run_trial(const PortGraph &g, const Placement &placement, const AgentStrategy &strategy,
                      int step_budget, RngStream &rng);

/// Deterministic walk of a classical table over fixed markers. Stops on the
/// treasure or on the first revisit (the walk is then periodic); the result
/// has at most node_count + 1 entries. Throws std::out_of_range when the
/// table has no action for an encountered degree.
std::vector<NodeId> classical_trajectory(const PortGraph &g, const std::vector<bool> &placement_bits,
                                         const DecisionTable &table);

}  // namespace qpebble
