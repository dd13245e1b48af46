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

#include "qpebble/agent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpebble {

std::optional<Action> DecisionTable::lookup(int degree, bool pebble) const {
    auto it = actions_.find({degree, pebble});
    if (it == actions_.end()) {
        return std::nullopt;
    }
    return it->second;
}

DecisionTable DecisionTable::gadget_table(int index) {
    if (index < 0 || index >= kGadgetTableCount) {
        throw std::out_of_range("gadget table index out of range");
    }
    auto deg3 = [](int code) { return code == 0 ? Action::stay() : Action::take(code - 1); };
    auto deg1 = [](int code) { return code == 0 ? Action::stay() : Action::take(0); };
    DecisionTable t;
    t.set(3, true, deg3(index % 4));
    t.set(3, false, deg3((index / 4) % 4));
    t.set(1, true, deg1((index / 16) % 2));
    t.set(1, false, deg1(index / 32));
    return t;
}

std::string DecisionTable::describe() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &[key, action] : actions_) {
        out << (first ? "" : " ") << "deg" << key.first << (key.second ? "+P" : "-P") << "->";
        if (action.is_stay()) {
            out << "stay";
        } else {
            out << action.port;
        }
        first = false;
    }
    return out.str();
}

std::string describe(const AgentStrategy &strategy) {
    struct Visitor {
        std::string operator()(const QuantumFixedN &s) const { return "fixed:" + std::to_string(s.n); }
        std::string operator()(const QuantumAdaptive &s) const { return "adaptive:" + std::to_string(s.cap); }
        std::string operator()(const QuditOneShot &) const { return "qudit"; }
        std::string operator()(const ClassicalTable &s) const { return "table[" + s.table.describe() + "]"; }
        std::string operator()(const RandomWalk &) const { return "random"; }
    };
    return std::visit(Visitor{}, strategy);
}

std::string_view to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::None:
            return "none";
        case FailureKind::AmbiguousDecode:
            return "ambiguous_decode";
        case FailureKind::WrongPortRange:
            return "wrong_port_range";
        case FailureKind::MissingPebble:
            return "missing_pebble";
        case FailureKind::StepBudgetExhausted:
            return "step_budget_exhausted";
        case FailureKind::DeclaredFailure:
            return "declared_failure";
    }
    return "unknown";
}

int BasisTally::plus_count() const {
    return static_cast<int>(std::count(outcomes.begin(), outcomes.end(), Sign::Plus));
}

bool BasisTally::uniform() const {
    if (outcomes.empty()) {
        return false;
    }
    return std::all_of(outcomes.begin(), outcomes.end(), [&](Sign s) { return s == outcomes.front(); });
}

NodeTallies measure_node_fixed(const QubitState &state, const BasisFamily &family, int n, RngStream &rng) {
    if (n < 1) {
        throw std::invalid_argument("measurements per basis must be >= 1");
    }
    NodeTallies tallies(family.size());
    for (int j = 0; j < family.size(); ++j) {
        const double p_plus = plus_probability(state, family.basis(j));
        auto &tally = tallies[j];
        tally.basis_index = j;
        tally.outcomes.reserve(n);
        for (int k = 0; k < n; ++k) {
            tally.outcomes.push_back(sample_sign(p_plus, rng));
        }
    }
    return tallies;
}

std::optional<long long> decide_fixed(const NodeTallies &tallies, const BasisFamily &family) {
    // The matching basis always produces a full-length run, so "most frequent
    // eigenvalue" reduces to "the unique uniform basis"; a tie is a failure.
    const BasisTally *winner = nullptr;
    for (const auto &tally : tallies) {
        if (tally.uniform()) {
            if (winner) {
                return std::nullopt;
            }
            winner = &tally;
        }
    }
    if (!winner) {
        return std::nullopt;
    }
    return decode_outcome({winner->basis_index, winner->outcomes.front()}, family.delta(), family.scheme());
}

AdaptiveResult measure_node_adaptive(const QubitState &state, const BasisFamily &family, long long cap,
                                     RngStream &rng) {
    const int m = family.size();
    if (cap < m) {
        throw std::invalid_argument("adaptive cap must be at least the number of bases");
    }
    std::vector<double> p_plus(m);
    for (int j = 0; j < m; ++j) {
        p_plus[j] = plus_probability(state, family.basis(j));
    }
    std::vector<char> alive(m, 1);
    std::vector<char> sampled(m, 0);
    std::vector<Sign> run_sign(m, Sign::Plus);
    int alive_count = m;

    AdaptiveResult result;
    for (;;) {
        for (int j = 0; j < m; ++j) {
            if (!alive[j]) {
                continue;
            }
            if (result.measurements >= cap) {
                result.budget_exhausted = true;
                return result;
            }
            Sign s = sample_sign(p_plus[j], rng);
            ++result.measurements;
            if (!sampled[j]) {
                sampled[j] = 1;
                run_sign[j] = s;
            } else if (s != run_sign[j]) {
                alive[j] = 0;
                --alive_count;
            }
            if (alive_count == 0) {
                return result;
            }
            if (alive_count == 1) {
                int survivor = static_cast<int>(std::find(alive.begin(), alive.end(), 1) - alive.begin());
                if (sampled[survivor]) {
                    result.port = decode_outcome({survivor, run_sign[survivor]}, family.delta(), family.scheme());
                    return result;
                }
            }
        }
    }
}

ObliviousAgent::ObliviousAgent(AgentStrategy strategy, Scheme scheme, long long delta)
    : strategy_(std::move(strategy)) {
    bool quantum = std::holds_alternative<QuantumFixedN>(strategy_) ||
                   std::holds_alternative<QuantumAdaptive>(strategy_);
    if (quantum) {
        if (scheme == Scheme::Qudit) {
            throw std::invalid_argument("qubit strategies need a qubit encoding scheme");
        }
        family_.emplace(scheme, delta);
        if (const auto *fixed = std::get_if<QuantumFixedN>(&strategy_); fixed && fixed->n < 1) {
            throw std::invalid_argument("fixed-n strategy needs n >= 1");
        }
        if (const auto *adaptive = std::get_if<QuantumAdaptive>(&strategy_);
            adaptive && adaptive->cap < family_->size()) {
            throw std::invalid_argument("adaptive cap must be >= delta/2");
        }
    }
    if (std::holds_alternative<QuditOneShot>(strategy_) && scheme != Scheme::Qudit) {
        throw std::invalid_argument("qudit strategy needs the qudit scheme");
    }
}

namespace {

RoundDecision fail(FailureKind kind, long long measurements = 0) {
    RoundDecision d;
    d.kind = RoundDecision::Kind::Fail;
    d.failure = kind;
    d.measurements = measurements;
    return d;
}

RoundDecision move_to_port_label(long long label, int degree, long long measurements) {
    if (label - 1 >= degree) {
        return fail(FailureKind::WrongPortRange, measurements);
    }
    RoundDecision d;
    d.kind = RoundDecision::Kind::Move;
    d.port = static_cast<PortNumber>(label - 1);
    d.measurements = measurements;
    return d;
}

const QubitEmission &qubit_emission(const QuantumPebble &pebble) {
    const auto *q = std::get_if<QubitEmission>(&pebble.emission);
    if (!q) {
        throw std::invalid_argument("placement inconsistent with strategy: pebble carries no qubit state");
    }
    return *q;
}

}  // namespace

RoundDecision ObliviousAgent::act(const Observation &obs, RngStream &rng) const {
    if (const auto *fixed = std::get_if<QuantumFixedN>(&strategy_)) {
        if (!obs.pebble) {
            return fail(FailureKind::MissingPebble);
        }
        auto tallies = measure_node_fixed(qubit_emission(*obs.pebble).state, *family_, fixed->n, rng);
        long long used = static_cast<long long>(fixed->n) * family_->size();
        auto port = decide_fixed(tallies, *family_);
        if (!port) {
            return fail(FailureKind::AmbiguousDecode, used);
        }
        return move_to_port_label(*port, obs.degree, used);
    }
    if (const auto *adaptive = std::get_if<QuantumAdaptive>(&strategy_)) {
        if (!obs.pebble) {
            return fail(FailureKind::MissingPebble);
        }
        auto res = measure_node_adaptive(qubit_emission(*obs.pebble).state, *family_, adaptive->cap, rng);
        if (res.budget_exhausted) {
            return fail(FailureKind::DeclaredFailure, res.measurements);
        }
        if (!res.port) {
            return fail(FailureKind::AmbiguousDecode, res.measurements);
        }
        return move_to_port_label(*res.port, obs.degree, res.measurements);
    }
    if (std::holds_alternative<QuditOneShot>(strategy_)) {
        if (!obs.pebble) {
            return fail(FailureKind::MissingPebble);
        }
        const auto *q = std::get_if<QuditEmission>(&obs.pebble->emission);
        if (!q) {
            throw std::invalid_argument("placement inconsistent with strategy: pebble is not a qudit");
        }
        int level = measure_qudit(q->level, q->levels, rng);
        return move_to_port_label(decode_qudit(level, q->levels), obs.degree, 1);
    }
    if (const auto *classical = std::get_if<ClassicalTable>(&strategy_)) {
        auto action = classical->table.lookup(obs.degree, obs.pebble != nullptr);
        if (!action) {
            throw std::out_of_range("decision table has no action for degree " + std::to_string(obs.degree));
        }
        RoundDecision d;
        if (action->is_stay()) {
            d.kind = RoundDecision::Kind::Stay;
        } else if (action->port >= obs.degree) {
            return fail(FailureKind::WrongPortRange);
        } else {
            d.kind = RoundDecision::Kind::Move;
            d.port = action->port;
        }
        return d;
    }
    // RandomWalk: a fresh uniform port every round.
    RoundDecision d;
    if (obs.degree == 0) {
        d.kind = RoundDecision::Kind::Stay;
        return d;
    }
    d.kind = RoundDecision::Kind::Move;
    d.port = static_cast<PortNumber>(rng.bounded(static_cast<uint32_t>(obs.degree)));
    return d;
}

TrialResult run_trial(const PortGraph &g, const Placement &placement, const ObliviousAgent &agent, int step_budget,
                      RngStream &rng) {
    if (placement.node_count() != g.node_count()) {
        throw std::invalid_argument("placement does not match graph size");
    }
    TrialResult result;
    NodeId at = g.start();
    for (;;) {
        if (at == g.treasure()) {
            result.success = true;
            result.failure = FailureKind::None;
            break;
        }
        if (result.steps_taken >= step_budget) {
            result.failure = FailureKind::StepBudgetExhausted;
            break;
        }
        Observation obs{g.degree(at), placement.find(at)};
        RoundDecision d = agent.act(obs, rng);
        result.measurements_total += d.measurements;
        if (d.kind == RoundDecision::Kind::Fail) {
            result.failure = d.failure;
            break;
        }
        if (d.kind == RoundDecision::Kind::Move) {
            at = g.neighbor_via_port(at, d.port).node;
        }
        ++result.steps_taken;
    }
    result.final_node = at;
    return result;
}

TrialResult run_trial(const PortGraph &g, const Placement &placement, const AgentStrategy &strategy,
                      int step_budget, RngStream &rng) {
    return run_trial(g, placement, ObliviousAgent(strategy, placement.scheme(), placement.delta()), step_budget,
                     rng);
}

std::vector<NodeId> classical_trajectory(const PortGraph &g, const std::vector<bool> &placement_bits,
                                         const DecisionTable &table) {
    if (placement_bits.size() != static_cast<size_t>(g.node_count())) {
        throw std::invalid_argument("one placement bit per node required");
    }
    std::vector<char> visited(g.node_count(), 0);
    std::vector<NodeId> walk;
    NodeId at = g.start();
    for (;;) {
        walk.push_back(at);
        if (at == g.treasure() || visited[at]) {
            return walk;
        }
        visited[at] = 1;
        const int degree = g.degree(at);
        auto action = table.lookup(degree, placement_bits[at]);
        if (!action) {
            throw std::out_of_range("decision table has no action for degree " + std::to_string(degree));
        }
        if (!action->is_stay()) {
            at = g.neighbor_via_port(at, action->port).node;
        }
    }
}

}  // namespace qpebble
