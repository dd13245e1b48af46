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

#include "qpebble/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "qpebble/trial_batch.hpp"

namespace qpebble {

namespace {

std::pair<std::string_view, std::string_view> split_once(std::string_view text, char sep) {
    auto pos = text.find(sep);
    if (pos == std::string_view::npos) {
        return {text, {}};
    }
    return {text.substr(0, pos), text.substr(pos + 1)};
}

long long to_integer(std::string_view token, std::string_view what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ConfigError("malformed " + std::string(what) + " '" + std::string(token) + "'");
    }
    return value;
}

std::map<std::string, long long, std::less<>> parse_key_values(std::string_view text) {
    std::map<std::string, long long, std::less<>> out;
    while (!text.empty()) {
        auto [item, rest] = split_once(text, ',');
        auto [key, value] = split_once(item, '=');
        if (key.empty() || value.empty()) {
            throw ConfigError("expected key=value, got '" + std::string(item) + "'");
        }
        out[std::string(key)] = to_integer(value, key);
        text = rest;
    }
    return out;
}

long long take(std::map<std::string, long long, std::less<>> &kv, std::string_view key,
               std::optional<long long> fallback = std::nullopt) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (!fallback) {
            throw ConfigError("missing '" + std::string(key) + "'");
        }
        return *fallback;
    }
    long long v = it->second;
    kv.erase(it);
    return v;
}

void reject_leftovers(const std::map<std::string, long long, std::less<>> &kv) {
    if (!kv.empty()) {
        throw ConfigError("unknown key '" + kv.begin()->first + "'");
    }
}

long long family_delta(long long max_degree) { return even_family_delta(std::max(max_degree, 2LL)); }

}  // namespace

GraphSource GraphSource::parse(std::string_view text) {
    auto [kind, rest] = split_once(text, ':');
    GraphSource src;
    if (kind == "file") {
        if (rest.empty()) {
            throw ConfigError("file: needs a path");
        }
        src.kind = Kind::File;
        src.path = std::string(rest);
        return src;
    }
    auto kv = parse_key_values(rest);
    if (kind == "path") {
        src.kind = Kind::PaddedPath;
        src.distance = static_cast<int>(take(kv, "D"));
        src.delta = static_cast<int>(take(kv, "delta"));
        if (kv.count("seed")) {
            src.seed = static_cast<uint64_t>(take(kv, "seed"));
        }
    } else if (kind == "gadget") {
        src.kind = Kind::Gadget;
        src.gadget.pendant_ports[0] = static_cast<int>(take(kv, "p", 2));
        src.gadget.pendant_ports[1] = static_cast<int>(take(kv, "q", 2));
        src.gadget.pendant_ports[2] = static_cast<int>(take(kv, "r", 2));
        src.gadget.flip_mask = static_cast<unsigned>(take(kv, "flip", 0));
    } else {
        throw ConfigError("unknown graph source '" + std::string(kind) + "' (expected path, gadget or file)");
    }
    reject_leftovers(kv);
    return src;
}

std::string GraphSource::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::PaddedPath:
            out << "path:D=" << distance << ",delta=" << delta;
            if (seed) {
                out << ",seed=" << *seed;
            }
            break;
        case Kind::Gadget:
            out << "gadget:p=" << gadget.pendant_ports[0] << ",q=" << gadget.pendant_ports[1]
                << ",r=" << gadget.pendant_ports[2] << ",flip=" << gadget.flip_mask;
            break;
        case Kind::File:
            out << "file:" << path;
            break;
    }
    return out.str();
}

PortGraph build_graph(const GraphSource &source, uint64_t fallback_seed) {
    switch (source.kind) {
        case GraphSource::Kind::PaddedPath:
            return gen_padded_path(source.distance, source.delta, source.seed.value_or(fallback_seed));
        case GraphSource::Kind::Gadget:
            return gen_gpqr(source.gadget);
        case GraphSource::Kind::File: {
            std::ifstream in(source.path);
            if (!in) {
                throw ConfigError("cannot open graph file '" + source.path + "'");
            }
            std::stringstream buffer;
            buffer << in.rdbuf();
            return parse_graph(buffer.str());
        }
    }
    throw ConfigError("unknown graph source");
}

StrategySpec StrategySpec::parse(std::string_view text) {
    auto [kind, param] = split_once(text, ':');
    StrategySpec spec;
    auto numeric = [&](bool allow_auto) -> std::optional<long long> {
        if (param.empty() || (allow_auto && param == "auto")) {
            if (!allow_auto) {
                throw ConfigError("strategy '" + std::string(kind) + "' needs a parameter");
            }
            return std::nullopt;
        }
        return to_integer(param, "strategy parameter");
    };
    if (kind == "fixed") {
        spec.kind = Kind::Fixed;
        spec.param = numeric(true);
    } else if (kind == "adaptive") {
        spec.kind = Kind::Adaptive;
        spec.param = numeric(true);
    } else if (kind == "qudit") {
        spec.kind = Kind::Qudit;
    } else if (kind == "random") {
        spec.kind = Kind::Random;
    } else if (kind == "table") {
        spec.kind = Kind::Table;
        spec.param = numeric(false);
    } else {
        throw ConfigError("unknown strategy '" + std::string(text) + "'");
    }
    if (spec.kind != Kind::Fixed && spec.kind != Kind::Adaptive && spec.kind != Kind::Table && !param.empty()) {
        throw ConfigError("strategy '" + std::string(kind) + "' takes no parameter");
    }
    return spec;
}

std::string StrategySpec::to_string() const {
    auto p = [&] { return param ? std::to_string(*param) : std::string("auto"); };
    switch (kind) {
        case Kind::Fixed:
            return "fixed:" + p();
        case Kind::Adaptive:
            return "adaptive:" + p();
        case Kind::Qudit:
            return "qudit";
        case Kind::Random:
            return "random";
        case Kind::Table:
            return "table:" + p();
    }
    return "?";
}

void ExperimentConfig::check() const {
    if (trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw ConfigError("eps must be in (0, 1)");
    }
    if (step_budget && *step_budget < 0) {
        throw ConfigError("step budget must be non-negative");
    }
    if (scheme == Scheme::FullPathSingleQubit) {
        throw ConfigError("fullpath is an analysis-only scheme; use compare-fullpath");
    }
    const bool qubit_strategy = strategy.kind == StrategySpec::Kind::Fixed || strategy.kind == StrategySpec::Kind::Adaptive;
    if (qubit_strategy && scheme == Scheme::Qudit) {
        throw ConfigError("strategy " + strategy.to_string() + " needs a qubit scheme");
    }
    if (strategy.kind == StrategySpec::Kind::Qudit && scheme != Scheme::Qudit) {
        throw ConfigError("qudit strategy needs --scheme qudit");
    }
    if (strategy.param && *strategy.param < (strategy.kind == StrategySpec::Kind::Table ? 0 : 1)) {
        throw ConfigError("strategy parameter out of range");
    }
    if (strategy.kind == StrategySpec::Kind::Table && *strategy.param >= DecisionTable::kGadgetTableCount) {
        throw ConfigError("table index must be in [0, 64)");
    }
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json &j) {
    ExperimentConfig cfg;
    try {
        if (j.contains("graph_source")) {
            cfg.graph_source = GraphSource::parse(j.at("graph_source").get<std::string>());
        }
        if (j.contains("scheme")) {
            cfg.scheme = parse_scheme(j.at("scheme").get<std::string>());
        }
        if (j.contains("strategy")) {
            cfg.strategy = StrategySpec::parse(j.at("strategy").get<std::string>());
        }
        if (j.contains("trials")) {
            cfg.trials = j.at("trials").get<int>();
        }
        if (j.contains("seed")) {
            cfg.seed = j.at("seed").get<uint64_t>();
        }
        if (j.contains("step_budget") && !j.at("step_budget").is_null()) {
            cfg.step_budget = j.at("step_budget").get<int>();
        }
        if (j.contains("eps")) {
            cfg.eps = j.at("eps").get<double>();
        }
        if (j.contains("workers")) {
            cfg.workers = j.at("workers").get<int>();
        }
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("bad config field: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
    nlohmann::json j{{"graph_source", graph_source.to_string()},
                     {"scheme", std::string(qpebble::to_string(scheme))},
                     {"strategy", strategy.to_string()},
                     {"trials", trials},
                     {"seed", seed},
                     {"eps", eps}};
    j["step_budget"] = step_budget ? nlohmann::json(*step_budget) : nlohmann::json(nullptr);
    return j;
}

WilsonInterval wilson_interval(long long successes, long long trials, double z) {
    if (trials <= 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, std::min(center - half, p)), std::min(1.0, std::max(center + half, p))};
}

SummaryStats summarize(const std::vector<TrialResult> &trials, const BoundReport &bound) {
    SummaryStats s;
    s.trials = static_cast<long long>(trials.size());
    long long steps = 0;
    long long measurements = 0;
    for (const auto &t : trials) {
        s.successes += t.success ? 1 : 0;
        steps += t.steps_taken;
        measurements += t.measurements_total;
        ++s.failure_breakdown[static_cast<size_t>(t.failure)];
    }
    if (s.trials > 0) {
        s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
        s.mean_steps = static_cast<double>(steps) / static_cast<double>(s.trials);
        s.mean_measurements = static_cast<double>(measurements) / static_cast<double>(s.trials);
    }
    s.wilson_ci_95 = wilson_interval(s.successes, s.trials);
    s.bound = bound;
    return s;
}

AgentStrategy resolve_strategy(const StrategySpec &spec, int distance, long long delta, double eps) {
    const long long fam = family_delta(delta);
    switch (spec.kind) {
        case StrategySpec::Kind::Fixed:
            return QuantumFixedN{spec.param ? static_cast<int>(*spec.param) : required_n(distance, fam, eps)};
        case StrategySpec::Kind::Adaptive:
            return QuantumAdaptive{spec.param ? *spec.param
                                              : kAdaptiveAutoCapFactor * required_n(distance, fam, eps) * (fam / 2)};
        case StrategySpec::Kind::Qudit:
            return QuditOneShot{};
        case StrategySpec::Kind::Random:
            return RandomWalk{};
        case StrategySpec::Kind::Table:
            return ClassicalTable{DecisionTable::gadget_table(static_cast<int>(spec.param.value_or(0)))};
    }
    throw ConfigError("unknown strategy");
}

ExperimentResult run_experiment(const ExperimentConfig &cfg) {
    cfg.check();
    const PortGraph graph = build_graph(cfg.graph_source, cfg.seed);
    if (auto violation = validate(graph)) {
        throw ConfigError("graph invalid: " + violation->message);
    }

    ExperimentResult result;
    result.distance = shortest_path(graph, graph.start(), graph.treasure()).length;
    result.max_degree = graph.max_degree();
    result.step_budget = cfg.step_budget.value_or(result.distance);
    result.strategy = resolve_strategy(cfg.strategy, result.distance, result.max_degree, cfg.eps);
    if (const auto *fixed = std::get_if<QuantumFixedN>(&result.strategy)) {
        result.resolved_n = fixed->n;
    }
    result.placement = place_pebbles(graph, cfg.scheme);

    const ObliviousAgent agent(result.strategy, result.placement.scheme(), result.placement.delta());
    const TrialBatch batch{graph, result.placement, agent, result.step_budget, cfg.seed};
    result.trials = run_trials_parallel(batch, cfg.trials, cfg.workers);

    std::optional<int> n;
    if (result.resolved_n > 0) {
        n = result.resolved_n;
    }
    const BoundReport bound = cfg.scheme == Scheme::BitSign4
                                  ? bitsign4_bound_report(result.distance, cfg.eps, n)
                                  : bound_report(result.distance, family_delta(result.max_degree), cfg.eps, n);
    result.summary = summarize(result.trials, bound);
    return result;
}

void write_trials_csv(std::ostream &out, const std::vector<TrialResult> &trials) {
    out << "trial,success,steps,measurements,failure_kind\n";
    for (size_t i = 0; i < trials.size(); ++i) {
        const auto &t = trials[i];
        out << i << ',' << (t.success ? 1 : 0) << ',' << t.steps_taken << ',' << t.measurements_total << ','
            << to_string(t.failure) << '\n';
    }
}

namespace {

nlohmann::json stats_to_json(const SummaryStats &s) {
    nlohmann::json breakdown = nlohmann::json::object();
    for (int k = 0; k < kFailureKindCount; ++k) {
        breakdown[std::string(to_string(static_cast<FailureKind>(k)))] = s.failure_breakdown[k];
    }
    return {{"trials", s.trials},
            {"successes", s.successes},
            {"success_rate", s.success_rate},
            {"wilson_ci_95", {s.wilson_ci_95.lo, s.wilson_ci_95.hi}},
            {"mean_steps", s.mean_steps},
            {"mean_measurements", s.mean_measurements},
            {"failure_breakdown", breakdown},
            {"bound", to_json(s.bound)}};
}

}  // namespace

nlohmann::json summary_to_json(const ExperimentResult &result, const ExperimentConfig &cfg) {
    nlohmann::json j = stats_to_json(result.summary);
    j["config"] = cfg.to_json();
    j["distance"] = result.distance;
    j["max_degree"] = result.max_degree;
    j["resolved_strategy"] = describe(result.strategy);
    j["step_budget"] = result.step_budget;
    if (result.resolved_n > 0) {
        j["n"] = result.resolved_n;
    }
    return j;
}

SweepAxis parse_axis(std::string_view name) {
    if (name == "n") {
        return SweepAxis::N;
    }
    if (name == "D") {
        return SweepAxis::D;
    }
    if (name == "delta") {
        return SweepAxis::Delta;
    }
    throw ConfigError("unknown sweep axis '" + std::string(name) + "' (expected n, D or delta)");
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::N:
            return "n";
        case SweepAxis::D:
            return "D";
        case SweepAxis::Delta:
            return "delta";
    }
    return "?";
}

std::vector<SweepRow> sweep(const ExperimentConfig &cfg, SweepAxis axis, const std::vector<long long> &values) {
    if (axis != SweepAxis::N && cfg.graph_source.kind != GraphSource::Kind::PaddedPath) {
        throw ConfigError("D and delta sweeps need a generated path graph");
    }
    std::vector<SweepRow> rows;
    for (long long value : values) {
        ExperimentConfig point = cfg;
        switch (axis) {
            case SweepAxis::N:
                point.strategy = StrategySpec{StrategySpec::Kind::Fixed, value};
                break;
            case SweepAxis::D:
                point.graph_source.distance = static_cast<int>(value);
                break;
            case SweepAxis::Delta:
                point.graph_source.delta = static_cast<int>(value);
                break;
        }
        ExperimentResult r = run_experiment(point);
        rows.push_back({value, r.resolved_n, r.summary});
    }
    return rows;
}

void write_sweep_csv(std::ostream &out, SweepAxis axis, const std::vector<SweepRow> &rows) {
    out << to_string(axis)
        << ",n,trials,successes,success_rate,ci_lo,ci_hi,mean_steps,mean_measurements,success_lower\n";
    for (const auto &row : rows) {
        const auto &s = row.stats;
        out << row.value << ',' << row.resolved_n << ',' << s.trials << ',' << s.successes << ','
            << s.success_rate << ',' << s.wilson_ci_95.lo << ',' << s.wilson_ci_95.hi << ',' << s.mean_steps << ','
            << s.mean_measurements << ',' << s.bound.success_lower << '\n';
    }
}

nlohmann::json sweep_to_json(SweepAxis axis, const std::vector<SweepRow> &rows) {
    nlohmann::json table = nlohmann::json::array();
    for (const auto &row : rows) {
        nlohmann::json entry = stats_to_json(row.stats);
        entry[std::string(to_string(axis))] = row.value;
        entry["n"] = row.resolved_n;
        table.push_back(std::move(entry));
    }
    return {{"axis", std::string(to_string(axis))}, {"rows", std::move(table)}};
}

}  // namespace qpebble
