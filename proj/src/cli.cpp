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

#include "qpebble/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qpebble/analysis.hpp"
#include "qpebble/harness.hpp"

namespace qpebble {

namespace {

struct ExperimentFlags {
    std::string gen;
    std::string graph_file;
    std::string config_file;
    std::string scheme;
    std::string strategy;
    int trials = 0;
    uint64_t seed = 0;
    int step_budget = -1;
    double eps = 0.0;
    int threads = 0;
    std::string format = "json";
    std::string out;
    std::string placement_out;
};

void add_experiment_options(CLI::App *cmd, ExperimentFlags &f) {
    cmd->add_option("--gen", f.gen, "Generated graph: path:D=10,delta=4[,seed=S] or gadget:p=2,q=2,r=2[,flip=M]");
    cmd->add_option("--graph", f.graph_file, "Graph file in the text format");
    cmd->add_option("--config", f.config_file, "JSON experiment config; flags override its fields");
    cmd->add_option("--scheme", f.scheme, "general | bitsign4 | qudit");
    cmd->add_option("--strategy", f.strategy, "fixed:auto|fixed:N|adaptive:auto|adaptive:CAP|qudit|random|table:I");
    cmd->add_option("--trials", f.trials, "Number of independent hunts")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Base seed (falls back to QPEBBLE_SEED)");
    cmd->add_option("--step-budget", f.step_budget, "Rounds per hunt (default: D)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--eps", f.eps, "Target failure probability for auto n");
    cmd->add_option("--threads", f.threads, "OpenMP threads (results do not depend on it)");
    cmd->add_option("--format", f.format, "Output format for stdout")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out, "Write the per-trial/per-row CSV here");
}

ExperimentConfig build_config(const CLI::App *cmd, const ExperimentFlags &f) {
    ExperimentConfig cfg;
    bool seed_from_config = false;
    if (!f.config_file.empty()) {
        std::ifstream in(f.config_file);
        if (!in) {
            throw ConfigError("cannot open config '" + f.config_file + "'");
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        cfg = ExperimentConfig::from_json(j);
        seed_from_config = j.contains("seed");
    }
    if (cmd->count("--gen") && cmd->count("--graph")) {
        throw ConfigError("--gen and --graph are mutually exclusive");
    }
    if (cmd->count("--gen")) {
        cfg.graph_source = GraphSource::parse(f.gen);
    } else if (cmd->count("--graph")) {
        cfg.graph_source = GraphSource::parse("file:" + f.graph_file);
    } else if (f.config_file.empty()) {
        throw ConfigError("one of --gen, --graph or --config is required");
    }
    if (cmd->count("--scheme")) {
        try {
            cfg.scheme = parse_scheme(f.scheme);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    if (cmd->count("--strategy")) {
        cfg.strategy = StrategySpec::parse(f.strategy);
    }
    if (cmd->count("--trials")) {
        cfg.trials = f.trials;
    }
    if (cmd->count("--seed")) {
        cfg.seed = f.seed;
    } else if (!seed_from_config) {
        if (const char *env = std::getenv("QPEBBLE_SEED"); env && *env) {
            std::string_view text(env);
            uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc() || ptr != text.data() + text.size()) {
                throw ConfigError("QPEBBLE_SEED is not an unsigned integer");
            }
            cfg.seed = value;
        }
    }
    if (cmd->count("--step-budget")) {
        cfg.step_budget = f.step_budget;
    }
    if (cmd->count("--eps")) {
        cfg.eps = f.eps;
    }
    if (cmd->count("--threads")) {
        cfg.workers = f.threads;
    }
    return cfg;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write '" + path + "'");
    }
    file << content;
}

std::vector<long long> parse_values(const std::string &text) {
    std::vector<long long> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) {
            throw ConfigError("malformed sweep value '" + item + "'");
        }
        values.push_back(v);
    }
    return values;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum-pebble treasure hunt simulator"};
    app.require_subcommand(1);

    ExperimentFlags sim;
    bool assert_bound = false;
    auto *simulate = app.add_subcommand("simulate", "Monte-Carlo hunts on one graph");
    add_experiment_options(simulate, sim);
    simulate->add_option("--placement", sim.placement_out, "Write the pebble placement JSON here");
    simulate->add_flag("--assert-bound", assert_bound,
                       "Exit 1 if the success rate falls more than 3 sigma below the analytic lower bound");

    ExperimentFlags sw;
    std::string axis_name;
    std::string values_text;
    auto *sweep_cmd = app.add_subcommand("sweep", "Repeat simulate over one parameter axis");
    add_experiment_options(sweep_cmd, sw);
    sweep_cmd->add_option("--axis", axis_name, "n | D | delta")->required();
    sweep_cmd->add_option("--values", values_text, "Comma-separated values")->required();

    int bound_d = 0;
    long long bound_delta = 0;
    double bound_eps = kDefaultEps;
    int bound_n = 0;
    std::string bound_scheme = "general";
    auto *bound = app.add_subcommand("bound", "Analytic success bound and required n");
    bound->add_option("--D", bound_d, "Shortest-path length")->required()->check(CLI::PositiveNumber);
    bound->add_option("--delta", bound_delta, "Max degree (even)")->required();
    bound->add_option("--eps", bound_eps, "Target failure probability");
    bound->add_option("--n", bound_n, "Evaluate at this n instead of the required one")->check(CLI::PositiveNumber);
    bound->add_option("--scheme", bound_scheme, "general | bitsign4")->check(CLI::IsMember({"general", "bitsign4"}));

    int cmp_d = 0;
    long long cmp_delta = 0;
    double cmp_eps = kDefaultEps;
    auto *compare = app.add_subcommand("compare-fullpath", "Full-path single-qubit cost versus per-node pebbles");
    compare->add_option("--D", cmp_d, "Shortest-path length")->required()->check(CLI::PositiveNumber);
    compare->add_option("--delta", cmp_delta, "Max degree (even)")->required();
    compare->add_option("--eps", cmp_eps, "Target failure probability");

    std::string impossible_format = "text";
    bool impossible_serial = false;
    auto *impossible = app.add_subcommand("impossible", "Exhaustive classical impossibility check");
    impossible->add_option("--format", impossible_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    impossible->add_flag("--serial", impossible_serial, "Use the single-threaded reference search");

    std::string gen_spec;
    uint64_t gen_seed = 0;
    std::string gen_out;
    auto *gen = app.add_subcommand("gen-graph", "Emit a generated graph in the text format");
    gen->add_option("--gen", gen_spec, "path:D=..,delta=.. or gadget:p=..,q=..,r=..")->required();
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Write here instead of stdout");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            ExperimentConfig cfg = build_config(simulate, sim);
            ExperimentResult result = run_experiment(cfg);
            std::ostringstream csv;
            write_trials_csv(csv, result.trials);
            nlohmann::json summary = summary_to_json(result, cfg);
            if (!sim.placement_out.empty()) {
                write_file(sim.placement_out, placement_to_json(result.placement).dump(2) + "\n");
            }
            if (!sim.out.empty()) {
                write_file(sim.out, csv.str());
                out << summary.dump(2) << '\n';
            } else if (sim.format == "csv") {
                out << csv.str();
            } else {
                out << summary.dump(2) << '\n';
            }
            if (assert_bound) {
                const auto &s = result.summary;
                double b = std::clamp(s.bound.success_lower, 0.0, 1.0);
                double floor = b - 3.0 * std::sqrt(b * (1.0 - b) / static_cast<double>(s.trials));
                if (s.success_rate < floor) {
                    err << "success rate " << s.success_rate << " below bound floor " << floor << '\n';
                    return kExitAssertion;
                }
            }
            return kExitOk;
        }
        if (sweep_cmd->parsed()) {
            ExperimentConfig cfg = build_config(sweep_cmd, sw);
            SweepAxis axis = parse_axis(axis_name);
            auto rows = sweep(cfg, axis, parse_values(values_text));
            std::ostringstream csv;
            write_sweep_csv(csv, axis, rows);
            if (!sw.out.empty()) {
                write_file(sw.out, csv.str());
            }
            if (sw.format == "csv") {
                out << csv.str();
            } else {
                out << sweep_to_json(axis, rows).dump(2) << '\n';
            }
            return kExitOk;
        }
        if (bound->parsed()) {
            std::optional<int> n;
            if (bound->count("--n")) {
                n = bound_n;
            }
            BoundReport r = bound_scheme == "bitsign4" ? bitsign4_bound_report(bound_d, bound_eps, n)
                                                       : bound_report(bound_d, bound_delta, bound_eps, n);
            out << to_json(r).dump(2) << '\n';
            return kExitOk;
        }
        if (compare->parsed()) {
            PathComparison c = compare_single_vs_per_node(cmp_d, cmp_delta, cmp_eps);
            out << to_json(c).dump(2) << '\n';
            if (cmp_d >= 2 && !c.full_path_not_better) {
                err << "full-path encoding came out cheaper than per-node pebbles\n";
                return kExitAssertion;
            }
            return kExitOk;
        }
        if (impossible->parsed()) {
            ImpossibilityReport r = impossible_serial ? check_impossibility_serial() : check_impossibility();
            if (impossible_format == "json") {
                out << to_json(r).dump(2) << '\n';
            } else {
                out << r.tables_defeated << '/' << r.tables_total << " decision tables defeated\n";
            }
            return r.passed() ? kExitOk : kExitAssertion;
        }
        if (gen->parsed()) {
            GraphSource src = GraphSource::parse(gen_spec);
            if (src.kind == GraphSource::Kind::File) {
                throw ConfigError("gen-graph needs a generator spec");
            }
            std::string text = serialize_graph(build_graph(src, gen_seed));
            if (gen_out.empty()) {
                out << text;
            } else {
                write_file(gen_out, text);
            }
            return kExitOk;
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qpebble
