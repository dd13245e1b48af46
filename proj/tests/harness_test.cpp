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

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"

using namespace qpebble;

namespace {

ExperimentConfig path_config(const std::string &strategy, int trials, uint64_t seed) {
    ExperimentConfig cfg;
    cfg.graph_source = GraphSource::parse("path:D=10,delta=4");
    cfg.strategy = StrategySpec::parse(strategy);
    cfg.trials = trials;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST(GraphSource, parse_and_print) {
    auto p = GraphSource::parse("path:D=10,delta=4,seed=3");
    EXPECT_EQ(p.kind, GraphSource::Kind::PaddedPath);
    EXPECT_EQ(p.distance, 10);
    EXPECT_EQ(p.delta, 4);
    EXPECT_EQ(p.seed, 3u);
    EXPECT_EQ(GraphSource::parse(p.to_string()).to_string(), p.to_string());
    auto g = GraphSource::parse("gadget:p=0,q=1,r=2,flip=5");
    EXPECT_EQ(g.kind, GraphSource::Kind::Gadget);
    EXPECT_EQ(g.gadget.pendant_ports[1], 1);
    EXPECT_EQ(g.gadget.flip_mask, 5u);
    EXPECT_EQ(GraphSource::parse("file:/tmp/x.txt").path, "/tmp/x.txt");
    EXPECT_THROW(GraphSource::parse("ring:D=3"), ConfigError);
    EXPECT_THROW(GraphSource::parse("path:D=3"), ConfigError);
}

TEST(GraphSource, seed_fallback) {
    auto src = GraphSource::parse("path:D=6,delta=6");
    EXPECT_EQ(build_graph(src, 5), gen_padded_path(6, 6, 5));
    src.seed = 9;
    EXPECT_EQ(build_graph(src, 5), gen_padded_path(6, 6, 9));
}

TEST(StrategySpec, parse_and_resolve) {
    EXPECT_EQ(StrategySpec::parse("fixed:auto").param, std::nullopt);
    EXPECT_EQ(StrategySpec::parse("fixed:12").param, 12);
    EXPECT_EQ(StrategySpec::parse("table:7").kind, StrategySpec::Kind::Table);
    EXPECT_THROW(StrategySpec::parse("greedy"), ConfigError);
    EXPECT_EQ(std::get<QuantumFixedN>(resolve_strategy(StrategySpec::parse("fixed:auto"), 10, 4, 0.01)).n, 53);
    EXPECT_EQ(std::get<QuantumAdaptive>(resolve_strategy(StrategySpec::parse("adaptive:auto"), 10, 4, 0.01)).cap,
              kAdaptiveAutoCapFactor * 53 * 2);
}

TEST(Config, json_roundtrip_and_checks) {
    auto cfg = path_config("adaptive:300", 77, 5);
    cfg.step_budget = 30;
    cfg.eps = 0.05;
    auto back = ExperimentConfig::from_json(cfg.to_json());
    EXPECT_EQ(back.to_json(), cfg.to_json());
    cfg.trials = 0;
    EXPECT_THROW(cfg.check(), ConfigError);
    auto bad = path_config("qudit", 1, 1);
    EXPECT_THROW(bad.check(), ConfigError);
    bad = path_config("fixed:3", 1, 1);
    bad.scheme = Scheme::FullPathSingleQubit;
    EXPECT_THROW(bad.check(), ConfigError);
}

TEST(Wilson, contains_rate_and_edges) {
    for (long long k : {0, 1, 50, 99, 100}) {
        auto ci = wilson_interval(k, 100);
        double p = k / 100.0;
        EXPECT_LE(ci.lo, p);
        EXPECT_GE(ci.hi, p);
        EXPECT_GE(ci.lo, 0.0);
        EXPECT_LE(ci.hi, 1.0);
    }
}

TEST(Wilson, coverage_over_repetitions) {
    RngStream rng(31, 0);
    for (double p : {0.05, 0.5, 0.9}) {
        int covered = 0;
        for (int rep = 0; rep < 1000; ++rep) {
            long long k = 0;
            for (int i = 0; i < 400; ++i) {
                k += rng.uniform() < p;
            }
            auto ci = wilson_interval(k, 400);
            covered += ci.lo <= p && p <= ci.hi;
        }
        EXPECT_GE(covered, 930) << p;
    }
}

TEST(Summarize, aggregation) {
    std::vector<TrialResult> trials{
        {true, 3, 12, FailureKind::None, 3},
        {false, 1, 4, FailureKind::AmbiguousDecode, 1},
        {true, 3, 10, FailureKind::None, 3},
        {false, 0, 0, FailureKind::MissingPebble, 0},
    };
    auto s = summarize(trials, bound_report(3, 4, 0.01));
    EXPECT_EQ(s.trials, 4);
    EXPECT_EQ(s.successes, 2);
    EXPECT_DOUBLE_EQ(s.success_rate, 0.5);
    EXPECT_DOUBLE_EQ(s.mean_steps, 7.0 / 4);
    EXPECT_DOUBLE_EQ(s.mean_measurements, 26.0 / 4);
    EXPECT_EQ(s.failure_breakdown[static_cast<int>(FailureKind::None)], 2);
    EXPECT_EQ(s.failure_breakdown[static_cast<int>(FailureKind::AmbiguousDecode)], 1);
    EXPECT_EQ(s.failure_breakdown[static_cast<int>(FailureKind::MissingPebble)], 1);
}

TEST(RunExperiment, fixed_auto_meets_bound) {
    auto r = run_experiment(path_config("fixed:auto", 10000, 7));
    EXPECT_EQ(r.resolved_n, 53);
    EXPECT_EQ(r.distance, 10);
    EXPECT_EQ(r.step_budget, 10);
    long long count = 0;
    for (const auto &t : r.trials) {
        count += t.success;
    }
    EXPECT_EQ(r.summary.successes, count);
    double sigma = oracle::binomial_sigma(0.99, 10000);
    EXPECT_GE(r.summary.success_rate, 0.990 - 3 * sigma);
    EXPECT_NEAR(r.summary.bound.success_lower, 0.99097356905681435, 1e-12);
}

TEST(RunExperiment, qudit_and_random_walk) {
    auto cfg = path_config("qudit", 2000, 7);
    cfg.scheme = Scheme::Qudit;
    auto q = run_experiment(cfg);
    EXPECT_EQ(q.summary.success_rate, 1.0);
    EXPECT_DOUBLE_EQ(q.summary.mean_measurements, 10.0);

    auto rw = run_experiment(path_config("random", 10000, 7));
    EXPECT_LE(rw.summary.success_rate, 0.01);
}

TEST(RunExperiment, worker_count_does_not_change_csv) {
    auto cfg = path_config("fixed:6", 3000, 19);
    std::string first;
    for (int workers : {1, 2, 4}) {
        cfg.workers = workers;
        std::ostringstream out;
        write_trials_csv(out, run_experiment(cfg).trials);
        if (first.empty()) {
            first = out.str();
            EXPECT_EQ(first.rfind("trial,success,steps,measurements,failure_kind\n", 0), 0u);
        } else {
            EXPECT_EQ(out.str(), first);
        }
    }
}

TEST(Sweep, n_axis_non_decreasing) {
    auto cfg = path_config("fixed:auto", 4000, 3);
    auto rows = sweep(cfg, SweepAxis::N, {1, 5, 10, 25, 53});
    ASSERT_EQ(rows.size(), 5u);
    for (size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].resolved_n, rows[i].value);
        EXPECT_GE(rows[i].stats.wilson_ci_95.hi, rows[i - 1].stats.success_rate) << i;
    }
    EXPECT_EQ(rows[0].stats.success_rate, 0.0);
}

TEST(Sweep, distance_axis_non_increasing) {
    auto cfg = path_config("fixed:8", 4000, 4);
    auto rows = sweep(cfg, SweepAxis::D, {2, 5, 10, 20});
    for (size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LE(rows[i].stats.wilson_ci_95.lo, rows[i - 1].stats.success_rate) << i;
    }
    EXPECT_GT(rows.front().stats.success_rate, rows.back().stats.success_rate);
}

TEST(Sweep, empty_values) {
    auto rows = sweep(path_config("fixed:auto", 10, 1), SweepAxis::Delta, {});
    EXPECT_TRUE(rows.empty());
    std::ostringstream out;
    write_sweep_csv(out, SweepAxis::Delta, rows);
    EXPECT_EQ(out.str().find('\n'), out.str().size() - 1);
    EXPECT_TRUE(sweep_to_json(SweepAxis::Delta, rows)["rows"].empty());
    EXPECT_EQ(parse_axis("delta"), SweepAxis::Delta);
    EXPECT_THROW(parse_axis("x"), ConfigError);
}
