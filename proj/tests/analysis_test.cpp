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

#include "qpebble/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace qpebble;

TEST(SuccessBound, frozen_value) {
    auto r = bound_report(10, 4, 0.01, 53);
    EXPECT_NEAR(r.delta, 0.8535533905932737, 1e-15);
    EXPECT_NEAR(r.per_node_failure, 9.063306330440142e-4, 1e-15);
    EXPECT_NEAR(r.success_lower, 0.99097356905681435, 1e-12);
    EXPECT_NEAR(success_lower_bound(10, 4, 53), 0.99097356905681435, 1e-12);
}

TEST(SuccessBound, clamp_and_limit) {
    EXPECT_EQ(success_lower_bound(5, 8, 1), 0.0);
    EXPECT_NEAR(success_lower_bound(5, 4, 2000), 1.0, 1e-12);
    double prev = 0.0;
    for (int n = 1; n < 200; ++n) {
        double s = success_lower_bound(10, 4, n);
        EXPECT_GE(s, prev);
        EXPECT_GE(s, 0.0);
        EXPECT_LE(s, 1.0);
        prev = s;
    }
}

TEST(RequiredN, frozen_values) {
    EXPECT_EQ(required_n(10, 4, 0.01), 53);
    EXPECT_EQ(required_n(1, 2, 0.5), 2);
    EXPECT_EQ(bound_report(10, 4, 0.01).required_n, 53);
}

TEST(RequiredN, minimal_and_sufficient) {
    for (int d : {1, 3, 10, 100}) {
        for (long long delta : {2, 4, 8, 32}) {
            for (double eps : {0.1, 0.01, 0.001}) {
                int n = required_n(d, delta, eps);
                double target = eps / d;
                EXPECT_LE(delta * std::pow(delta_bound(delta), n), target * (1 + 1e-9));
                if (n > 1) {
                    EXPECT_GT(delta * std::pow(delta_bound(delta), n - 1), target);
                }
                EXPECT_GE(success_lower_bound(d, delta, n), 1.0 - eps - 1e-12);
            }
        }
    }
}

TEST(RequiredN, monotone) {
    for (int d = 1; d < 60; ++d) {
        EXPECT_LE(required_n(d, 4, 0.01), required_n(d + 1, 4, 0.01));
    }
    for (long long delta = 2; delta < 64; delta += 2) {
        EXPECT_LE(required_n(10, delta, 0.01), required_n(10, delta + 2, 0.01));
    }
    EXPECT_LE(required_n(10, 4, 0.1), required_n(10, 4, 0.01));
    EXPECT_LE(required_n(10, 4, 0.01), required_n(10, 4, 0.001));
}

TEST(BoundJson, keys) {
    auto j = to_json(bound_report(10, 4, 0.01));
    for (const char *key : {"delta", "per_node_failure", "success_lower", "required_n"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["required_n"], 53);
}

TEST(BitSign4, wrong_run_probability) {
    EXPECT_DOUBLE_EQ(bitsign4_wrong_run_prob(1), 1.0);
    EXPECT_DOUBLE_EQ(bitsign4_wrong_run_prob(11), 9.765625e-4);
    auto r = bitsign4_bound_report(10, 0.01, 11);
    EXPECT_GE(r.success_lower, 0.0);
    EXPECT_LE(r.success_lower, 1.0);
}

TEST(FullPath, frozen_log_values) {
    EXPECT_NEAR(full_path_log_bound(3, 4).log_inv_delta_prime, 6.024533359869041e-4, 1e-16);
    EXPECT_NEAR(full_path_log_bound(5, 4).log_inv_delta_prime, 2.353097980447125e-6, 1e-18);
    EXPECT_NEAR(full_path_log_bound(1, 6).log_inv_delta_prime, 0.06933646419507391, 1e-15);
}

TEST(FullPath, single_step_matches_per_node_delta) {
    for (long long delta : {2, 4, 6, 8, 16, 128}) {
        EXPECT_NEAR(full_path_log_bound(1, delta).log_inv_delta_prime, -std::log(delta_bound(delta)), 1e-12);
    }
}

TEST(FullPath, finite_in_log_space_at_scale) {
    for (int d : {1, 10, 1000, 1000000}) {
        for (long long delta : {2LL, 4LL, 256LL, 65536LL}) {
            auto b = full_path_log_bound(d, delta);
            EXPECT_TRUE(std::isfinite(b.log_log_inv_delta_prime)) << d << " " << delta;
            EXPECT_TRUE(std::isfinite(b.log_measurement_count_estimate));
            auto c = compare_single_vs_per_node(d, delta);
            EXPECT_TRUE(std::isfinite(c.log_ratio));
        }
    }
}

TEST(FullPath, series_branch_is_continuous) {
    for (double x : {9.9e-5, 1e-4, 1.01e-4}) {
        double exact = -std::log1p(-std::sin(x) * std::sin(x));
        EXPECT_NEAR(neg_two_log_cos(x) / exact, 1.0, 1e-15);
    }
    EXPECT_NEAR(neg_two_log_cos(1e-8), 1e-16, 1e-30);
}

TEST(Compare, frozen_small_case) {
    auto c = compare_single_vs_per_node(2, 2);
    EXPECT_DOUBLE_EQ(c.per_node_total, 18.0);
    EXPECT_NEAR(c.full_path_total, 75.67503763002882, 1e-9);
    EXPECT_TRUE(c.full_path_not_better);
    EXPECT_NEAR(compare_single_vs_per_node(3, 4).full_path_total, 376597.5639809003, 1e-6);
}

TEST(Compare, full_path_never_cheaper_beyond_one_step) {
    for (int d = 2; d <= 30; ++d) {
        double prev = -1e300;
        for (long long delta : {2, 4, 8, 16}) {
            auto c = compare_single_vs_per_node(d, delta);
            EXPECT_TRUE(c.full_path_not_better) << d << " " << delta;
            (void)prev;
        }
    }
    double prev = 0.0;
    for (int d = 2; d <= 8; ++d) {
        double r = compare_single_vs_per_node(d, 4).log_ratio;
        EXPECT_GT(r, prev);
        prev = r;
    }
    EXPECT_GT(compare_single_vs_per_node(5, 4).log_ratio, std::log(1e3));
}

TEST(Impossibility, every_table_defeated) {
    auto report = check_impossibility();
    EXPECT_EQ(report.tables_total, 64);
    EXPECT_EQ(report.tables_defeated, 64);
    EXPECT_EQ(report.graphs_examined, 216);
    EXPECT_EQ(report.placements_per_graph, 64);
    EXPECT_LE(report.max_trajectory_length, 7);
    EXPECT_FALSE(report.universal_graph_exists);
    EXPECT_TRUE(report.passed());
    for (const auto &v : report.verdicts) {
        ASSERT_GE(v.witness_graph, 0);
        auto g = gen_gpqr(GadgetSpec::from_family_index(v.witness_graph));
        EXPECT_TRUE(table_defeated_on(g, DecisionTable::gadget_table(v.table_index)));
    }
}

TEST(Impossibility, parallel_matches_serial) {
    auto par = check_impossibility();
    auto ser = check_impossibility_serial();
    EXPECT_EQ(to_json(par), to_json(ser));
}

TEST(Impossibility, proof_case_table_defeated_by_default_gadget) {
    DecisionTable t;
    t.set(3, true, Action::take(1));
    t.set(3, false, Action::take(0));
    t.set(1, true, Action::stay());
    t.set(1, false, Action::stay());
    EXPECT_TRUE(table_defeated_on(gen_gpqr(GadgetSpec{}), t));
}
