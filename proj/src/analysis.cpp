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

#include <cmath>
#include <stdexcept>

#include "qpebble/quantum.hpp"

namespace qpebble {

namespace {

void require_even_delta(long long delta) {
    if (delta < 2 || delta % 2 != 0) {
        throw std::invalid_argument("delta must be even and >= 2");
    }
}

/// ln(1 / cos^2(pi / 2 delta)), accurate for large delta.
double log_inv_delta(long long delta) { return neg_two_log_cos(kPi / (2.0 * static_cast<double>(delta))); }

// A ratio this close to an integer is treated as that integer, so rounding in
// ln cos does not push an exact boundary case (delta = 2) up by one.
constexpr double kCeilSlack = 1e-9;

}  // namespace

double neg_two_log_cos(double x) {
    if (std::abs(x) < 1e-4) {
        double x2 = x * x;
        return x2 + x2 * x2 / 6.0;
    }
    double s = std::sin(x);
    return -std::log1p(-s * s);
}

double success_lower_bound(int distance, long long delta, int n) {
    if (distance < 1 || n < 1) {
        throw std::invalid_argument("success_lower_bound needs D >= 1 and n >= 1");
    }
    require_even_delta(delta);
    double log_fail = std::log(static_cast<double>(delta)) - n * log_inv_delta(delta);
    if (log_fail >= 0.0) {
        return 0.0;
    }
    return std::exp(distance * std::log1p(-std::exp(log_fail)));
}

int required_n(int distance, long long delta, double eps) {
    if (distance < 1) {
        throw std::invalid_argument("required_n needs D >= 1");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must be in (0, 1)");
    }
    require_even_delta(delta);
    double ratio = std::log(static_cast<double>(delta) * distance / eps) / log_inv_delta(delta);
    return std::max(1, static_cast<int>(std::ceil(ratio - kCeilSlack)));
}

BoundReport bound_report(int distance, long long delta, double eps, std::optional<int> n) {
    BoundReport r;
    r.required_n = required_n(distance, delta, eps);
    int used_n = n.value_or(r.required_n);
    r.delta = delta_bound(delta);
    r.per_node_failure = std::exp(std::log(static_cast<double>(delta)) - used_n * log_inv_delta(delta));
    r.success_lower = success_lower_bound(distance, delta, used_n);
    return r;
}

nlohmann::json to_json(const BoundReport &report) {
    return {{"delta", report.delta},
            {"per_node_failure", report.per_node_failure},
            {"success_lower", report.success_lower},
            {"required_n", report.required_n}};
}

double bitsign4_wrong_run_prob(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be >= 1");
    }
    return std::ldexp(1.0, 1 - n);
}

BoundReport bitsign4_bound_report(int distance, double eps, std::optional<int> n) {
    if (distance < 1 || !(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("bitsign4 bound needs D >= 1 and eps in (0, 1)");
    }
    BoundReport r;
    // 2^(1-n) <= eps / D  <=>  n >= 1 + log2(D / eps)
    r.required_n = std::max(1, static_cast<int>(std::ceil(1.0 + std::log2(distance / eps) - kCeilSlack)));
    int used_n = n.value_or(r.required_n);
    r.delta = 0.5;
    r.per_node_failure = bitsign4_wrong_run_prob(used_n);
    r.success_lower = r.per_node_failure >= 1.0 ? 0.0 : std::exp(distance * std::log1p(-r.per_node_failure));
    return r;
}

FullPathBound full_path_log_bound(int distance, long long delta, double eps) {
    if (distance < 1 || delta < 2) {
        throw std::invalid_argument("full_path_log_bound needs D >= 1 and delta >= 2");
    }
    const double log_delta = std::log(static_cast<double>(delta));
    // x = (pi/2) / delta^D
    const double log_x = std::log(kPi / 2.0) - distance * log_delta;
    FullPathBound b;
    if (log_x < std::log(1e-4)) {
        double x = std::exp(log_x);
        b.log_log_inv_delta_prime = 2.0 * log_x + std::log1p(x * x / 6.0);
        b.log_inv_delta_prime = std::exp(b.log_log_inv_delta_prime);
    } else {
        b.log_inv_delta_prime = neg_two_log_cos(std::exp(log_x));
        b.log_log_inv_delta_prime = std::log(b.log_inv_delta_prime);
    }
    const double numerator = log_delta + std::log(static_cast<double>(distance)) - std::log(eps);
    b.log_measurement_count_estimate = std::log(numerator) - b.log_log_inv_delta_prime;
    b.measurement_count_estimate = std::exp(b.log_measurement_count_estimate);
    return b;
}

PathComparison compare_single_vs_per_node(int distance, long long delta, double eps) {
    require_even_delta(delta);
    PathComparison c;
    c.distance = distance;
    c.max_degree = delta;
    c.per_node_total = static_cast<double>(distance) * required_n(distance, delta, eps) * (delta / 2);
    FullPathBound fp = full_path_log_bound(distance, delta, eps);
    double log_full = fp.log_measurement_count_estimate + distance * std::log(static_cast<double>(delta)) -
                      std::log(2.0);
    c.full_path_total = std::exp(log_full);
    c.log_ratio = log_full - std::log(c.per_node_total);
    c.full_path_not_better = c.log_ratio >= 0.0;
    return c;
}

nlohmann::json to_json(const PathComparison &cmp) {
    return {{"distance", cmp.distance},
            {"max_degree", cmp.max_degree},
            {"full_path_total", cmp.full_path_total},
            {"per_node_total", cmp.per_node_total},
            {"log_ratio", cmp.log_ratio},
            {"full_path_not_better", cmp.full_path_not_better}};
}

nlohmann::json to_json(const ImpossibilityReport &report) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const auto &v : report.verdicts) {
        verdicts.push_back({{"table", v.table_index},
                            {"description", DecisionTable::gadget_table(v.table_index).describe()},
                            {"witness_graph", v.witness_graph}});
    }
    return {{"tables_total", report.tables_total},
            {"tables_defeated", report.tables_defeated},
            {"graphs_examined", report.graphs_examined},
            {"placements_per_graph", report.placements_per_graph},
            {"max_trajectory_length", report.max_trajectory_length},
            {"universal_graph_exists", report.universal_graph_exists},
            {"passed", report.passed()},
            {"verdicts", std::move(verdicts)}};
}

}  // namespace qpebble
