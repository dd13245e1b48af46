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

#include <algorithm>
#include <vector>

#include "qpebble/analysis.hpp"

namespace qpebble {

namespace {

constexpr int kGadgetNodes = 6;
constexpr int kPlacements = 1 << kGadgetNodes;

std::vector<PortGraph> gadget_family() {
    std::vector<PortGraph> graphs;
    graphs.reserve(GadgetSpec::kFamilySize);
    for (int i = 0; i < GadgetSpec::kFamilySize; ++i) {
        graphs.push_back(gen_gpqr(GadgetSpec::from_family_index(i)));
    }
    return graphs;
}

// One row of the (table x graph) defeat matrix.
struct TableRow {
    std::vector<char> defeated;
    int max_len = 0;
};

TableRow evaluate_table(int table_index, const std::vector<PortGraph> &graphs) {
    const DecisionTable table = DecisionTable::gadget_table(table_index);
    TableRow row;
    row.defeated.resize(graphs.size());
    for (size_t g = 0; g < graphs.size(); ++g) {
        row.defeated[g] = table_defeated_on(graphs[g], table, &row.max_len) ? 1 : 0;
    }
    return row;
}

ImpossibilityReport assemble(const std::vector<TableRow> &rows) {
    ImpossibilityReport report;
    report.tables_total = static_cast<int>(rows.size());
    report.graphs_examined = GadgetSpec::kFamilySize;
    report.placements_per_graph = kPlacements;
    for (size_t t = 0; t < rows.size(); ++t) {
        const auto &row = rows[t];
        TableVerdict v{static_cast<int>(t), -1};
        auto it = std::find(row.defeated.begin(), row.defeated.end(), 1);
        if (it != row.defeated.end()) {
            v.witness_graph = static_cast<int>(it - row.defeated.begin());
            ++report.tables_defeated;
        }
        report.max_trajectory_length = std::max(report.max_trajectory_length, row.max_len);
        report.verdicts.push_back(v);
    }
    for (int g = 0; g < report.graphs_examined; ++g) {
        bool all = !rows.empty();
        for (const auto &row : rows) {
            all = all && row.defeated[g];
        }
        report.universal_graph_exists = report.universal_graph_exists || all;
    }
    return report;
}

}  // namespace

bool table_defeated_on(const PortGraph &g, const DecisionTable &table, int *max_len) {
    const int n = g.node_count();
    std::vector<bool> bits(n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        for (int v = 0; v < n; ++v) {
            bits[v] = (mask >> v) & 1;
        }
        auto walk = classical_trajectory(g, bits, table);
        if (max_len) {
            *max_len = std::max(*max_len, static_cast<int>(walk.size()));
        }
        if (walk.back() == g.treasure()) {
            return false;
        }
    }
    return true;
}

ImpossibilityReport check_impossibility() {
    const auto graphs = gadget_family();
    std::vector<TableRow> rows(DecisionTable::kGadgetTableCount);
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < DecisionTable::kGadgetTableCount; ++t) {
        rows[t] = evaluate_table(t, graphs);
    }
    return assemble(rows);
}

ImpossibilityReport check_impossibility_serial() {
    const auto graphs = gadget_family();
    std::vector<TableRow> rows;
    for (int t = 0; t < DecisionTable::kGadgetTableCount; ++t) {
        rows.push_back(evaluate_table(t, graphs));
    }
    return assemble(rows);
}

}  // namespace qpebble
