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

// Independent reference computations for the test suites. Nothing here calls
// into the code under test beyond plain data accessors.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "qpebble/graph.hpp"

namespace qpebble::oracle {

/// Length of the shortest s-t path found by enumerating every simple path
/// with depth-first search. Exponential; only for small graphs.
inline int brute_force_distance(const PortGraph &g, NodeId s, NodeId t) {
    const int n = g.node_count();
    std::vector<std::vector<NodeId>> adj(n);
    for (const auto &e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    int best = std::numeric_limits<int>::max();
    std::vector<char> on_path(n, 0);
    std::function<void(NodeId, int)> dfs = [&](NodeId at, int len) {
        if (at == t) {
            best = std::min(best, len);
            return;
        }
        on_path[at] = 1;
        for (NodeId w : adj[at]) {
            if (!on_path[w]) {
                dfs(w, len + 1);
            }
        }
        on_path[at] = 0;
    };
    dfs(s, 0);
    return best;
}

/// |<j_a|k_b>|^2 from explicit cos/sin components of
/// (|0> +- e^{i m pi/delta}|1>)/sqrt(2); sign +1 or -1.
inline double overlap_by_components(int j, int sign_j, int k, int sign_k, long long delta) {
    const long double pi = 3.141592653589793238462643383279502884L;
    auto vec = [&](int m, int sign) {
        long double a = static_cast<long double>(m) * pi / static_cast<long double>(delta);
        long double r = 1.0L / std::sqrt(2.0L);
        return std::pair<std::complex<long double>, std::complex<long double>>{
            {r, 0.0L}, {sign * r * std::cos(a), sign * r * std::sin(a)}};
    };
    auto [a0, a1] = vec(j, sign_j);
    auto [b0, b1] = vec(k, sign_k);
    std::complex<long double> ip = std::conj(a0) * b0 + std::conj(a1) * b1;
    return static_cast<double>(std::norm(ip));
}

/// 1-based position of `ports` when all sequences in [1, delta]^D are listed
/// in lexicographic order.
inline long long enumerate_index(const std::vector<int> &ports, int delta) {
    const int d = static_cast<int>(ports.size());
    std::vector<int> cur(d, 1);
    long long index = 1;
    for (;;) {
        if (cur == ports) {
            return index;
        }
        int pos = d - 1;
        while (pos >= 0 && cur[pos] == delta) {
            cur[pos] = 1;
            --pos;
        }
        if (pos < 0) {
            return -1;
        }
        ++cur[pos];
        ++index;
    }
}

/// Binomial standard deviation of an empirical frequency.
inline double binomial_sigma(double p, double samples) {
    p = std::min(1.0, std::max(0.0, p));
    return std::sqrt(p * (1.0 - p) / samples);
}

}  // namespace qpebble::oracle
