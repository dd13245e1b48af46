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

#include "qpebble/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

namespace qpebble {

PortGraph::PortGraph(int node_count, std::vector<PortEdge> edges, NodeId start, NodeId treasure)
    : node_count_(node_count), edges_(std::move(edges)), start_(start), treasure_(treasure) {
    adjacency_.resize(std::max(node_count_, 0));
    auto attach = [&](NodeId at, PortNumber port, PortTarget target) {
        if (at < 0 || at >= node_count_ || port < 0) {
            return;
        }
        auto &slots = adjacency_[at];
        if (static_cast<size_t>(port) >= slots.size()) {
            slots.resize(port + 1, PortTarget{-1, -1});
        }
        if (slots[port].node < 0) {
            slots[port] = target;
        }
    };
    for (const auto &e : edges_) {
        attach(e.u, e.port_at_u, {e.v, e.port_at_v});
        attach(e.v, e.port_at_v, {e.u, e.port_at_u});
    }
}

int PortGraph::max_degree() const {
    int best = 0;
    for (const auto &slots : adjacency_) {
        best = std::max(best, static_cast<int>(slots.size()));
    }
    return best;
}

PortTarget PortGraph::neighbor_via_port(NodeId u, PortNumber p) const {
    if (u < 0 || u >= node_count_) {
        throw GraphError("node " + std::to_string(u) + " out of range");
    }
    if (p < 0 || p >= degree(u)) {
        throw GraphError("port " + std::to_string(p) + " out of range at node " + std::to_string(u) +
                         " (degree " + std::to_string(degree(u)) + ")");
    }
    return adjacency_[u][p];
}

PortGraph PortGraph::with_start(NodeId start) const {
    return PortGraph(node_count_, edges_, start, treasure_);
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::EmptyGraph:
            return "empty graph";
        case ViolationKind::NodeOutOfRange:
            return "node out of range";
        case ViolationKind::SelfLoop:
            return "self-loop";
        case ViolationKind::ParallelEdge:
            return "parallel edge";
        case ViolationKind::PortSetNotContiguous:
            return "port set not contiguous";
        case ViolationKind::NotConnected:
            return "not connected";
        case ViolationKind::StartEqualsTreasure:
            return "start equals treasure";
    }
    return "unknown";
}

namespace {

Violation make_violation(ViolationKind kind, const std::string &detail, NodeId node, int edge) {
    std::string message(to_string(kind));
    if (!detail.empty()) {
        message += ": " + detail;
    }
    return Violation{kind, message, node, edge};
}

}  // namespace

std::optional<Violation> validate(const PortGraph &g) {
    const int n = g.node_count();
    if (n <= 0) {
        return make_violation(ViolationKind::EmptyGraph, "node_count must be positive", -1, -1);
    }
    auto in_range = [n](NodeId v) { return v >= 0 && v < n; };
    if (!in_range(g.start())) {
        return make_violation(ViolationKind::NodeOutOfRange, "start " + std::to_string(g.start()), g.start(), -1);
    }
    if (!in_range(g.treasure())) {
        return make_violation(ViolationKind::NodeOutOfRange, "treasure " + std::to_string(g.treasure()),
                              g.treasure(), -1);
    }

    std::vector<std::vector<PortNumber>> ports(n);
    std::set<std::pair<NodeId, NodeId>> seen;
    const auto &edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i) {
        const auto &e = edges[i];
        const int idx = static_cast<int>(i);
        if (!in_range(e.u) || !in_range(e.v)) {
            return make_violation(ViolationKind::NodeOutOfRange, "edge " + std::to_string(idx), -1, idx);
        }
        if (e.u == e.v) {
            return make_violation(ViolationKind::SelfLoop, "at node " + std::to_string(e.u), e.u, idx);
        }
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second) {
            return make_violation(ViolationKind::ParallelEdge,
                                  "between " + std::to_string(e.u) + " and " + std::to_string(e.v), e.u, idx);
        }
        ports[e.u].push_back(e.port_at_u);
        ports[e.v].push_back(e.port_at_v);
    }

    for (NodeId v = 0; v < n; ++v) {
        auto &p = ports[v];
        std::sort(p.begin(), p.end());
        for (size_t k = 0; k < p.size(); ++k) {
            if (p[k] != static_cast<PortNumber>(k)) {
                return make_violation(ViolationKind::PortSetNotContiguous, "at node " + std::to_string(v), v, -1);
            }
        }
    }

    // Connectivity over the (now known to be well-formed) adjacency.
    std::vector<char> reached(n, 0);
    std::deque<NodeId> queue{0};
    reached[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (PortNumber p = 0; p < g.degree(u); ++p) {
            NodeId w = g.neighbor_via_port(u, p).node;
            if (!reached[w]) {
                reached[w] = 1;
                ++count;
                queue.push_back(w);
            }
        }
    }
    if (count != n) {
        auto it = std::find(reached.begin(), reached.end(), 0);
        NodeId lost = static_cast<NodeId>(it - reached.begin());
        return make_violation(ViolationKind::NotConnected, "node " + std::to_string(lost) + " unreachable from 0",
                              lost, -1);
    }

    if (g.start() == g.treasure()) {
        return make_violation(ViolationKind::StartEqualsTreasure, "", g.start(), -1);
    }
    return std::nullopt;
}

ShortestPath shortest_path(const PortGraph &g, NodeId s, NodeId t) {
    const int n = g.node_count();
    if (s < 0 || s >= n || t < 0 || t >= n) {
        throw GraphError("shortest_path: node out of range");
    }
    // Distances to t, then a greedy forward walk from s picking the smallest
    // port that decreases the distance.
    std::vector<int> dist(n, -1);
    std::deque<NodeId> queue{t};
    dist[t] = 0;
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop_front();
        for (PortNumber p = 0; p < g.degree(u); ++p) {
            NodeId w = g.neighbor_via_port(u, p).node;
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    if (dist[s] < 0) {
        throw GraphError("shortest_path: target unreachable");
    }

    ShortestPath path;
    path.length = dist[s];
    path.nodes.push_back(s);
    NodeId at = s;
    while (at != t) {
        for (PortNumber p = 0; p < g.degree(at); ++p) {
            NodeId w = g.neighbor_via_port(at, p).node;
            if (dist[w] == dist[at] - 1) {
                path.ports.push_back(p);
                path.nodes.push_back(w);
                at = w;
                break;
            }
        }
    }
    return path;
}

}  // namespace qpebble
