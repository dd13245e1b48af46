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
#include <numeric>

#include "qpebble/graph.hpp"
#include "qpebble/rng.hpp"

namespace qpebble {

namespace {

// Stream id reserved for graph generation; trial streams use the trial index.
constexpr uint64_t kGeneratorStream = ~uint64_t{0};

std::vector<PortNumber> shuffled_ports(int degree, RngStream &rng) {
    std::vector<PortNumber> ports(degree);
    std::iota(ports.begin(), ports.end(), 0);
    for (int i = degree - 1; i > 0; --i) {
        auto j = static_cast<int>(rng.bounded(static_cast<uint32_t>(i + 1)));
        std::swap(ports[i], ports[j]);
    }
    return ports;
}

}  // namespace

PortGraph gen_padded_path(int distance, int delta, uint64_t seed) {
    if (distance < 1) {
        throw GraphError("gen_padded_path: distance must be >= 1");
    }
    if (delta < 2 || delta % 2 != 0) {
        throw GraphError("gen_padded_path: delta must be even and >= 2");
    }
    RngStream rng(seed, kGeneratorStream);

    std::vector<PortEdge> edges;
    // entry[i] / exit[i]: port at chain node i towards v_{i-1} / v_{i+1}.
    std::vector<PortNumber> entry(distance + 1, 0), exit(distance + 1, 0);
    std::vector<std::vector<PortNumber>> decoy_ports(distance + 1);
    for (int i = 1; i < distance; ++i) {
        auto perm = shuffled_ports(delta, rng);
        entry[i] = perm[0];
        exit[i] = perm[1];
        decoy_ports[i].assign(perm.begin() + 2, perm.end());
    }
    for (int i = 0; i < distance; ++i) {
        edges.push_back({i, exit[i], i + 1, entry[i + 1]});
    }
    NodeId next = distance + 1;
    for (int i = 1; i < distance; ++i) {
        for (PortNumber p : decoy_ports[i]) {
            edges.push_back({i, p, next++, 0});
        }
    }
    return PortGraph(next, std::move(edges), 0, distance);
}

PortGraph gen_path_with_ports(const std::vector<int> &exit_ports, int delta) {
    const int distance = static_cast<int>(exit_ports.size());
    if (distance < 1) {
        throw GraphError("gen_path_with_ports: empty port list");
    }
    if (delta < 2) {
        throw GraphError("gen_path_with_ports: delta must be >= 2");
    }
    for (int port : exit_ports) {
        if (port < 1) {
            throw GraphError("gen_path_with_ports: ports are 1-based");
        }
    }

    std::vector<PortEdge> edges;
    std::vector<PortNumber> entry(distance + 1, 0);
    std::vector<int> degree(distance + 1, 1);
    degree[0] = exit_ports[0];
    for (int i = 1; i < distance; ++i) {
        degree[i] = std::max(delta, exit_ports[i]);
        entry[i] = exit_ports[i] - 1 == 0 ? 1 : 0;
    }
    for (int i = 0; i < distance; ++i) {
        edges.push_back({i, exit_ports[i] - 1, i + 1, entry[i + 1]});
    }
    NodeId next = distance + 1;
    for (int i = 0; i < distance; ++i) {
        for (PortNumber p = 0; p < degree[i]; ++p) {
            bool used = p == exit_ports[i] - 1 || (i > 0 && p == entry[i]);
            if (!used) {
                edges.push_back({i, p, next++, 0});
            }
        }
    }
    return PortGraph(next, std::move(edges), 0, distance);
}

GadgetSpec GadgetSpec::from_family_index(int index) {
    if (index < 0 || index >= kFamilySize) {
        throw GraphError("gadget family index out of range");
    }
    GadgetSpec spec;
    spec.pendant_ports[0] = index % 3;
    spec.pendant_ports[1] = (index / 3) % 3;
    spec.pendant_ports[2] = (index / 9) % 3;
    spec.flip_mask = static_cast<unsigned>(index / 27);
    return spec;
}

PortGraph gen_gpqr(const GadgetSpec &spec) {
    using namespace gadget;
    // Triangle neighbor that receives the lower / higher remaining port.
    constexpr NodeId kLow[3] = {V, V, S};
    constexpr NodeId kHigh[3] = {U, S, U};
    constexpr NodeId kPendant[3] = {T, UPrime, VPrime};

    // port_to[x][y]: port at triangle node x leading to triangle node y.
    PortNumber port_to[3][3] = {};
    for (NodeId x = 0; x < 3; ++x) {
        int pendant = spec.pendant_ports[x];
        if (pendant < 0 || pendant > 2) {
            throw GraphError("gadget pendant port must be in {0,1,2}");
        }
        PortNumber lo = pendant == 0 ? 1 : 0;
        PortNumber hi = pendant == 2 ? 1 : 2;
        if (spec.flip_mask & (1u << x)) {
            std::swap(lo, hi);
        }
        port_to[x][kLow[x]] = lo;
        port_to[x][kHigh[x]] = hi;
    }

    std::vector<PortEdge> edges;
    for (NodeId x = 0; x < 3; ++x) {
        edges.push_back({x, spec.pendant_ports[x], kPendant[x], 0});
    }
    edges.push_back({S, port_to[S][U], U, port_to[U][S]});
    edges.push_back({U, port_to[U][V], V, port_to[V][U]});
    edges.push_back({V, port_to[V][S], S, port_to[S][V]});
    return PortGraph(6, std::move(edges), S, T);
}

}  // namespace qpebble
