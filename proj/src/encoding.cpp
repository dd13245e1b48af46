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

#include "qpebble/encoding.hpp"

#include <cmath>

namespace qpebble {

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::General:
            return "general";
        case Scheme::BitSign4:
            return "bitsign4";
        case Scheme::Qudit:
            return "qudit";
        case Scheme::FullPathSingleQubit:
            return "fullpath";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name) {
    for (Scheme s : {Scheme::General, Scheme::BitSign4, Scheme::Qudit, Scheme::FullPathSingleQubit}) {
        if (name == to_string(s)) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

BasisFamily::BasisFamily(Scheme scheme, long long delta) : scheme_(scheme), delta_(delta) {
    switch (scheme) {
        case Scheme::General:
        case Scheme::FullPathSingleQubit: {
            long long family = even_family_delta(std::max(delta, 2LL));
            for (int j = 0; j < family / 2; ++j) {
                bases_.push_back(build_basis(j, family));
            }
            break;
        }
        case Scheme::BitSign4: {
            if (delta > 4) {
                throw EncodingError("bit/sign encoding supports max degree <= 4, got " + std::to_string(delta));
            }
            bases_.push_back(MeasurementBasis{0, 4, QubitState::zero(), QubitState::one()});
            bases_.push_back(MeasurementBasis{1, 4, QubitState::plus(), QubitState::minus()});
            break;
        }
        case Scheme::Qudit:
            throw EncodingError("qudit scheme has no qubit basis family");
    }
}

Outcome port_label(long long j) {
    if (j < 1) {
        throw EncodingError("port labels start at 1");
    }
    return {static_cast<int>((j - 1) / 2), (j % 2 == 1) ? Sign::Plus : Sign::Minus};
}

QubitState encode_port(long long j, long long delta, Scheme scheme) {
    if (j < 1 || j > delta) {
        throw EncodingError("port " + std::to_string(j) + " outside [1, " + std::to_string(delta) + "]");
    }
    Outcome label = port_label(j);
    switch (scheme) {
        case Scheme::General:
        case Scheme::FullPathSingleQubit:
            return build_basis(label.basis_index, even_family_delta(delta)).vector(label.sign);
        case Scheme::BitSign4: {
            if (delta > 4) {
                throw EncodingError("bit/sign encoding supports max degree <= 4");
            }
            static const QubitState kPsi[4] = {QubitState::zero(), QubitState::one(), QubitState::plus(),
                                               QubitState::minus()};
            return kPsi[j - 1];
        }
        case Scheme::Qudit:
            break;
    }
    throw EncodingError("qudit ports are encoded as levels, not qubit states");
}

long long decode_outcome(const Outcome &o, long long delta, Scheme scheme) {
    long long bases = scheme == Scheme::BitSign4 ? 2 : even_family_delta(delta) / 2;
    if (o.basis_index < 0 || o.basis_index >= bases) {
        throw EncodingError("outcome basis index out of range");
    }
    return 2LL * o.basis_index + (o.sign == Sign::Plus ? 1 : 2);
}

int encode_qudit(int j, int delta) {
    if (j < 1 || j > delta) {
        throw EncodingError("port " + std::to_string(j) + " outside [1, " + std::to_string(delta) + "]");
    }
    return j - 1;
}

int decode_qudit(int level, int delta) {
    if (level < 0 || level >= delta) {
        throw EncodingError("qudit level out of range");
    }
    return level + 1;
}

int measure_qudit(int level, int delta, RngStream &rng) {
    // Born weights of the basis state |level>: all mass on one level.
    double u = rng.uniform();
    double cumulative = 0.0;
    for (int k = 0; k < delta; ++k) {
        cumulative += k == level ? 1.0 : 0.0;
        if (u < cumulative) {
            return k;
        }
    }
    return delta - 1;
}

Placement::Placement(Scheme scheme, long long delta, int node_count)
    : scheme_(scheme), delta_(delta), slots_(node_count) {}

Placement Placement::markers(const std::vector<bool> &bits) {
    Placement p(Scheme::General, 2, static_cast<int>(bits.size()));
    for (size_t v = 0; v < bits.size(); ++v) {
        if (bits[v]) {
            p.put(QuantumPebble{static_cast<NodeId>(v), std::monostate{}});
        }
    }
    return p;
}

void Placement::put(QuantumPebble pebble) {
    if (pebble.node < 0 || pebble.node >= node_count()) {
        throw EncodingError("pebble node out of range");
    }
    if (!slots_[pebble.node]) {
        ++count_;
    }
    slots_[pebble.node] = std::move(pebble);
}

std::vector<NodeId> Placement::nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v) {
        if (slots_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

Placement place_pebbles(const PortGraph &g, Scheme scheme) {
    if (auto violation = validate(g)) {
        throw GraphError("cannot place pebbles on invalid graph: " + violation->message);
    }
    const long long delta = g.max_degree();
    if (scheme == Scheme::FullPathSingleQubit) {
        throw EncodingError("full-path encoding is a single-pebble analysis mode; use encode_full_path");
    }
    if (scheme == Scheme::BitSign4 && delta > 4) {
        throw EncodingError("bit/sign encoding needs max degree <= 4, graph has " + std::to_string(delta));
    }

    Placement placement(scheme, delta, g.node_count());
    ShortestPath path = shortest_path(g, g.start(), g.treasure());
    for (int i = 0; i < path.length; ++i) {
        const NodeId node = path.nodes[i];
        const int label = path.ports[i] + 1;
        if (scheme == Scheme::Qudit) {
            int levels = static_cast<int>(delta);
            placement.put({node, QuditEmission{encode_qudit(label, levels), levels}});
        } else {
            placement.put({node, QubitEmission{port_label(label), encode_port(label, delta, scheme)}});
        }
    }
    return placement;
}

nlohmann::json placement_to_json(const Placement &placement) {
    nlohmann::json pebbles = nlohmann::json::array();
    for (NodeId v : placement.nodes()) {
        const QuantumPebble &p = *placement.find(v);
        nlohmann::json entry{{"node", v}};
        if (const auto *q = std::get_if<QubitEmission>(&p.emission)) {
            entry["basis_index"] = q->label.basis_index;
            entry["sign"] = q->label.sign == Sign::Plus ? "plus" : "minus";
        } else if (const auto *d = std::get_if<QuditEmission>(&p.emission)) {
            entry["level"] = d->level;
        }
        pebbles.push_back(std::move(entry));
    }
    return {{"scheme", std::string(to_string(placement.scheme()))},
            {"delta", placement.delta()},
            {"pebbles", std::move(pebbles)}};
}

namespace {

long long checked_power(int base, int exponent) {
    long long value = 1;
    for (int i = 0; i < exponent; ++i) {
        if (value > kMaxDirectDelta / base) {
            throw EncodingError("delta^D exceeds the direct-simulation cap of 2^20");
        }
        value *= base;
    }
    return value;
}

}  // namespace

FullPathEncoding encode_full_path(const std::vector<int> &ports, int delta) {
    if (ports.empty()) {
        throw EncodingError("empty path");
    }
    if (delta < 2) {
        throw EncodingError("delta must be >= 2");
    }
    FullPathEncoding enc;
    enc.family_delta = checked_power(delta, static_cast<int>(ports.size()));
    long long index = 0;
    for (int p : ports) {
        if (p < 1 || p > delta) {
            throw EncodingError("port " + std::to_string(p) + " outside [1, " + std::to_string(delta) + "]");
        }
        index = index * delta + (p - 1);
    }
    enc.state_index = index + 1;
    enc.basis_count = even_family_delta(enc.family_delta) / 2;
    enc.state = encode_port(enc.state_index, enc.family_delta, Scheme::General);
    return enc;
}

std::vector<int> decode_full_path(long long state_index, int delta, int distance) {
    long long total = checked_power(delta, distance);
    if (state_index < 1 || state_index > total) {
        throw EncodingError("full-path index out of range");
    }
    std::vector<int> ports(distance);
    long long rest = state_index - 1;
    for (int i = distance - 1; i >= 0; --i) {
        ports[i] = static_cast<int>(rest % delta) + 1;
        rest /= delta;
    }
    return ports;
}

}  // namespace qpebble
