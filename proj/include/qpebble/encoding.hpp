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

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "qpebble/graph.hpp"
#include "qpebble/quantum.hpp"

namespace qpebble {

/// Port numbers in this module are 1-based ("port labels"): label j is
/// graph port j - 1.
enum class Scheme { General, BitSign4, Qudit, FullPathSingleQubit };

std::string_view to_string(Scheme scheme);
/// Accepts general, bitsign4, qudit, fullpath. Throws std::invalid_argument.
Scheme parse_scheme(std::string_view name);

class EncodingError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Odd degrees are rounded up to the next even value when sizing the family.
inline long long even_family_delta(long long delta) { return delta % 2 == 0 ? delta : delta + 1; }

/**
 * The measurement bases a qubit scheme uses for a given max degree.
 *
 * General:  M(0) .. M(delta/2 - 1) with phase step pi/delta.
 * BitSign4: basis 0 = bit {|0>, |1>}, basis 1 = sign {|+>, |->}.
 *
 * In both, label 2i+1 is the Plus vector of basis i and 2i+2 the Minus
 * vector, so encode/decode share one mapping.
 */
class BasisFamily {
  public:
    BasisFamily(Scheme scheme, long long delta);

    Scheme scheme() const { return scheme_; }
    long long delta() const { return delta_; }
    int size() const { return static_cast<int>(bases_.size()); }
    const MeasurementBasis &basis(int j) const { return bases_.at(j); }
    const std::vector<MeasurementBasis> &bases() const { return bases_; }

  private:
    Scheme scheme_;
    long long delta_;
    std::vector<MeasurementBasis> bases_;
};

/// Eigenvalue label that encodes port label j: basis (j-1)/2, Plus for odd j.
Outcome port_label(long long j);

/// f(j) for General, psi_j for BitSign4. Requires 1 <= j <= delta (and
/// delta <= 4 for BitSign4).
QubitState encode_port(long long j, long long delta, Scheme scheme = Scheme::General);

/// Inverse of encode_port on eigenvalue labels.
long long decode_outcome(const Outcome &o, long long delta, Scheme scheme = Scheme::General);

int encode_qudit(int j, int delta);
int decode_qudit(int level, int delta);

/// Computational-basis measurement of the delta-level basis state |level>.
/// Samples the full Born distribution; consumes one uniform draw.
int measure_qudit(int level, int delta, RngStream &rng);

struct QubitEmission {
    Outcome label;
    QubitState state;
};

struct QuditEmission {
    int level = 0;
    int levels = 0;
};

/// A pebble at one node. std::monostate is a classical marker with no payload.
struct QuantumPebble {
    NodeId node = -1;
    std::variant<std::monostate, QubitEmission, QuditEmission> emission;
};

class Placement {
  public:
    Placement() = default;
    Placement(Scheme scheme, long long delta, int node_count);

    /// Classical markers at every node whose bit is set.
    static Placement markers(const std::vector<bool> &bits);

    Scheme scheme() const { return scheme_; }
    /// Max degree the encoding was built for.
    long long delta() const { return delta_; }
    int node_count() const { return static_cast<int>(slots_.size()); }
    int pebble_count() const { return count_; }

    const QuantumPebble *find(NodeId node) const {
        if (node < 0 || node >= node_count() || !slots_[node]) {
            return nullptr;
        }
        return &*slots_[node];
    }
    void put(QuantumPebble pebble);
    std::vector<NodeId> nodes() const;

  private:
    Scheme scheme_ = Scheme::General;
    long long delta_ = 2;
    std::vector<std::optional<QuantumPebble>> slots_;
    int count_ = 0;
};

/// One pebble per node on shortest_path(start, treasure), excluding the
/// treasure, emitting the encoding of that node's exit port. Throws
/// EncodingError when the scheme cannot encode the graph.
Placement place_pebbles(const PortGraph &g, Scheme scheme);

/// {"scheme": ..., "delta": ..., "pebbles": [{node, basis_index, sign} | {node, level}]}
nlohmann::json placement_to_json(const Placement &placement);

struct FullPathEncoding {
    /// Enlarged family parameter delta^D.
    long long family_delta = 0;
    long long basis_count = 0;
    /// 1-based mixed-radix index of the port sequence.
    long long state_index = 0;
    QubitState state;
};

/// Encodes a whole 1-based port sequence into one qubit of the M(j) family
/// with delta replaced by delta^D. Requires delta^D <= 2^20.
FullPathEncoding encode_full_path(const std::vector<int> &ports, int delta);
std::vector<int> decode_full_path(long long state_index, int delta, int distance);

}  // namespace qpebble
