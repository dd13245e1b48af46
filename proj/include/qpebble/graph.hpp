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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qpebble {

using NodeId = int;
/// Local 0-based port label at one endpoint of an edge.
using PortNumber = int;

struct PortEdge {
    NodeId u;
    PortNumber port_at_u;
    NodeId v;
    PortNumber port_at_v;

    bool operator==(const PortEdge &) const = default;
};

/// Where an edge leads: the far node and the port label of the edge there.
struct PortTarget {
    NodeId node;
    PortNumber entry_port;

    bool operator==(const PortTarget &) const = default;
};

class GraphError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Anonymous port-labeled graph with a start node and a treasure node.
 *
 * Construction never throws on invariant violations; it only indexes the edge
 * list. Use validate() to check the model invariants. Accessors assume the
 * graph is valid.
 */
class PortGraph {
  public:
    PortGraph() = default;
    PortGraph(int node_count, std::vector<PortEdge> edges, NodeId start, NodeId treasure);

    int node_count() const { return node_count_; }
    const std::vector<PortEdge> &edges() const { return edges_; }
    NodeId start() const { return start_; }
    NodeId treasure() const { return treasure_; }

    int degree(NodeId v) const { return static_cast<int>(adjacency_.at(v).size()); }
    int max_degree() const;

    /// Throws GraphError when p is outside [0, degree(u)).
    PortTarget neighbor_via_port(NodeId u, PortNumber p) const;

    /// Same graph with a different start node (used to restart walks mid-path).
    PortGraph with_start(NodeId start) const;

    bool operator==(const PortGraph &other) const {
        return node_count_ == other.node_count_ && start_ == other.start_ &&
               treasure_ == other.treasure_ && edges_ == other.edges_;
    }

  private:
    int node_count_ = 0;
    std::vector<PortEdge> edges_;
    NodeId start_ = 0;
    NodeId treasure_ = 0;
    // adjacency_[u][p] is where port p of u leads; unset slots hold node -1.
    std::vector<std::vector<PortTarget>> adjacency_;
};

enum class ViolationKind {
    EmptyGraph,
    NodeOutOfRange,
    SelfLoop,
    ParallelEdge,
    PortSetNotContiguous,
    NotConnected,
    StartEqualsTreasure,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string message;
    /// Offending node, or -1.
    NodeId node = -1;
    /// Index of the offending edge in edges(), or -1.
    int edge_index = -1;
};

/// Returns the first violated invariant, or nullopt when the graph is valid.
std::optional<Violation> validate(const PortGraph &g);

struct ShortestPath {
    int length = 0;
    /// ports[i] is the exit port taken at the i-th node of the path.
    std::vector<PortNumber> ports;
    /// nodes[0] = s, nodes[length] = t.
    std::vector<NodeId> nodes;
};

/// BFS distance from s to t plus the path that takes the smallest exit port
/// among all distance-decreasing ports at every step.
ShortestPath shortest_path(const PortGraph &g, NodeId s, NodeId t);

// ---- generators -----------------------------------------------------------

/// Chain v_0..v_D (start v_0, treasure v_D). Internal chain nodes v_1..v_{D-1}
/// get pendant decoys up to degree `delta`; ports at each node are a seeded
/// permutation. Chain node i has id i; decoys follow.
PortGraph gen_padded_path(int distance, int delta, uint64_t seed);

/// Chain whose exit at v_i is the 1-based port exit_ports[i]. Each chain node
/// is padded with decoys to degree max(exit port, delta) (v_0 only to its exit
/// port), and the entry port is the smallest free port. Used for pinned
/// examples.
PortGraph gen_path_with_ports(const std::vector<int> &exit_ports, int delta);

/// Port assignment for the six-node impossibility gadget.
///
/// Nodes: S=0, U=1, V=2 (triangle), T=3, U'=4, V'=5 (pendants of S, U, V).
/// pendant_ports[x] is the port at triangle node x leading to its pendant. The
/// two remaining ports at each triangle node go, in ascending order, to
///   S: (V, U)    U: (V, S)    V: (S, U)
/// unless the node's bit in flip_mask is set, which swaps them. The default
/// (2,2,2)/mask 0 is the routing walked through in the classical impossibility
/// argument: S-1->U, U-1->S, U-0->V, V-1->U.
struct GadgetSpec {
    int pendant_ports[3] = {2, 2, 2};
    unsigned flip_mask = 0;

    /// 27 pendant triples times 8 flip masks: every port permutation at S, U, V.
    static constexpr int kFamilySize = 216;
    static GadgetSpec from_family_index(int index);
};

namespace gadget {
inline constexpr NodeId S = 0;
inline constexpr NodeId U = 1;
inline constexpr NodeId V = 2;
inline constexpr NodeId T = 3;
inline constexpr NodeId UPrime = 4;
inline constexpr NodeId VPrime = 5;
}  // namespace gadget

PortGraph gen_gpqr(const GadgetSpec &spec);

// ---- text format ----------------------------------------------------------

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &what);
    int line() const { return line_; }

  private:
    int line_;
};

/// Format: `n m`, `start treasure`, then m lines `u port_at_u v port_at_v`.
/// `#` starts a comment. Throws ParseError on syntax errors and GraphError
/// when the parsed graph fails validate().
PortGraph parse_graph(std::string_view text);
std::string serialize_graph(const PortGraph &g);

}  // namespace qpebble
