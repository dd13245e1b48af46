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

#include <cctype>
#include <charconv>
#include <sstream>

#include "qpebble/graph.hpp"

namespace qpebble {

ParseError::ParseError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
    int number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        Line parsed{number, {}};
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
            }
            size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) {
                ++j;
            }
            if (j > i) {
                parsed.tokens.push_back(line.substr(i, j - i));
            }
            i = j;
        }
        if (!parsed.tokens.empty()) {
            lines.push_back(std::move(parsed));
        }
        pos = end + 1;
    }
    return lines;
}

int parse_int(const Line &line, size_t index, const char *what) {
    std::string_view token = line.tokens[index];
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line.number, std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

void expect_tokens(const Line &line, size_t count, const char *what) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, std::string("expected ") + std::to_string(count) + " tokens for " + what +
                                          ", got " + std::to_string(line.tokens.size()));
    }
}

}  // namespace

PortGraph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(1, "missing header 'n m'");
    }
    expect_tokens(lines[0], 2, "header 'n m'");
    int n = parse_int(lines[0], 0, "node count");
    int m = parse_int(lines[0], 1, "edge count");
    if (n < 0 || m < 0) {
        throw ParseError(lines[0].number, "negative count");
    }
    if (lines.size() < 2) {
        throw ParseError(lines[0].number + 1, "missing 'start treasure' line");
    }
    expect_tokens(lines[1], 2, "'start treasure'");
    NodeId start = parse_int(lines[1], 0, "start node");
    NodeId treasure = parse_int(lines[1], 1, "treasure node");

    if (lines.size() - 2 != static_cast<size_t>(m)) {
        int where = lines.size() > 2 + static_cast<size_t>(m) ? lines[2 + m].number : lines.back().number + 1;
        throw ParseError(where, "expected " + std::to_string(m) + " edge lines, found " +
                                    std::to_string(lines.size() - 2));
    }
    std::vector<PortEdge> edges;
    edges.reserve(m);
    for (int k = 0; k < m; ++k) {
        const Line &line = lines[2 + k];
        expect_tokens(line, 4, "edge 'u port_at_u v port_at_v'");
        edges.push_back({parse_int(line, 0, "node"), parse_int(line, 1, "port"), parse_int(line, 2, "node"),
                         parse_int(line, 3, "port")});
    }

    PortGraph g(n, std::move(edges), start, treasure);
    if (auto violation = validate(g)) {
        throw GraphError("invalid graph: " + violation->message);
    }
    return g;
}

std::string serialize_graph(const PortGraph &g) {
    std::ostringstream out;
    out << g.node_count() << ' ' << g.edges().size() << '\n';
    out << g.start() << ' ' << g.treasure() << '\n';
    for (const auto &e : g.edges()) {
        out << e.u << ' ' << e.port_at_u << ' ' << e.v << ' ' << e.port_at_v << '\n';
    }
    return out.str();
}

}  // namespace qpebble
