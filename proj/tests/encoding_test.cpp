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

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qpebble;

namespace {

const QubitState &vec(int j, Sign s, long long delta) {
    static thread_local MeasurementBasis b;
    b = build_basis(j, delta);
    return b.vector(s);
}

}  // namespace

TEST(EncodePort, general_first_ports) {
    EXPECT_TRUE(encode_port(1, 4).same_ray(build_basis(0, 4).plus_vec));
    EXPECT_TRUE(encode_port(2, 4).same_ray(build_basis(0, 4).minus_vec));
    EXPECT_EQ(port_label(1), (Outcome{0, Sign::Plus}));
    EXPECT_EQ(port_label(4), (Outcome{1, Sign::Minus}));
    EXPECT_THROW(encode_port(0, 4), EncodingError);
    EXPECT_THROW(encode_port(5, 4), EncodingError);
}

TEST(EncodePort, bitsign4_states) {
    EXPECT_TRUE(encode_port(1, 4, Scheme::BitSign4).same_ray(QubitState::zero()));
    EXPECT_TRUE(encode_port(2, 4, Scheme::BitSign4).same_ray(QubitState::one()));
    EXPECT_TRUE(encode_port(3, 4, Scheme::BitSign4).same_ray(QubitState::plus()));
    EXPECT_TRUE(encode_port(4, 4, Scheme::BitSign4).same_ray(QubitState::minus()));
    EXPECT_THROW(BasisFamily(Scheme::BitSign4, 6), EncodingError);
}

TEST(EncodePort, odd_delta_uses_next_even_family) {
    // Degree 3: family of size 2 built for delta 4, ports 1..3 only.
    EXPECT_TRUE(encode_port(3, 3).same_ray(build_basis(1, 4).plus_vec));
    EXPECT_THROW(encode_port(4, 3), EncodingError);
}

TEST(DecodeOutcome, examples) {
    EXPECT_EQ(decode_outcome({0, Sign::Plus}, 4), 1);
    EXPECT_EQ(decode_outcome({1, Sign::Minus}, 4), 4);
    EXPECT_EQ(decode_outcome({1, Sign::Plus}, 4, Scheme::BitSign4), 3);
}

TEST(DecodeOutcome, bijection_all_schemes) {
    for (long long delta : {2, 4, 6, 8, 16, 64, 128}) {
        BasisFamily family(Scheme::General, delta);
        ASSERT_EQ(family.size(), delta / 2);
        for (long long j = 1; j <= delta; ++j) {
            auto label = port_label(j);
            EXPECT_EQ(decode_outcome(label, delta), j);
            EXPECT_TRUE(encode_port(j, delta).same_ray(family.basis(label.basis_index).vector(label.sign)));
        }
    }
    for (long long j = 1; j <= 4; ++j) {
        EXPECT_EQ(decode_outcome(port_label(j), 4, Scheme::BitSign4), j);
    }
    for (int delta : {2, 5, 16}) {
        for (int j = 1; j <= delta; ++j) {
            EXPECT_EQ(decode_qudit(encode_qudit(j, delta), delta), j);
        }
    }
}

TEST(DecodeOutcome, self_basis_measurement_is_certain) {
    RngStream rng(8, 8);
    for (Scheme scheme : {Scheme::General, Scheme::BitSign4}) {
        for (long long delta : {2, 4}) {
            BasisFamily family(scheme, delta);
            for (long long j = 1; j <= delta; ++j) {
                auto label = port_label(j);
                auto state = encode_port(j, delta, scheme);
                for (int i = 0; i < 10000; ++i) {
                    ASSERT_EQ(sample_measurement(state, family.basis(label.basis_index), rng), label);
                }
            }
        }
    }
}

TEST(Qudit, levels_and_measurement) {
    EXPECT_EQ(encode_qudit(1, 4), 0);
    EXPECT_EQ(encode_qudit(4, 4), 3);
    EXPECT_THROW(encode_qudit(5, 4), EncodingError);
    EXPECT_THROW(decode_qudit(4, 4), EncodingError);
    RngStream rng(3, 0);
    for (int level = 0; level < 7; ++level) {
        for (int i = 0; i < 100; ++i) {
            ASSERT_EQ(measure_qudit(level, 7, rng), level);
        }
    }
}

TEST(PlacePebbles, single_edge) {
    PortGraph g(2, {{0, 0, 1, 0}}, 0, 1);
    auto placement = place_pebbles(g, Scheme::General);
    EXPECT_EQ(placement.pebble_count(), 1);
    const auto *p = placement.find(0);
    ASSERT_NE(p, nullptr);
    const auto &q = std::get<QubitEmission>(p->emission);
    EXPECT_EQ(q.label, (Outcome{0, Sign::Plus}));
    EXPECT_TRUE(q.state.same_ray(build_basis(0, 2).plus_vec));
    EXPECT_EQ(placement.find(1), nullptr);
}

TEST(PlacePebbles, six_step_example) {
    auto g = gen_path_with_ports({1, 4, 3, 2, 4, 1}, 4);
    auto placement = place_pebbles(g, Scheme::General);
    ASSERT_EQ(placement.pebble_count(), 6);
    auto sp = shortest_path(g, g.start(), g.treasure());
    std::vector<std::pair<int, Sign>> expected{{0, Sign::Plus},  {1, Sign::Minus}, {1, Sign::Plus},
                                               {0, Sign::Minus}, {1, Sign::Minus}, {0, Sign::Plus}};
    for (int i = 0; i < 6; ++i) {
        const auto &q = std::get<QubitEmission>(placement.find(sp.nodes[i])->emission);
        EXPECT_EQ(q.label, (Outcome{expected[i].first, expected[i].second}));
        EXPECT_TRUE(q.state.same_ray(vec(expected[i].first, expected[i].second, 4)));
    }
}

TEST(PlacePebbles, count_equals_distance) {
    for (int d : {1, 2, 5, 10, 40}) {
        for (Scheme s : {Scheme::General, Scheme::BitSign4, Scheme::Qudit}) {
            auto placement = place_pebbles(gen_padded_path(d, 4, d), s);
            EXPECT_EQ(placement.pebble_count(), d);
            EXPECT_EQ(placement.nodes().size(), static_cast<size_t>(d));
        }
    }
}

TEST(PlacePebbles, noise_free_decode_reaches_treasure) {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int d = 1 + static_cast<int>(seed % 12);
        long long delta = 2 + 2 * static_cast<int>(seed % 5);
        auto g = gen_padded_path(d, static_cast<int>(delta), seed);
        auto placement = place_pebbles(g, Scheme::General);
        BasisFamily family(Scheme::General, delta);
        NodeId at = g.start();
        int hops = 0;
        while (at != g.treasure()) {
            const auto *p = placement.find(at);
            ASSERT_NE(p, nullptr);
            const auto &state = std::get<QubitEmission>(p->emission).state;
            // Argmax of Born probability over every basis vector.
            Outcome best{};
            double best_p = -1.0;
            for (const auto &b : family.bases()) {
                for (Sign s : {Sign::Plus, Sign::Minus}) {
                    double prob = born_probability(state, b.vector(s));
                    if (prob > best_p) {
                        best_p = prob;
                        best = {b.index, s};
                    }
                }
            }
            at = g.neighbor_via_port(at, static_cast<int>(decode_outcome(best, delta)) - 1).node;
            ++hops;
            ASSERT_LE(hops, d);
        }
        EXPECT_EQ(hops, d);
    }
}

TEST(PlacePebbles, scheme_errors) {
    EXPECT_THROW(place_pebbles(gen_padded_path(3, 6, 1), Scheme::BitSign4), EncodingError);
    EXPECT_THROW(place_pebbles(gen_padded_path(3, 4, 1), Scheme::FullPathSingleQubit), EncodingError);
    EXPECT_THROW(place_pebbles(PortGraph(2, {{0, 1, 1, 0}}, 0, 1), Scheme::General), GraphError);
}

TEST(PlacementJson, shape) {
    auto g = gen_path_with_ports({1, 4}, 4);
    auto j = placement_to_json(place_pebbles(g, Scheme::General));
    EXPECT_EQ(j["scheme"], "general");
    ASSERT_EQ(j["pebbles"].size(), 2u);
    EXPECT_EQ(j["pebbles"][0]["basis_index"], 0);
    EXPECT_EQ(j["pebbles"][0]["sign"], "plus");
    EXPECT_EQ(j["pebbles"][1]["basis_index"], 1);
    EXPECT_EQ(j["pebbles"][1]["sign"], "minus");
    auto qj = placement_to_json(place_pebbles(g, Scheme::Qudit));
    EXPECT_EQ(qj["scheme"], "qudit");
    EXPECT_EQ(qj["pebbles"][1]["level"], 3);
}

TEST(Scheme, names_roundtrip) {
    for (Scheme s : {Scheme::General, Scheme::BitSign4, Scheme::Qudit, Scheme::FullPathSingleQubit}) {
        EXPECT_EQ(parse_scheme(to_string(s)), s);
    }
    EXPECT_THROW(parse_scheme("nope"), std::invalid_argument);
}

TEST(FullPath, examples) {
    auto one = encode_full_path({3}, 4);
    EXPECT_EQ(one.state_index, 3);
    EXPECT_TRUE(one.state.same_ray(encode_port(3, 4)));
    EXPECT_EQ(encode_full_path({1, 2}, 2).state_index, 2);
    EXPECT_EQ(encode_full_path({1, 2}, 2).family_delta, 4);
    EXPECT_EQ(encode_full_path({1, 1, 1}, 4).basis_count, 32);
    EXPECT_THROW(encode_full_path(std::vector<int>(11, 1), 4), EncodingError);
}

TEST(FullPath, index_matches_enumeration_and_inverts) {
    for (int delta : {2, 3, 4}) {
        for (int d = 1; d <= 4; ++d) {
            std::vector<int> ports(d, 1);
            for (;;) {
                auto enc = encode_full_path(ports, delta);
                ASSERT_EQ(enc.state_index, oracle::enumerate_index(ports, delta));
                ASSERT_EQ(decode_full_path(enc.state_index, delta, d), ports);
                int pos = d - 1;
                while (pos >= 0 && ports[pos] == delta) {
                    ports[pos--] = 1;
                }
                if (pos < 0) {
                    break;
                }
                ++ports[pos];
            }
        }
    }
}
