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

namespace qpebble {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014). Used only to spread the
/// user-facing (seed, stream_id) pair over the PCG state space.
constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/**
 * Seeded random stream: PCG-XSH-RR 64/32 (O'Neill 2014).
 *
 * Constants, fixed so that outcome sequences are bit-reproducible:
 *   multiplier  6364136223846793005
 *   increment   (stream_id << 1) | 1
 *   initial     state = 0; step; state += splitmix64(seed ^ splitmix64(stream_id)); step
 *
 * uniform() consumes two 32-bit outputs and returns a 53-bit double in [0, 1).
 * Distinct stream_ids select distinct PCG sequences.
 */
class RngStream {
  public:
    RngStream(uint64_t seed, uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
        inc_ = (stream_id << 1u) | 1u;
        state_ = 0;
        next_u32();
        state_ += splitmix64(seed ^ splitmix64(stream_id));
        next_u32();
    }

    uint64_t seed() const { return seed_; }
    uint64_t stream_id() const { return stream_id_; }

    uint32_t next_u32() {
        uint64_t old = state_;
        state_ = old * kMultiplier + inc_;
        auto xorshifted = static_cast<uint32_t>(((old >> 18u) ^ old) >> 27u);
        auto rot = static_cast<uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        uint32_t a = next_u32() >> 5;  // 27 bits
        uint32_t b = next_u32() >> 6;  // 26 bits
        return (a * 67108864.0 + b) * (1.0 / 9007199254740992.0);
    }

    /// Unbiased integer in [0, bound). bound must be positive.
    uint32_t bounded(uint32_t bound) {
        uint32_t threshold = (0u - bound) % bound;
        for (;;) {
            uint32_t r = next_u32();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    bool operator==(const RngStream &other) const = default;

  private:
    static constexpr uint64_t kMultiplier = 6364136223846793005ULL;

    uint64_t seed_;
    uint64_t stream_id_;
    uint64_t state_;
    uint64_t inc_;
};

}  // namespace qpebble
