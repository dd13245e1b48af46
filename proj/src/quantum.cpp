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

#include "qpebble/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qpebble {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

QubitState QubitState::plus() { return {{kInvSqrt2, 0}, {kInvSqrt2, 0}}; }
QubitState QubitState::minus() { return {{kInvSqrt2, 0}, {-kInvSqrt2, 0}}; }

QubitState QubitState::canonical() const {
    double mag0 = std::abs(amp0);
    if (mag0 == 0.0) {
        return *this;
    }
    Complex rotate = std::conj(amp0) / mag0;
    return {Complex(mag0, 0.0), amp1 * rotate};
}

bool QubitState::same_ray(const QubitState &other, double tol) const {
    // |<a|b>|^2 == 1 for normalised vectors iff they differ by a phase.
    return std::abs(std::norm(inner(*this, other)) - norm_squared() * other.norm_squared()) <= tol;
}

Complex inner(const QubitState &a, const QubitState &b) {
    return std::conj(a.amp0) * b.amp0 + std::conj(a.amp1) * b.amp1;
}

MeasurementBasis build_basis(int j, long long delta) {
    if (delta < 2 || delta % 2 != 0) {
        throw QuantumError("basis family needs an even delta >= 2, got " + std::to_string(delta));
    }
    if (delta > kMaxDirectDelta) {
        throw QuantumError("delta " + std::to_string(delta) + " exceeds the direct-vector cap");
    }
    if (j < 0 || j >= delta / 2) {
        throw QuantumError("basis index " + std::to_string(j) + " outside [0, " + std::to_string(delta / 2) + ")");
    }
    const double angle = static_cast<double>(j) * kPi / static_cast<double>(delta);
    const Complex phase = std::polar(1.0, angle);
    MeasurementBasis basis;
    basis.index = j;
    basis.delta = delta;
    basis.plus_vec = {Complex(kInvSqrt2, 0), phase * kInvSqrt2};
    basis.minus_vec = {Complex(kInvSqrt2, 0), -phase * kInvSqrt2};
    return basis;
}

double born_probability(const QubitState &state, const QubitState &vec) {
    return std::clamp(std::norm(inner(vec, state)), 0.0, 1.0);
}

double cross_overlap_closed_form(int j, int k, Sign sign_j, Sign sign_k, long long delta) {
    if (delta < 2) {
        throw QuantumError("delta must be >= 2");
    }
    const double theta = static_cast<double>(k - j) * kPi / static_cast<double>(delta);
    const double c = std::cos(theta);
    return sign_j == sign_k ? 0.5 * (1.0 + c) : 0.5 * (1.0 - c);
}

double plus_probability(const QubitState &state, const MeasurementBasis &basis) {
    double p_plus = born_probability(state, basis.plus_vec);
    double p_minus = born_probability(state, basis.minus_vec);
    double total = p_plus + p_minus;
    return total > 0.0 ? p_plus / total : 0.5;
}

Outcome sample_measurement(const QubitState &state, const MeasurementBasis &basis, RngStream &rng) {
    return {basis.index, sample_sign(plus_probability(state, basis), rng)};
}

BlochAngles bloch_angles(const QubitState &state) {
    constexpr double kTwoPi = 2.0 * kPi;
    constexpr double kTiny = 1e-12;
    if (std::abs(state.amp0) <= kTiny) {
        double phi = std::arg(state.amp1);
        if (phi < 0) {
            phi += kTwoPi;
        }
        return {kPi / 2.0, phi};
    }
    QubitState c = state.canonical();
    double r = std::abs(c.amp1);
    if (r <= kTiny) {
        return {0.0, 0.0};
    }
    double phi = std::arg(c.amp1);
    if (phi < 0) {
        phi += kTwoPi;
    }
    double signed_r = r;
    if (phi >= kPi - kTiny) {
        phi = std::max(phi - kPi, 0.0);
        signed_r = -r;
    }
    double theta = std::atan2(signed_r, c.amp0.real());
    if (theta < 0) {
        theta += kTwoPi;
    }
    return {theta, phi};
}

double delta_bound(long long delta) {
    if (delta < 2) {
        throw QuantumError("delta must be >= 2");
    }
    // Half-angle form of cos^2(pi/(2 delta)); exact 0.5 at delta = 2.
    return 0.5 * (1.0 + std::cos(kPi / static_cast<double>(delta)));
}

}  // namespace qpebble
