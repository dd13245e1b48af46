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

#include <complex>
#include <stdexcept>

#include "qpebble/rng.hpp"

namespace qpebble {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kNormTolerance = 1e-12;
/// Largest family parameter accepted by the direct state-vector path.
inline constexpr long long kMaxDirectDelta = 1LL << 20;

class QuantumError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Pure single-qubit state amp0|0> + amp1|1>.
struct QubitState {
    Complex amp0{1.0, 0.0};
    Complex amp1{0.0, 0.0};

    double norm_squared() const { return std::norm(amp0) + std::norm(amp1); }
    bool is_normalized(double tol = kNormTolerance) const { return std::abs(norm_squared() - 1.0) <= tol; }

    /// Same ray with amp0 rotated to the non-negative real axis.
    QubitState canonical() const;
    /// Equality of rays (global phase ignored).
    bool same_ray(const QubitState &other, double tol = kNormTolerance) const;

    static QubitState zero() { return {{1, 0}, {0, 0}}; }
    static QubitState one() { return {{0, 0}, {1, 0}}; }
    static QubitState plus();
    static QubitState minus();
};

/// <a|b>
Complex inner(const QubitState &a, const QubitState &b);

enum class Sign { Plus, Minus };

inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Eigenvalue label j+ / j- of basis j.
struct Outcome {
    int basis_index = 0;
    Sign sign = Sign::Plus;

    bool operator==(const Outcome &) const = default;
};

/// Orthonormal pair {plus_vec, minus_vec}. For the M(j) family these are
/// (|0> +- e^{i j pi/delta}|1>)/sqrt(2).
struct MeasurementBasis {
    int index = 0;
    long long delta = 2;
    QubitState plus_vec;
    QubitState minus_vec;

    const QubitState &vector(Sign s) const { return s == Sign::Plus ? plus_vec : minus_vec; }
};

/// M(j) with phase step pi/delta. delta must be even, 2 <= delta <= 2^20, and
/// 0 <= j < delta/2.
MeasurementBasis build_basis(int j, long long delta);

/// |<vec|state>|^2, clamped to [0, 1].
double born_probability(const QubitState &state, const QubitState &vec);

/// |<j_sj|k_sk>|^2 from the trigonometric form: (1 + cos((k-j)pi/delta))/2
/// for equal signs, (1 - cos((k-j)pi/delta))/2 otherwise.
double cross_overlap_closed_form(int j, int k, Sign sign_j, Sign sign_k, long long delta);

/// Probability that `state` measured in `basis` reports Plus, normalised over
/// the two Born weights so that eigenstates give exactly 0 or 1.
double plus_probability(const QubitState &state, const MeasurementBasis &basis);

/// Plus iff u < p_plus for one uniform draw u from `rng`.
inline Sign sample_sign(double p_plus, RngStream &rng) {
    return rng.uniform() < p_plus ? Sign::Plus : Sign::Minus;
}

/// One projective measurement of a fresh copy of `state` in `basis`.
/// Consumes exactly one uniform draw.
Outcome sample_measurement(const QubitState &state, const MeasurementBasis &basis, RngStream &rng);

struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

/// Angles under |psi> = cos(theta)|0> + sin(theta) e^{i phi}|1>, with phi in
/// [0, pi) and theta in [0, 2 pi) after fixing amp0 real non-negative. When
/// amp0 vanishes, theta = pi/2 and phi is the phase of amp1 in [0, 2 pi).
BlochAngles bloch_angles(const QubitState &state);

/// cos^2(pi / (2 delta)), the largest single-shot overlap between vectors of
/// distinct bases in the M(j) family.
double delta_bound(long long delta);

}  // namespace qpebble
