// Copyright 2026 The relent Authors
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

#ifndef RELENT_MARGINAL_H
#define RELENT_MARGINAL_H

#include <array>
#include <random>

#include "relent/entropy.h"

namespace relent {

/// Spectral data of a two-qubit state: the 4-outcome joint spectrum and the
/// minimal eigenvalues of the two single-qubit margins.
struct QubitMarginTriple {
    Spectrum joint;
    double margin_a = 0.5;
    double margin_b = 0.5;

    /// Throws DomainError unless joint has 4 entries and both margins lie in [0, 1/2].
    void validate() const;
};

/// Outcome of the two-qubit marginal test. Residuals are lhs - rhs of each
/// inequality as written:
///   [0] min(a, b) - (l3 + l4)                         must be >= -slack
///   [1] a + b - (l2 + l3 + 2 l4)                      must be >= -slack
///   [2] |a - b| - min(l1 - l3, l2 - l4)               must be <= +slack
struct BravyiCheck {
    bool admissible = false;
    std::array<double, 3> residuals{};
};

BravyiCheck bravyi_admissible(const QubitMarginTriple &t, double slack = 0);

/// Thrown when rejection sampling runs out of tries.
struct SamplingFailure : std::runtime_error {
    SamplingFailure(const std::string &what, std::vector<double> joint)
        : std::runtime_error(what), joint(std::move(joint)) {}
    std::vector<double> joint;
};

inline constexpr double kFullRankFloor = 1e-6;
inline constexpr uint64_t kDefaultMarginTries = 1000000;

/// Uniform point of the 3-simplex (normalized exponentials), sorted
/// non-increasing. With `require_full_rank`, resamples until the smallest
/// entry exceeds kFullRankFloor.
Spectrum sample_joint_spectrum(std::mt19937_64 &rng, bool require_full_rank);

/// Uniform point of the admissible (margin_a, margin_b) region for a given
/// sorted joint spectrum, by rejection. Throws SamplingFailure after
/// `max_tries` rejections.
std::pair<double, double> sample_admissible_margins(const Spectrum &joint, std::mt19937_64 &rng,
                                                    uint64_t max_tries = kDefaultMarginTries);

/// Joint spectrum and margin minimal eigenvalues of a two-qubit state.
QubitMarginTriple margins_of_state(const DensityMatrix &rho_ab);

}  // namespace relent

#endif
