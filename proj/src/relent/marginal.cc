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

#include "relent/marginal.h"

#include <algorithm>
#include <cmath>

namespace relent {

namespace {

double uniform_in(std::mt19937_64 &rng, double lo, double hi) {
    double u = std::generate_canonical<double, 64>(rng);
    return lo + (hi - lo) * u;
}

}  // namespace

void QubitMarginTriple::validate() const {
    if (joint.size() != 4) {
        throw DomainError("QubitMarginTriple: joint spectrum must have 4 entries");
    }
    for (double m : {margin_a, margin_b}) {
        if (!(m >= 0 && m <= 0.5)) {
            throw DomainError("QubitMarginTriple: margin " + std::to_string(m) + " outside [0, 1/2]");
        }
    }
}

BravyiCheck bravyi_admissible(const QubitMarginTriple &t, double slack) {
    t.validate();
    const auto &l = t.joint.sorted_desc();
    double a = t.margin_a;
    double b = t.margin_b;
    BravyiCheck out;
    out.residuals[0] = std::min(a, b) - (l[2] + l[3]);
    out.residuals[1] = a + b - (l[1] + l[2] + 2 * l[3]);
    out.residuals[2] = std::abs(a - b) - std::min(l[0] - l[2], l[1] - l[3]);
    out.admissible = out.residuals[0] >= -slack && out.residuals[1] >= -slack && out.residuals[2] <= slack;
    return out;
}

Spectrum sample_joint_spectrum(std::mt19937_64 &rng, bool require_full_rank) {
    std::exponential_distribution<double> expo(1.0);
    while (true) {
        std::vector<double> w(4);
        double total = 0;
        for (double &x : w) {
            x = expo(rng);
            total += x;
        }
        for (double &x : w) {
            x /= total;
        }
        std::sort(w.begin(), w.end(), std::greater<>());
        if (require_full_rank && w[3] <= kFullRankFloor) {
            continue;
        }
        return Spectrum(std::move(w));
    }
}

std::pair<double, double> sample_admissible_margins(const Spectrum &joint, std::mt19937_64 &rng, uint64_t max_tries) {
    if (joint.size() != 4) {
        throw DomainError("sample_admissible_margins: joint spectrum must have 4 entries");
    }
    const auto &l = joint.sorted_desc();
    // The admissible set is a polygon; in u = a + b, v = a - b it sits inside
    // the box u in [max(2 c1, c2), 1], |v| <= min(c3, 1/2 - c1). Drawing from
    // that box and rejecting keeps the law uniform on the polygon and handles
    // the degenerate (zero-area) cases exactly: c3 = 0 gives a = b.
    double c1 = l[2] + l[3];
    double c2 = l[1] + l[2] + 2 * l[3];
    double c3 = std::min(l[0] - l[2], l[1] - l[3]);
    double u_lo = std::min(std::max(2 * c1, c2), 1.0);
    double v_hw = std::max(0.0, std::min(c3, 0.5 - c1));

    QubitMarginTriple probe{joint, 0.5, 0.5};
    for (uint64_t attempt = 0; attempt < max_tries; attempt++) {
        double u = uniform_in(rng, u_lo, 1.0);
        double v = uniform_in(rng, -v_hw, v_hw);
        double a = 0.5 * (u + v);
        double b = 0.5 * (u - v);
        if (!(a >= 0 && a <= 0.5 && b >= 0 && b <= 0.5)) {
            continue;
        }
        probe.margin_a = a;
        probe.margin_b = b;
        if (bravyi_admissible(probe, 0).admissible) {
            return {a, b};
        }
    }
    throw SamplingFailure("sample_admissible_margins: no admissible margins after " + std::to_string(max_tries) +
                              " tries",
                          l);
}

QubitMarginTriple margins_of_state(const DensityMatrix &rho_ab) {
    if (rho_ab.dim() != 4) {
        throw DomainError("margins_of_state: expected a 4x4 two-qubit state");
    }
    auto min_eig = [](const ComplexMatrix &m) {
        return std::clamp(eigenvalues_hermitian(m).back(), 0.0, 0.5);
    };
    const ComplexMatrix &m = rho_ab.matrix();
    return QubitMarginTriple{
        rho_ab.spectrum(),
        min_eig(partial_trace(m, 2, 2, Subsystem::A)),
        min_eig(partial_trace(m, 2, 2, Subsystem::B)),
    };
}

}  // namespace relent
