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

#include "relent/deltas.h"

#include <array>
#include <cmath>
#include <limits>

namespace relent {

namespace {

double h(std::span<const double> p, std::span<const double> q) {
    Divergence d = relative_entropy_classical(p, q);
    if (d.is_infinite()) {
        // Unreachable once the sigma side is checked positive.
        throw DomainError("compute_deltas: support violation in a classical term");
    }
    return d.bits();
}

}  // namespace

DeltaReport compute_deltas(const QubitMarginTriple &rho_triple, const QubitMarginTriple &sigma_triple,
                           double ordering_slack) {
    rho_triple.validate();
    sigma_triple.validate();
    if (sigma_triple.joint.min() <= 0) {
        throw DomainError("compute_deltas: sigma joint spectrum has a zero entry");
    }
    if (sigma_triple.margin_a <= 0 || sigma_triple.margin_b <= 0) {
        throw DomainError("compute_deltas: sigma margins must be strictly positive");
    }

    const auto &l_dn = rho_triple.joint.sorted_desc();
    const auto &m_dn = sigma_triple.joint.sorted_desc();
    std::vector<double> m_up = sigma_triple.joint.sorted_asc();

    std::array<double, 2> la{1 - rho_triple.margin_a, rho_triple.margin_a};
    std::array<double, 2> lb{1 - rho_triple.margin_b, rho_triple.margin_b};
    std::array<double, 2> ma_dn{1 - sigma_triple.margin_a, sigma_triple.margin_a};
    std::array<double, 2> ma_up{sigma_triple.margin_a, 1 - sigma_triple.margin_a};
    std::array<double, 2> mb_dn{1 - sigma_triple.margin_b, sigma_triple.margin_b};
    std::array<double, 2> mb_up{sigma_triple.margin_b, 1 - sigma_triple.margin_b};

    double ab_dn = h(l_dn, m_dn);
    double ab_up = h(l_dn, m_up);
    double a_dn = h(la, ma_dn);
    double a_up = h(la, ma_up);
    double b_dn = h(lb, mb_dn);
    double b_up = h(lb, mb_up);

    DeltaReport r;
    r.delta_min = ab_dn - a_dn - b_dn;
    r.delta_max = ab_up - a_up - b_up;
    r.delta_mix = ab_up - a_up - b_dn;
    r.delta = ab_up - a_dn - b_dn;
    r.delta_bar = ab_dn - a_up - b_up;
    r.rho_side = rho_triple;
    r.sigma_side = sigma_triple;

    if (ordering_violations(r, ordering_slack) != 0) {
        throw InvariantViolation("compute_deltas: ordering chain violated (delta_bar=" + std::to_string(r.delta_bar) +
                                 ", delta_min=" + std::to_string(r.delta_min) +
                                 ", delta_max=" + std::to_string(r.delta_max) +
                                 ", delta_mix=" + std::to_string(r.delta_mix) + ", delta=" + std::to_string(r.delta) +
                                 ")");
    }
    return r;
}

int ordering_violations(const DeltaReport &r, double slack) {
    int n = 0;
    n += r.delta_bar > r.delta_min + slack;
    n += r.delta_bar > r.delta_max + slack;
    n += r.delta_max > r.delta_mix + slack;
    n += r.delta_mix > r.delta + slack;
    return n;
}

DeltaS delta_s(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab) {
    if (rho_ab.dim() != 4 || sigma_ab.dim() != 4) {
        throw DomainError("delta_s: expected 4x4 two-qubit states");
    }
    auto reduce = [](const DensityMatrix &m, Subsystem keep) {
        return DensityMatrix(partial_trace(m.matrix(), 2, 2, keep));
    };
    Divergence s_ab = relative_entropy_quantum(rho_ab, sigma_ab);
    Divergence s_a = relative_entropy_quantum(reduce(rho_ab, Subsystem::A), reduce(sigma_ab, Subsystem::A));
    Divergence s_b = relative_entropy_quantum(reduce(rho_ab, Subsystem::B), reduce(sigma_ab, Subsystem::B));
    if (s_ab.is_infinite() || s_a.is_infinite() || s_b.is_infinite()) {
        return DeltaS{std::numeric_limits<double>::infinity(), true};
    }
    return DeltaS{s_ab.bits() - s_a.bits() - s_b.bits(), false};
}

DeltaReport compute_state_deltas(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab, double ordering_slack) {
    DeltaReport r = compute_deltas(margins_of_state(rho_ab), margins_of_state(sigma_ab), ordering_slack);
    DeltaS ds = delta_s(rho_ab, sigma_ab);
    r.delta_s = ds.value;
    return r;
}

bool sandwich_holds(const DeltaReport &r, double slack) {
    if (!r.delta_s || !std::isfinite(*r.delta_s)) {
        return false;
    }
    return *r.delta_s >= r.delta_bar - slack && *r.delta_s <= r.delta + slack;
}

}  // namespace relent
