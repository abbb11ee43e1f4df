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

#ifndef RELENT_DELTAS_H
#define RELENT_DELTAS_H

#include <optional>
#include <stdexcept>

#include "relent/marginal.h"

namespace relent {

/// A computed relation that theory guarantees turned out false.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Spectral differences for one (rho-side, sigma-side) pair. Writing
/// H(x||y) for the classical relative entropy, down/up for sorted order and
/// a 2-outcome margin spectrum as [1 - m, m]:
///
///   delta_min = H(AB: dn||dn) - H(A: dn||dn) - H(B: dn||dn)
///   delta_max = H(AB: dn||up) - H(A: dn||up) - H(B: dn||up)
///   delta_mix = H(AB: dn||up) - H(A: dn||up) - H(B: dn||dn)
///   delta     = H(AB: dn||up) - H(A: dn||dn) - H(B: dn||dn)
///   delta_bar = H(AB: dn||dn) - H(A: dn||up) - H(B: dn||up)
///
/// delta_bar and delta bound S(rho_AB||sigma_AB) - S(rho_A||sigma_A) -
/// S(rho_B||sigma_B) over all states with these spectra.
struct DeltaReport {
    double delta_min = 0;
    double delta_max = 0;
    double delta_mix = 0;
    double delta = 0;
    double delta_bar = 0;
    /// Only set when computed from density matrices.
    std::optional<double> delta_s;
    QubitMarginTriple rho_side;
    QubitMarginTriple sigma_side;
};

inline constexpr double kOrderingSlack = 1e-10;
inline constexpr double kSandwichSlack = 1e-9;

/// Throws DomainError if the sigma side is not strictly positive, and
/// InvariantViolation if the ordering chain
///   delta_bar <= delta_min, delta_bar <= delta_max <= delta_mix <= delta
/// fails by more than `ordering_slack`.
DeltaReport compute_deltas(const QubitMarginTriple &rho_triple, const QubitMarginTriple &sigma_triple,
                           double ordering_slack = kOrderingSlack);

/// Number of ordering-chain links (out of 4) violated by more than `slack`.
int ordering_violations(const DeltaReport &r, double slack = kOrderingSlack);

struct DeltaS {
    /// +inf when `support_violation`.
    double value = 0;
    bool support_violation = false;
};

/// S(rho_AB||sigma_AB) - S(rho_A||sigma_A) - S(rho_B||sigma_B) for two-qubit states.
DeltaS delta_s(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab);

/// Spectral report of the states' triples with delta_s attached.
DeltaReport compute_state_deltas(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab,
                                 double ordering_slack = kOrderingSlack);

/// delta_bar - slack <= delta_s <= delta + slack. False when delta_s is absent or infinite.
bool sandwich_holds(const DeltaReport &r, double slack = kSandwichSlack);

}  // namespace relent

#endif
