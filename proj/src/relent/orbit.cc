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

#include "relent/orbit.h"

#include <algorithm>
#include <cmath>

namespace relent {

OrbitExtremes orbit_extremes(const Spectrum &rho_spec, const Spectrum &sigma_spec) {
    if (rho_spec.size() != sigma_spec.size()) {
        throw DomainError("orbit_extremes: dimension mismatch");
    }
    if (sigma_spec.min() <= 0) {
        throw DomainError("orbit_extremes: sigma must be invertible (zero eigenvalue)");
    }
    const auto &down = rho_spec.sorted_desc();
    OrbitExtremes out;
    out.min_value = relative_entropy_classical(down, sigma_spec.sorted_desc()).bits();
    out.max_value = relative_entropy_classical(down, sigma_spec.sorted_asc()).bits();
    return out;
}

ComplexMatrix aligned_unitary(const DensityMatrix &rho, const DensityMatrix &sigma, bool maximize) {
    if (rho.dim() != sigma.dim()) {
        throw DomainError("aligned_unitary: dimension mismatch");
    }
    size_t d = rho.dim();
    HermitianEigen er = eig_hermitian(rho.matrix());
    HermitianEigen es = eig_hermitian(sigma.matrix());
    ComplexMatrix perm(d, d);
    for (size_t k = 0; k < d; k++) {
        perm(maximize ? d - 1 - k : k, k) = 1;
    }
    return es.vectors * perm * er.vectors.adjoint();
}

OrbitIntervalReport verify_orbit_interval(const DensityMatrix &rho, const DensityMatrix &sigma, size_t n_samples,
                                          std::mt19937_64 &rng, double slack) {
    if (rho.dim() != sigma.dim()) {
        throw DomainError("verify_orbit_interval: dimension mismatch");
    }
    OrbitIntervalReport report;
    report.analytic = orbit_extremes(rho.spectrum(), sigma.spectrum());
    report.n_samples = n_samples;
    report.observed_min = INFINITY;
    report.observed_max = -INFINITY;

    auto value_at = [&](const ComplexMatrix &u) {
        DensityMatrix rotated(conjugate_by(u, rho.matrix()));
        return relative_entropy_quantum(rotated, sigma).as_double();
    };

    for (size_t k = 0; k < n_samples; k++) {
        double v = value_at(sample_haar_unitary(rho.dim(), rng));
        report.observed_min = std::min(report.observed_min, v);
        report.observed_max = std::max(report.observed_max, v);
        if (v < report.analytic.min_value - slack || v > report.analytic.max_value + slack) {
            report.violations++;
        }
    }
    double width = report.analytic.max_value - report.analytic.min_value;
    report.coverage = (n_samples == 0 || width <= 0) ? 1 : (report.observed_max - report.observed_min) / width;

    report.min_attainment_error = std::abs(value_at(aligned_unitary(rho, sigma, false)) - report.analytic.min_value);
    report.max_attainment_error = std::abs(value_at(aligned_unitary(rho, sigma, true)) - report.analytic.max_value);
    return report;
}

}  // namespace relent
