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

#ifndef RELENT_ORBIT_H
#define RELENT_ORBIT_H

#include <random>

#include "relent/entropy.h"

namespace relent {

/// Range of S(U rho U^dagger || sigma) over all unitaries U.
struct OrbitExtremes {
    /// H(lambda-down(rho) || lambda-down(sigma)).
    double min_value = 0;
    /// H(lambda-down(rho) || lambda-up(sigma)).
    double max_value = 0;
};

/// Closed form of the orbit range from the two spectra. sigma must be
/// strictly positive.
OrbitExtremes orbit_extremes(const Spectrum &rho_spec, const Spectrum &sigma_spec);

/// The unitary W P V^dagger that rotates rho's eigenbasis (descending) onto
/// sigma's (descending), with P the identity (`maximize` false) or the
/// order-reversing permutation (`maximize` true).
ComplexMatrix aligned_unitary(const DensityMatrix &rho, const DensityMatrix &sigma, bool maximize);

struct OrbitIntervalReport {
    OrbitExtremes analytic;
    size_t n_samples = 0;
    /// Samples outside [min - slack, max + slack].
    size_t violations = 0;
    double observed_min = 0;
    double observed_max = 0;
    /// (observed_max - observed_min) / (max - min); 1 when the range is a point.
    double coverage = 1;
    /// |S at the aligned unitary - analytic extreme|.
    double min_attainment_error = 0;
    double max_attainment_error = 0;
};

/// Samples Haar unitaries and checks every S(U rho U^dagger || sigma) lies in
/// the analytic interval; also evaluates the two aligned unitaries.
OrbitIntervalReport verify_orbit_interval(const DensityMatrix &rho, const DensityMatrix &sigma, size_t n_samples,
                                          std::mt19937_64 &rng, double slack = 1e-9);

}  // namespace relent

#endif
