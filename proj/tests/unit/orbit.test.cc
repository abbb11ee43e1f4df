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

#include <gtest/gtest.h>

#include "test_util.h"

using namespace relent;
using relent::testing::kl_bits;
using relent::testing::random_full_rank_state;
using relent::testing::random_probs;

TEST(OrbitExtremes, TwoLevelExample) {
    OrbitExtremes e = orbit_extremes(Spectrum({0.9, 0.1}), Spectrum({0.8, 0.2}));
    double lo = 0.9 * std::log2(0.9 / 0.8) + 0.1 * std::log2(0.1 / 0.2);
    double hi = 0.9 * std::log2(0.9 / 0.2) + 0.1 * std::log2(0.1 / 0.8);
    EXPECT_NEAR(e.min_value, lo, 1e-14);
    EXPECT_NEAR(e.max_value, hi, 1e-14);
    EXPECT_NEAR(e.min_value, 0.05293, 1e-4);
    EXPECT_NEAR(e.max_value, 1.65293, 1e-4);
}

TEST(OrbitExtremes, DegenerateSigmaCollapses) {
    OrbitExtremes e = orbit_extremes(Spectrum({0.5, 0.5}), Spectrum({0.5, 0.5}));
    EXPECT_NEAR(e.min_value, 0, 1e-15);
    EXPECT_NEAR(e.max_value, 0, 1e-15);
}

TEST(OrbitExtremes, ZeroInSigmaThrows) {
    EXPECT_THROW(orbit_extremes(Spectrum({0.5, 0.5}), Spectrum({1, 0})), DomainError);
}

TEST(OrbitExtremesProperty, UniformSigma) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; t++) {
        size_t d = 2 + t % 4;
        auto p = random_probs(d, rng);
        double h = 0;
        for (double x : p) {
            h -= x * std::log2(x);
        }
        OrbitExtremes e = orbit_extremes(Spectrum(p), Spectrum(std::vector<double>(d, 1.0 / d)));
        EXPECT_NEAR(e.min_value, std::log2(static_cast<double>(d)) - h, 1e-12);
        EXPECT_NEAR(e.max_value, e.min_value, 1e-12);
    }
}

TEST(OrbitExtremesProperty, BruteForceOverPermutations) {
    // Over permutation matrices the classical relative entropy ranges exactly
    // over the analytic interval's endpoints.
    std::mt19937_64 rng(42);
    for (int t = 0; t < 200; t++) {
        size_t d = 2 + t % 3;
        auto p = random_probs(d, rng), q = random_probs(d, rng);
        std::vector<size_t> perm(d);
        for (size_t k = 0; k < d; k++) perm[k] = k;
        double lo = 1e300, hi = -1e300;
        do {
            std::vector<double> qp(d);
            for (size_t k = 0; k < d; k++) qp[k] = q[perm[k]];
            double v = kl_bits(p, qp);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        } while (std::next_permutation(perm.begin(), perm.end()));
        OrbitExtremes e = orbit_extremes(Spectrum(p), Spectrum(q));
        EXPECT_NEAR(e.min_value, lo, 1e-12);
        EXPECT_NEAR(e.max_value, hi, 1e-12);
        EXPECT_LE(0, e.min_value + 1e-15);
    }
}

TEST(OrbitExtremes, AlignedCommutingAtIdentity) {
    DensityMatrix rho(ComplexMatrix::diagonal({0.6, 0.3, 0.1}));
    DensityMatrix sigma(ComplexMatrix::diagonal({0.5, 0.3, 0.2}));
    OrbitExtremes e = orbit_extremes(rho.spectrum(), sigma.spectrum());
    EXPECT_NEAR(relative_entropy_quantum(rho, sigma).bits(), e.min_value, 1e-10);
}

TEST(OrbitVerify, EqualStatesHaveZeroMinimum) {
    std::mt19937_64 rng(43);
    DensityMatrix rho = random_full_rank_state(3, rng);
    OrbitIntervalReport r = verify_orbit_interval(rho, rho, 500, rng);
    EXPECT_NEAR(r.analytic.min_value, 0, 1e-10);
    EXPECT_EQ(r.violations, 0u);
    EXPECT_GE(r.observed_min, -1e-10);
    EXPECT_NEAR(relative_entropy_quantum(rho, rho).bits(), 0, 1e-10);
}

TEST(OrbitVerifyProperty, ContainmentAndAttainment) {
    std::mt19937_64 rng(44);
    for (int t = 0; t < 60; t++) {
        size_t d = 2 + t % 3;
        DensityMatrix rho(sample_random_density(d, rng));
        DensityMatrix sigma = random_full_rank_state(d, rng);
        OrbitIntervalReport r = verify_orbit_interval(rho, sigma, 300, rng);
        EXPECT_EQ(r.violations, 0u);
        EXPECT_LE(r.min_attainment_error, 1e-9);
        EXPECT_LE(r.max_attainment_error, 1e-9);
        EXPECT_GE(r.observed_min, r.analytic.min_value - 1e-9);
        EXPECT_LE(r.observed_max, r.analytic.max_value + 1e-9);
    }
}

TEST(OrbitSandwichProperty, StateValueLiesInInterval) {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 10000; t++) {
        size_t d = 2 + t % 3;
        DensityMatrix rho(sample_random_density(d, rng));
        DensityMatrix sigma = random_full_rank_state(d, rng);
        OrbitExtremes e = orbit_extremes(rho.spectrum(), sigma.spectrum());
        double s = relative_entropy_quantum(rho, sigma).bits();
        ASSERT_GE(s, e.min_value - 1e-9);
        ASSERT_LE(s, e.max_value + 1e-9);
    }
}

TEST(AlignedUnitary, IsUnitaryAndCommutes) {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 100; t++) {
        size_t d = 2 + t % 3;
        DensityMatrix rho(sample_random_density(d, rng));
        DensityMatrix sigma = random_full_rank_state(d, rng);
        for (bool maximize : {false, true}) {
            ComplexMatrix u = aligned_unitary(rho, sigma, maximize);
            EXPECT_LT(unitarity_defect(u), 1e-12);
            EXPECT_LT(commutator(sigma.matrix(), conjugate_by(u, rho.matrix())).frobenius_norm(), 1e-10);
        }
    }
}
