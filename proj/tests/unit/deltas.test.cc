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

#include <gtest/gtest.h>

#include "test_util.h"

using namespace relent;
using relent::testing::kl_bits;
using relent::testing::random_full_rank_state;

namespace {

QubitMarginTriple triple(std::vector<double> joint, double a, double b) { return {Spectrum(std::move(joint)), a, b}; }

// Independent evaluation of the five spectral differences. Joint spectra
// are passed in descending order; a margin m has descending spectrum
// [1 - m, m] and ascending spectrum [m, 1 - m].
struct Oracle {
    double dmin, dmax, dmix, d, dbar;
};

Oracle oracle(const std::vector<double> &l, double la, double lb, const std::vector<double> &m, double ma, double mb) {
    std::vector<double> m_up(m.rbegin(), m.rend());
    auto dn = [](double x) { return std::vector<double>{1 - x, x}; };
    auto up = [](double x) { return std::vector<double>{x, 1 - x}; };
    double ab_dd = kl_bits(l, m), ab_du = kl_bits(l, m_up);
    double a_dd = kl_bits(dn(la), dn(ma)), a_du = kl_bits(dn(la), up(ma));
    double b_dd = kl_bits(dn(lb), dn(mb)), b_du = kl_bits(dn(lb), up(mb));
    return {ab_dd - a_dd - b_dd, ab_du - a_du - b_du, ab_du - a_du - b_dd, ab_du - a_dd - b_dd, ab_dd - a_du - b_du};
}

void expect_matches(const DeltaReport &r, const Oracle &o, double tol) {
    EXPECT_NEAR(r.delta_min, o.dmin, tol);
    EXPECT_NEAR(r.delta_max, o.dmax, tol);
    EXPECT_NEAR(r.delta_mix, o.dmix, tol);
    EXPECT_NEAR(r.delta, o.d, tol);
    EXPECT_NEAR(r.delta_bar, o.dbar, tol);
}

}  // namespace

TEST(Deltas, MaximallyMixedIsZero) {
    auto t = triple({0.25, 0.25, 0.25, 0.25}, 0.5, 0.5);
    DeltaReport r = compute_deltas(t, t);
    EXPECT_NEAR(r.delta_min, 0, 1e-15);
    EXPECT_NEAR(r.delta_max, 0, 1e-15);
    EXPECT_NEAR(r.delta_mix, 0, 1e-15);
    EXPECT_NEAR(r.delta, 0, 1e-15);
    EXPECT_NEAR(r.delta_bar, 0, 1e-15);
}

TEST(Deltas, IdenticalTriplesGiveZeroDeltaMin) {
    auto t = triple({0.4, 0.3, 0.2, 0.1}, 0.3, 0.4);
    DeltaReport r = compute_deltas(t, t);
    EXPECT_NEAR(r.delta_min, 0, 1e-15);
    EXPECT_GE(r.delta, 0);
}

TEST(Deltas, DeltaMaxByHand) {
    auto t = triple({0.4, 0.3, 0.2, 0.1}, 0.3, 0.4);
    DeltaReport r = compute_deltas(t, t);
    double ab = 0.4 * std::log2(0.4 / 0.1) + 0.3 * std::log2(0.3 / 0.2) + 0.2 * std::log2(0.2 / 0.3) +
                0.1 * std::log2(0.1 / 0.4);
    double a = 0.7 * std::log2(0.7 / 0.3) + 0.3 * std::log2(0.3 / 0.7);
    double b = 0.6 * std::log2(0.6 / 0.4) + 0.4 * std::log2(0.4 / 0.6);
    EXPECT_NEAR(r.delta_max, ab - a - b, 1e-14);
}

TEST(Deltas, RejectsDegenerateSigma) {
    auto rho = triple({0.4, 0.3, 0.2, 0.1}, 0.3, 0.4);
    EXPECT_THROW(compute_deltas(rho, triple({0.5, 0.5, 0, 0}, 0.5, 0.5)), DomainError);
    EXPECT_THROW(compute_deltas(rho, triple({0.4, 0.3, 0.2, 0.1}, 0.0, 0.4)), DomainError);
}

TEST(Deltas, PureMarginOnRhoSideIsFinite) {
    DeltaReport r = compute_deltas(triple({1, 0, 0, 0}, 0, 0), triple({0.4, 0.3, 0.2, 0.1}, 0.3, 0.4));
    EXPECT_TRUE(std::isfinite(r.delta));
}

TEST(DeltasProperty, MatchesOracleAndOrdering) {
    std::mt19937_64 rng(51);
    int mix_nonneg = 0;
    for (int t = 0; t < 100000; t++) {
        Spectrum lj = sample_joint_spectrum(rng, false);
        auto [la, lb] = sample_admissible_margins(lj, rng);
        Spectrum mj = sample_joint_spectrum(rng, true);
        auto [ma, mb] = sample_admissible_margins(mj, rng);
        if (ma <= 0 || mb <= 0) {
            continue;
        }
        DeltaReport r = compute_deltas({lj, la, lb}, {mj, ma, mb});
        if (t % 10 == 0) {
            expect_matches(r, oracle(lj.sorted_desc(), la, lb, mj.sorted_desc(), ma, mb), 1e-12);
        }
        ASSERT_EQ(ordering_violations(r), 0) << "sample " << t;
        if (r.delta_mix >= 0) {
            mix_nonneg++;
            ASSERT_GE(r.delta, 0);
        }
    }
    EXPECT_GT(mix_nonneg, 0);
}

TEST(DeltaS, ZeroForEqualAndProductStates) {
    std::mt19937_64 rng(52);
    for (int t = 0; t < 200; t++) {
        DensityMatrix rho = random_full_rank_state(4, rng);
        EXPECT_NEAR(delta_s(rho, rho).value, 0, 1e-10);

        DensityMatrix ra = random_full_rank_state(2, rng), rb = random_full_rank_state(2, rng);
        DensityMatrix sa = random_full_rank_state(2, rng), sb = random_full_rank_state(2, rng);
        DeltaS ds = delta_s(DensityMatrix(kron(ra.matrix(), rb.matrix())), DensityMatrix(kron(sa.matrix(), sb.matrix())));
        EXPECT_FALSE(ds.support_violation);
        EXPECT_NEAR(ds.value, 0, 1e-9);
    }
}

TEST(DeltaS, SupportViolationIsFlagged) {
    ComplexMatrix bell(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    DeltaS ds = delta_s(DensityMatrix::maximally_mixed(4), DensityMatrix(bell));
    EXPECT_TRUE(ds.support_violation);
    EXPECT_TRUE(std::isinf(ds.value));
}

TEST(SandwichProperty, HoldsOnRandomStatePairs) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 10000; t++) {
        DensityMatrix rho(sample_random_density(4, rng));
        DensityMatrix sigma = random_full_rank_state(4, rng);
        DeltaReport r = compute_state_deltas(rho, sigma);
        ASSERT_TRUE(r.delta_s.has_value());
        ASSERT_TRUE(sandwich_holds(r)) << "sample " << t << " delta_bar=" << r.delta_bar << " delta_s=" << *r.delta_s
                                       << " delta=" << r.delta;
        ASSERT_EQ(ordering_violations(r), 0);
    }
}

TEST(SandwichProperty, MaximallyMixedSigmaIsSubadditive) {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 2000; t++) {
        DensityMatrix rho(sample_random_density(4, rng));
        EXPECT_GE(delta_s(rho, DensityMatrix::maximally_mixed(4)).value, -1e-10);
    }
}
