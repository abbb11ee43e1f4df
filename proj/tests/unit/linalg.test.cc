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

#include "relent/linalg.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace relent;
using relent::testing::max_abs_diff;
using relent::testing::random_hermitian;

TEST(Eigen, DiagonalInputIsSortedDescending) {
    auto e = eig_hermitian(ComplexMatrix::diagonal({0.2, 0.5, 0.3}));
    ASSERT_EQ(e.values.size(), 3u);
    EXPECT_NEAR(e.values[0], 0.5, 1e-15);
    EXPECT_NEAR(e.values[1], 0.3, 1e-15);
    EXPECT_NEAR(e.values[2], 0.2, 1e-15);
}

TEST(Eigen, IdentityReconstructs) {
    auto e = eig_hermitian(ComplexMatrix::identity(2));
    EXPECT_NEAR(e.values[0], 1, 1e-15);
    EXPECT_NEAR(e.values[1], 1, 1e-15);
    EXPECT_LT(max_abs_diff(e.reconstruct(), ComplexMatrix::identity(2)), 1e-14);
}

TEST(Eigen, PauliY) {
    ComplexMatrix y{{0, Complex(0, -1)}, {Complex(0, 1), 0}};
    auto e = eig_hermitian(y);
    EXPECT_NEAR(e.values[0], 1, 1e-14);
    EXPECT_NEAR(e.values[1], -1, 1e-14);
    EXPECT_LT(max_abs_diff(e.reconstruct(), y), 1e-14);
}

TEST(Eigen, TwoByTwoClosedForm) {
    // [[a, b], [b*, c]] has eigenvalues (a+c)/2 +- sqrt(((a-c)/2)^2 + |b|^2).
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n(0, 1);
    for (int t = 0; t < 200; t++) {
        double a = n(rng), c = n(rng);
        Complex b(n(rng), n(rng));
        ComplexMatrix m{{a, b}, {std::conj(b), c}};
        double mid = (a + c) / 2, rad = std::sqrt((a - c) * (a - c) / 4 + std::norm(b));
        auto v = eigenvalues_hermitian(m);
        EXPECT_NEAR(v[0], mid + rad, 1e-12);
        EXPECT_NEAR(v[1], mid - rad, 1e-12);
    }
}

TEST(Eigen, RejectsNonHermitian) {
    ComplexMatrix m{{1, 2}, {0, 1}};
    EXPECT_THROW(eig_hermitian(m), DomainError);
}

TEST(EigenProperty, RoundTripOnRandomHermitian) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 1000; t++) {
        size_t dim = 2 + t % 7;
        ComplexMatrix h = random_hermitian(dim, rng);
        auto e = eig_hermitian(h);
        EXPECT_LT(max_abs_diff(e.reconstruct(), h), 1e-10 * std::max(1.0, h.frobenius_norm()));
        EXPECT_LT(unitarity_defect(e.vectors), 1e-12);
        for (size_t k = 1; k < dim; k++) {
            EXPECT_GE(e.values[k - 1], e.values[k]);
        }
    }
}

TEST(Log2, OfDiagonal) {
    ComplexMatrix l = matrix_log2(ComplexMatrix::diagonal({0.5, 0.25}));
    EXPECT_NEAR(l(0, 0).real(), -1, 1e-15);
    EXPECT_NEAR(l(1, 1).real(), -2, 1e-15);
    EXPECT_NEAR(std::abs(l(0, 1)), 0, 1e-15);
}

TEST(Log2, SingularThrows) {
    EXPECT_THROW(matrix_log2(ComplexMatrix::diagonal({1.0, 0.0})), SingularityError);
}

TEST(Log2Property, CommutesWithArgument) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; t++) {
        ComplexMatrix m = sample_random_density(2 + t % 3, rng);
        ComplexMatrix l = matrix_log2(m);
        EXPECT_LT(commutator(l, m).frobenius_norm(), 1e-11);
    }
}

TEST(Expm, OfPauliGenerator) {
    // exp(-i t X) = cos t I - i sin t X.
    double t = 0.7;
    ComplexMatrix k{{0, Complex(0, -t)}, {Complex(0, -t), 0}};
    ComplexMatrix u = expm_skew_hermitian(k);
    ComplexMatrix expect{{std::cos(t), Complex(0, -std::sin(t))}, {Complex(0, -std::sin(t)), std::cos(t)}};
    EXPECT_LT(max_abs_diff(u, expect), 1e-14);
}

TEST(ExpmProperty, IsUnitary) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; t++) {
        ComplexMatrix h = random_hermitian(2 + t % 4, rng);
        ComplexMatrix k = Complex(0, 1) * h;
        EXPECT_LT(unitarity_defect(expm_skew_hermitian(k)), 1e-12);
    }
}

TEST(Kron, Dimensions) {
    ComplexMatrix a = ComplexMatrix::identity(2);
    ComplexMatrix b = ComplexMatrix::diagonal({1.0, 2.0, 3.0});
    ComplexMatrix k = kron(a, b);
    EXPECT_EQ(k.rows(), 6u);
    EXPECT_EQ(k(4, 4), Complex(2));
}

TEST(PartialTraceProperty, InvertsKronOfStates) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; t++) {
        ComplexMatrix a = sample_random_density(2, rng);
        ComplexMatrix b = sample_random_density(2 + t % 2, rng);
        ComplexMatrix ab = kron(a, b);
        EXPECT_LT(max_abs_diff(partial_trace(ab, 2, b.rows(), Subsystem::A), a), 1e-14);
        EXPECT_LT(max_abs_diff(partial_trace(ab, 2, b.rows(), Subsystem::B), b), 1e-14);
    }
}

TEST(PartialTrace, BellStateMarginsAreMixed) {
    ComplexMatrix bell(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    ComplexMatrix half = ComplexMatrix::identity(2);
    half *= 0.5;
    EXPECT_LT(max_abs_diff(partial_trace(bell, 2, 2, Subsystem::A), half), 1e-15);
    EXPECT_LT(max_abs_diff(partial_trace(bell, 2, 2, Subsystem::B), half), 1e-15);
}

TEST(Qr, ReconstructsInput) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; t++) {
        ComplexMatrix g = sample_ginibre(4, 4, rng);
        QrResult qr = qr_decompose(g);
        EXPECT_LT(max_abs_diff(qr.q * qr.r, g), 1e-12);
        EXPECT_LT(unitarity_defect(qr.q), 1e-13);
    }
}

TEST(HaarProperty, FirstMomentsMatch) {
    std::mt19937_64 rng(9);
    const int n = 100000;
    double mean_abs2 = 0;
    Complex mean_trace = 0;
    for (int t = 0; t < n; t++) {
        ComplexMatrix u = sample_haar_unitary(4, rng);
        mean_abs2 += std::norm(u(0, 0));
        mean_trace += u.trace();
    }
    mean_abs2 /= n;
    mean_trace /= static_cast<double>(n);
    EXPECT_NEAR(mean_abs2, 0.25, 0.01);
    EXPECT_LT(std::abs(mean_trace), 0.02);
}

TEST(RandomDensity, IsValidState) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 500; t++) {
        ComplexMatrix m = sample_random_density(4, rng);
        EXPECT_NEAR(m.trace().real(), 1, 1e-13);
        EXPECT_LT(hermiticity_defect(m), 1e-14);
        EXPECT_GT(eigenvalues_hermitian(m).back(), -1e-14);
    }
}
