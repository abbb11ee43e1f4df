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

#include "relent/entropy.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

namespace relent {

namespace {

std::atomic<uint64_t> clamp_tally{0};

double clamp_roundoff(double v) {
    if (v < 0 && v >= -kRoundoffClamp) {
        clamp_tally.fetch_add(1, std::memory_order_relaxed);
        return 0;
    }
    return v;
}

double xlog2x(double x) {
    return x == 0 ? 0 : x * std::log2(x);
}

}  // namespace

Spectrum::Spectrum(std::vector<double> probs, double sum_tol) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw DomainError("Spectrum: empty probability vector");
    }
    for (double &p : probs_) {
        if (!std::isfinite(p) || p < -1e-12) {
            throw DomainError("Spectrum: entry " + std::to_string(p) + " is not a probability");
        }
        p = std::max(p, 0.0);
    }
    double total = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(total - 1) > sum_tol) {
        throw DomainError("Spectrum: entries sum to " + std::to_string(total) + ", not 1");
    }
    desc_ = probs_;
    std::sort(desc_.begin(), desc_.end(), std::greater<>());
}

std::vector<double> Spectrum::sorted_asc() const {
    return {desc_.rbegin(), desc_.rend()};
}

DensityMatrix::DensityMatrix(const ComplexMatrix &m, double tol) {
    if (!m.is_square() || m.rows() == 0) {
        throw DomainError("DensityMatrix: matrix must be square and non-empty");
    }
    double defect = hermiticity_defect(m);
    if (defect > kHermitianTol * std::max(1.0, m.frobenius_norm())) {
        throw DomainError("DensityMatrix: matrix is not Hermitian");
    }
    m_ = 0.5 * (m + m.adjoint());
    double t = m_.trace().real();
    if (std::abs(t - 1) > tol) {
        throw DomainError("DensityMatrix: trace is " + std::to_string(t) + ", not 1");
    }
    double low = eigenvalues_hermitian(m_).back();
    if (low < -tol) {
        throw DomainError("DensityMatrix: negative eigenvalue " + std::to_string(low));
    }
}

DensityMatrix DensityMatrix::maximally_mixed(size_t dim) {
    ComplexMatrix m = ComplexMatrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> ket) {
    double norm = 0;
    for (const auto &z : ket) {
        norm += std::norm(z);
    }
    ComplexMatrix m(ket.size(), ket.size());
    for (size_t r = 0; r < ket.size(); r++) {
        for (size_t c = 0; c < ket.size(); c++) {
            m(r, c) = ket[r] * std::conj(ket[c]) / norm;
        }
    }
    return DensityMatrix(m);
}

Spectrum DensityMatrix::spectrum() const {
    std::vector<double> values = eigenvalues_hermitian(m_);
    for (double &v : values) {
        v = std::max(v, 0.0);
    }
    return Spectrum(std::move(values));
}

double Divergence::as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : bits_;
}

double shannon_entropy(const Spectrum &p) {
    double h = 0;
    for (double x : p.probs()) {
        h -= xlog2x(x);
    }
    return std::max(h, 0.0);
}

Divergence relative_entropy_classical(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw DomainError("relative_entropy_classical: dimension mismatch (" + std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()) + ")");
    }
    double s = 0;
    for (size_t i = 0; i < p.size(); i++) {
        if (p[i] == 0) {
            continue;
        }
        if (q[i] <= 0) {
            return Divergence::infinite();
        }
        s += p[i] * (std::log2(p[i]) - std::log2(q[i]));
    }
    return Divergence::finite(clamp_roundoff(s));
}

Divergence relative_entropy_classical(const Spectrum &p, const Spectrum &q) {
    return relative_entropy_classical(p.probs(), q.probs());
}

double von_neumann_entropy(const DensityMatrix &rho) {
    return shannon_entropy(rho.spectrum());
}

Divergence relative_entropy_quantum(const DensityMatrix &rho, const DensityMatrix &sigma, double support_tol) {
    if (rho.dim() != sigma.dim()) {
        throw DomainError("relative_entropy_quantum: dimension mismatch (" + std::to_string(rho.dim()) + " vs " +
                          std::to_string(sigma.dim()) + ")");
    }
    size_t d = rho.dim();
    HermitianEigen er = eig_hermitian(rho.matrix());
    HermitianEigen es = eig_hermitian(sigma.matrix());

    // Support test: weight of each significant rho eigenvector in ker(sigma).
    for (size_t i = 0; i < d; i++) {
        if (er.values[i] <= support_tol) {
            continue;
        }
        double leak = 0;
        for (size_t j = 0; j < d; j++) {
            if (es.values[j] > support_tol) {
                continue;
            }
            Complex overlap = 0;
            for (size_t r = 0; r < d; r++) {
                overlap += std::conj(es.vectors(r, j)) * er.vectors(r, i);
            }
            leak += std::norm(overlap);
        }
        if (leak > support_tol) {
            return Divergence::infinite();
        }
    }

    double tr_rho_log_rho = 0;
    for (double x : er.values) {
        tr_rho_log_rho += xlog2x(std::max(x, 0.0));
    }
    // Tr rho log sigma = sum_j log2(mu_j) <w_j|rho|w_j> over supp(sigma).
    double tr_rho_log_sigma = 0;
    const ComplexMatrix &m = rho.matrix();
    for (size_t j = 0; j < d; j++) {
        if (es.values[j] <= support_tol) {
            continue;
        }
        Complex expect = 0;
        for (size_t r = 0; r < d; r++) {
            Complex row = 0;
            for (size_t c = 0; c < d; c++) {
                row += m(r, c) * es.vectors(c, j);
            }
            expect += std::conj(es.vectors(r, j)) * row;
        }
        tr_rho_log_sigma += std::log2(es.values[j]) * expect.real();
    }
    return Divergence::finite(clamp_roundoff(tr_rho_log_rho - tr_rho_log_sigma));
}

uint64_t roundoff_clamp_count() {
    return clamp_tally.load(std::memory_order_relaxed);
}

}  // namespace relent
