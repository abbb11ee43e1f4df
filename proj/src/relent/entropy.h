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

#ifndef RELENT_ENTROPY_H
#define RELENT_ENTROPY_H

#include <cstdint>
#include <vector>

#include "relent/linalg.h"

namespace relent {

/// A probability vector. Entries are kept in the order given; sorted views
/// are computed on construction. Entries in [-1e-12, 0) are clamped to 0.
class Spectrum {
   public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> probs, double sum_tol = 1e-10);

    size_t size() const { return probs_.size(); }
    const std::vector<double> &probs() const { return probs_; }
    /// Non-increasing view (lambda-down).
    const std::vector<double> &sorted_desc() const { return desc_; }
    /// Non-decreasing view (lambda-up).
    std::vector<double> sorted_asc() const;
    double min() const { return desc_.empty() ? 0 : desc_.back(); }

   private:
    std::vector<double> probs_;
    std::vector<double> desc_;
};

/// A Hermitian, positive semidefinite, unit-trace matrix.
class DensityMatrix {
   public:
    /// Validates and symmetrizes. Throws DomainError if `m` is not square,
    /// not Hermitian (relative tol), has trace off 1 by more than `tol`, or
    /// has an eigenvalue below -tol.
    explicit DensityMatrix(const ComplexMatrix &m, double tol = 1e-10);

    static DensityMatrix maximally_mixed(size_t dim);
    static DensityMatrix pure(std::span<const Complex> ket);

    size_t dim() const { return m_.rows(); }
    const ComplexMatrix &matrix() const { return m_; }
    /// Eigenvalues as a spectrum (tiny negative round-off clamped).
    Spectrum spectrum() const;

   private:
    ComplexMatrix m_;
};

/// Relative entropy value in bits, with a distinct +infinity for support
/// violations so aggregations can count them apart from large finite values.
class Divergence {
   public:
    static Divergence finite(double bits) { return Divergence(bits, false); }
    static Divergence infinite() { return Divergence(0, true); }

    bool is_infinite() const { return infinite_; }
    /// Only meaningful when finite.
    double bits() const { return bits_; }
    /// bits(), or +inf.
    double as_double() const;

   private:
    Divergence(double bits, bool inf) : bits_(bits), infinite_(inf) {}
    double bits_;
    bool infinite_;
};

inline constexpr double kSupportTol = 1e-12;
inline constexpr double kRoundoffClamp = 1e-10;

/// -sum p log2 p with 0 log 0 = 0.
double shannon_entropy(const Spectrum &p);

/// sum p_i (log2 p_i - log2 q_i); terms with p_i = 0 vanish, p_i > 0 with
/// q_i = 0 gives +infinity. Order-sensitive: entries are paired by index.
Divergence relative_entropy_classical(std::span<const double> p, std::span<const double> q);
Divergence relative_entropy_classical(const Spectrum &p, const Spectrum &q);

double von_neumann_entropy(const DensityMatrix &rho);

/// Tr rho (log2 rho - log2 sigma) on supp(sigma), or +infinity when an
/// eigenvector of rho with weight > support_tol leaks more than support_tol
/// into ker(sigma).
Divergence relative_entropy_quantum(const DensityMatrix &rho, const DensityMatrix &sigma,
                                    double support_tol = kSupportTol);

/// Number of results in [-1e-10, 0) clamped to zero since process start.
uint64_t roundoff_clamp_count();

}  // namespace relent

#endif
