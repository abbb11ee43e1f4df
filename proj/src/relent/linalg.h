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

#ifndef RELENT_LINALG_H
#define RELENT_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace relent {

using Complex = std::complex<double>;

/// Raised when an operation's mathematical precondition does not hold
/// (non-square input, dimension mismatch, non-Hermitian matrix, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by matrix functions that need a strictly positive spectrum.
struct SingularityError : DomainError {
    using DomainError::DomainError;
};

/// Dense row-major complex matrix. Intended for the tiny dimensions (<= 8)
/// that two-qubit work needs; nothing here is blocked or vectorized.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix zeros(size_t rows, size_t cols);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix diagonal(std::initializer_list<double> values);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const Complex> entries() const { return entries_; }

    Complex &operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// u * m * u^dagger.
ComplexMatrix conjugate_by(const ComplexMatrix &u, const ComplexMatrix &m);

/// ||m - m^dagger||_F.
double hermiticity_defect(const ComplexMatrix &m);

/// ||u^dagger u - I||_F.
double unitarity_defect(const ComplexMatrix &u);

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues are sorted
/// non-increasing and the columns of `vectors` follow the same order.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;

    /// V diag(values) V^dagger.
    ComplexMatrix reconstruct() const;
};

/// Default relative Hermiticity tolerance accepted by `eig_hermitian`.
inline constexpr double kHermitianTol = 1e-10;

/// Cyclic complex Jacobi. The input is symmetrized to (m + m^dagger)/2
/// before the sweeps; iteration stops once the off-diagonal Frobenius norm
/// drops to 1e-14 * ||m||_F or after 100 sweeps.
HermitianEigen eig_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);

/// Eigenvalues only, non-increasing.
std::vector<double> eigenvalues_hermitian(const ComplexMatrix &m, double tol = kHermitianTol);

/// V diag(log2 lambda) V^dagger. Throws SingularityError if any eigenvalue
/// is <= eigen_tol.
ComplexMatrix matrix_log2(const ComplexMatrix &m, double eigen_tol = 1e-12);

/// exp(k) for skew-Hermitian k, computed from the eigen-decomposition of
/// the Hermitian matrix i*k.
ComplexMatrix expm_skew_hermitian(const ComplexMatrix &k);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

enum class Subsystem { A, B };

/// Reduced matrix on `keep` of an operator on C^dim_a (x) C^dim_b.
ComplexMatrix partial_trace(const ComplexMatrix &m, size_t dim_a, size_t dim_b, Subsystem keep);

/// Thin QR by modified Gram-Schmidt with one re-orthogonalization pass.
/// R has a real non-negative diagonal.
struct QrResult {
    ComplexMatrix q;
    ComplexMatrix r;
};
QrResult qr_decompose(const ComplexMatrix &m);

/// Matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix sample_ginibre(size_t rows, size_t cols, std::mt19937_64 &rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the diagonal of R
/// rotated to the positive reals.
ComplexMatrix sample_haar_unitary(size_t dim, std::mt19937_64 &rng);

/// G G^dagger / Tr(G G^dagger) for a square Ginibre G (the induced measure
/// with no ancilla), which is full rank with probability one.
ComplexMatrix sample_random_density(size_t dim, std::mt19937_64 &rng);

std::string to_string(const ComplexMatrix &m);

}  // namespace relent

#endif
