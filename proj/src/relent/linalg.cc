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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace relent {

namespace {

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DomainError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                          std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                          std::to_string(b.cols()));
    }
}

void require_square(const ComplexMatrix &m, const char *op) {
    if (!m.is_square()) {
        throw DomainError(std::string(op) + ": matrix is not square (" + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ")");
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary J = D R, where D = diag(1, e^{-i phi}) on
// (p, q) makes the pivot real and R is the classical real Jacobi rotation.
// Applies a <- J^dagger a J and v <- v J.
void jacobi_rotate(ComplexMatrix &a, ComplexMatrix &v, size_t p, size_t q) {
    Complex apq = a(p, q);
    double r = std::abs(apq);
    if (r == 0) {
        return;
    }
    Complex phase = apq / r;
    double app = a(p, p).real();
    double aqq = a(q, q).real();
    double theta = (aqq - app) / (2 * r);
    double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    double c = 1 / std::sqrt(t * t + 1);
    double s = t * c;

    Complex jpp = c;
    Complex jpq = s;
    Complex jqp = -s * std::conj(phase);
    Complex jqq = c * std::conj(phase);

    size_t n = a.rows();
    for (size_t k = 0; k < n; k++) {
        Complex akp = a(k, p);
        Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (size_t k = 0; k < n; k++) {
        Complex apk = a(p, k);
        Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
    for (size_t k = 0; k < n; k++) {
        Complex vkp = v(k, p);
        Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DomainError("ComplexMatrix: entry count " + std::to_string(entries_.size()) + " != " +
                          std::to_string(rows) + "*" + std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DomainError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim, dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(size_t rows, size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> values) {
    return diagonal(std::span<const double>(values.begin(), values.size()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    require_square(*this, "trace");
    Complex t = 0;
    for (size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &z : entries_) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DomainError("operator*: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                          std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex ark = a(r, k);
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

ComplexMatrix conjugate_by(const ComplexMatrix &u, const ComplexMatrix &m) {
    return u * m * u.adjoint();
}

double hermiticity_defect(const ComplexMatrix &m) {
    return (m - m.adjoint()).frobenius_norm();
}

double unitarity_defect(const ComplexMatrix &u) {
    return (u.adjoint() * u - ComplexMatrix::identity(u.cols())).frobenius_norm();
}

ComplexMatrix HermitianEigen::reconstruct() const {
    ComplexMatrix scaled = vectors;
    for (size_t r = 0; r < scaled.rows(); r++) {
        for (size_t c = 0; c < scaled.cols(); c++) {
            scaled(r, c) *= values[c];
        }
    }
    return scaled * vectors.adjoint();
}

HermitianEigen eig_hermitian(const ComplexMatrix &m, double tol) {
    require_square(m, "eig_hermitian");
    double norm = m.frobenius_norm();
    double defect = hermiticity_defect(m);
    if (defect > tol * norm) {
        throw DomainError("eig_hermitian: matrix is not Hermitian (||m - m^dagger||_F = " + std::to_string(defect) +
                          ", ||m||_F = " + std::to_string(norm) + ")");
    }

    size_t n = m.rows();
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::identity(n);
    double threshold = 1e-14 * norm;
    for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > threshold; sweep++) {
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                jacobi_rotate(a, v, p, q);
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() > a(y, y).real();
    });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> eigenvalues_hermitian(const ComplexMatrix &m, double tol) {
    return eig_hermitian(m, tol).values;
}

ComplexMatrix matrix_log2(const ComplexMatrix &m, double eigen_tol) {
    HermitianEigen e = eig_hermitian(m);
    for (double x : e.values) {
        if (x <= eigen_tol) {
            throw SingularityError("matrix_log2: eigenvalue " + std::to_string(x) + " is not above " +
                                   std::to_string(eigen_tol));
        }
    }
    for (double &x : e.values) {
        x = std::log2(x);
    }
    return e.reconstruct();
}

ComplexMatrix expm_skew_hermitian(const ComplexMatrix &k) {
    require_square(k, "expm_skew_hermitian");
    double defect = (k + k.adjoint()).frobenius_norm();
    if (defect > kHermitianTol * std::max(1.0, k.frobenius_norm())) {
        throw DomainError("expm_skew_hermitian: argument is not skew-Hermitian");
    }
    // k = -i h with h = i k Hermitian, so exp(k) = V diag(e^{-i theta}) V^dagger.
    HermitianEigen e = eig_hermitian(Complex(0, 1) * k, 1e-8);
    ComplexMatrix scaled = e.vectors;
    for (size_t c = 0; c < scaled.cols(); c++) {
        Complex phase = std::polar(1.0, -e.values[c]);
        for (size_t r = 0; r < scaled.rows(); r++) {
            scaled(r, c) *= phase;
        }
    }
    return scaled * e.vectors.adjoint();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, size_t dim_a, size_t dim_b, Subsystem keep) {
    size_t d = dim_a * dim_b;
    if (dim_a == 0 || dim_b == 0 || m.rows() != d || m.cols() != d) {
        throw DomainError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (keep == Subsystem::A) {
        ComplexMatrix out(dim_a, dim_a);
        for (size_t i = 0; i < dim_a; i++) {
            for (size_t j = 0; j < dim_a; j++) {
                Complex s = 0;
                for (size_t k = 0; k < dim_b; k++) {
                    s += m(i * dim_b + k, j * dim_b + k);
                }
                out(i, j) = s;
            }
        }
        return out;
    }
    ComplexMatrix out(dim_b, dim_b);
    for (size_t i = 0; i < dim_b; i++) {
        for (size_t j = 0; j < dim_b; j++) {
            Complex s = 0;
            for (size_t k = 0; k < dim_a; k++) {
                s += m(k * dim_b + i, k * dim_b + j);
            }
            out(i, j) = s;
        }
    }
    return out;
}

QrResult qr_decompose(const ComplexMatrix &m) {
    size_t rows = m.rows();
    size_t cols = m.cols();
    QrResult out{m, ComplexMatrix(cols, cols)};
    ComplexMatrix &q = out.q;
    for (size_t j = 0; j < cols; j++) {
        for (int pass = 0; pass < 2; pass++) {
            for (size_t i = 0; i < j; i++) {
                Complex dot = 0;
                for (size_t r = 0; r < rows; r++) {
                    dot += std::conj(q(r, i)) * q(r, j);
                }
                for (size_t r = 0; r < rows; r++) {
                    q(r, j) -= dot * q(r, i);
                }
                out.r(i, j) += dot;
            }
        }
        double norm = 0;
        for (size_t r = 0; r < rows; r++) {
            norm += std::norm(q(r, j));
        }
        norm = std::sqrt(norm);
        if (norm == 0) {
            throw DomainError("qr_decompose: rank-deficient input");
        }
        for (size_t r = 0; r < rows; r++) {
            q(r, j) /= norm;
        }
        out.r(j, j) = norm;
    }
    return out;
}

ComplexMatrix sample_ginibre(size_t rows, size_t cols, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    ComplexMatrix g(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            double re = gauss(rng);
            double im = gauss(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

ComplexMatrix sample_haar_unitary(size_t dim, std::mt19937_64 &rng) {
    if (dim == 0) {
        throw DomainError("sample_haar_unitary: dim must be >= 1");
    }
    QrResult f = qr_decompose(sample_ginibre(dim, dim, rng));
    for (size_t c = 0; c < dim; c++) {
        Complex d = f.r(c, c);
        Complex phase = d / std::abs(d);
        for (size_t r = 0; r < dim; r++) {
            f.q(r, c) *= phase;
        }
    }
    return f.q;
}

ComplexMatrix sample_random_density(size_t dim, std::mt19937_64 &rng) {
    if (dim == 0) {
        throw DomainError("sample_random_density: dim must be >= 1");
    }
    ComplexMatrix g = sample_ginibre(dim, dim, rng);
    ComplexMatrix w = g * g.adjoint();
    double t = w.trace().real();
    w *= 1 / t;
    // Exact Hermiticity; products leave ~1e-17 asymmetry.
    return 0.5 * (w + w.adjoint());
}

std::string to_string(const ComplexMatrix &m) {
    std::ostringstream out;
    out.precision(6);
    for (size_t r = 0; r < m.rows(); r++) {
        out << (r == 0 ? "[" : " ");
        for (size_t c = 0; c < m.cols(); c++) {
            out << (c ? ", " : "") << m(r, c);
        }
        out << (r + 1 == m.rows() ? "]" : "\n");
    }
    return out.str();
}

}  // namespace relent
