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

#ifndef RELENT_UNITARY_OPT_H
#define RELENT_UNITARY_OPT_H

#include <random>
#include <vector>

#include "relent/entropy.h"

namespace relent {

enum class OptMode { Maximize, Minimize };
enum class OptManifold { Full, LocalProduct };

struct OptimizerConfig {
    OptMode mode = OptMode::Maximize;
    OptManifold manifold = OptManifold::Full;
    double step_size = 0.1;
    int max_iters = 5000;
    double grad_norm_tol = 1e-9;
    double fd_epsilon = 1e-5;
    /// Trial steps below this are a stall.
    double min_step = 1e-12;

    void validate() const;
};

struct OptimizerIterate {
    int iteration = 0;
    double objective = 0;
    double grad_norm = 0;
};

struct OptimizerTrace {
    std::vector<OptimizerIterate> iterates;
    /// Full d x d unitary (U_A (x) U_B for local runs).
    ComplexMatrix final_unitary;
    /// Local runs only.
    ComplexMatrix final_a;
    ComplexMatrix final_b;
    bool converged = false;
    bool stalled = false;
    /// Largest ||U^dagger U - I||_F seen along accepted iterates.
    double max_unitarity_defect = 0;

    double final_objective() const { return iterates.empty() ? 0 : iterates.back().objective; }
    double final_grad_norm() const { return iterates.empty() ? 0 : iterates.back().grad_norm; }
};

/// f(U) = S(U rho U^dagger || sigma) for full-rank sigma, evaluated from
/// precomputed -S(rho) and log2 sigma.
class OrbitObjective {
   public:
    OrbitObjective(const DensityMatrix &rho, const DensityMatrix &sigma);

    double value(const ComplexMatrix &u) const;
    /// [log2 sigma, U rho U^dagger]; d/dt f(exp(tK) U) at t = 0 equals Tr(K M).
    ComplexMatrix gradient(const ComplexMatrix &u) const;

    const DensityMatrix &rho() const { return rho_; }
    const DensityMatrix &sigma() const { return sigma_; }
    const ComplexMatrix &log_sigma() const { return log_sigma_; }

   private:
    DensityMatrix rho_;
    DensityMatrix sigma_;
    ComplexMatrix log_sigma_;
    double neg_entropy_rho_;
};

/// M = [log2 sigma, U rho U^dagger] (skew-Hermitian). Throws DomainError if
/// sigma is rank deficient or U is not unitary within 1e-9.
ComplexMatrix riemannian_gradient(const ComplexMatrix &u, const DensityMatrix &rho, const DensityMatrix &sigma);

/// Gradient ascent/descent on U(d) with retraction U <- exp(-+ a M) U and a
/// halving/doubling step search. Starts from a Haar-random unitary drawn from `rng`.
OptimizerTrace optimize_full(const DensityMatrix &rho, const DensityMatrix &sigma, const OptimizerConfig &config,
                             std::mt19937_64 &rng);

/// Same problem restricted to U = U_A (x) U_B on two qubits. The local
/// gradient components are the partial traces of the full gradient.
OptimizerTrace optimize_local(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab,
                              const OptimizerConfig &config, std::mt19937_64 &rng);

/// Best of `starts` independent optimize_local runs.
OptimizerTrace optimize_local_multistart(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab,
                                         const OptimizerConfig &config, std::mt19937_64 &rng, int starts = 20);

/// Best of up to `restarts` optimize_full runs; stops early on convergence.
OptimizerTrace optimize_full_with_restarts(const DensityMatrix &rho, const DensityMatrix &sigma,
                                           const OptimizerConfig &config, std::mt19937_64 &rng, int restarts = 5);

}  // namespace relent

#endif
