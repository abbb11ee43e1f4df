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

#include "relent/unitary_opt.h"

#include <algorithm>
#include <cmath>

namespace relent {

namespace {

ComplexMatrix skew_part(const ComplexMatrix &m) {
    return 0.5 * (m - m.adjoint());
}

ComplexMatrix traceless(ComplexMatrix m) {
    Complex shift = m.trace() / static_cast<double>(m.rows());
    for (size_t k = 0; k < m.rows(); k++) {
        m(k, k) -= shift;
    }
    return m;
}

// Point on the search manifold plus the pieces needed to move it.
struct SearchPoint {
    ComplexMatrix a;  // full unitary, or U_A for local runs
    ComplexMatrix b;  // U_B for local runs, empty otherwise

    ComplexMatrix unitary() const { return b.rows() == 0 ? a : kron(a, b); }
};

struct Direction {
    ComplexMatrix a;
    ComplexMatrix b;
    double norm = 0;
};

Direction tangent_gradient(const OrbitObjective &obj, const SearchPoint &p, OptManifold manifold) {
    ComplexMatrix m = skew_part(obj.gradient(p.unitary()));
    if (manifold == OptManifold::Full) {
        double n = m.frobenius_norm();
        return Direction{std::move(m), {}, n};
    }
    ComplexMatrix ga = traceless(partial_trace(m, 2, 2, Subsystem::A));
    ComplexMatrix gb = traceless(partial_trace(m, 2, 2, Subsystem::B));
    double n = std::hypot(ga.frobenius_norm(), gb.frobenius_norm());
    return Direction{std::move(ga), std::move(gb), n};
}

// exp(scale * dir) applied on the left of each factor.
SearchPoint retract(const SearchPoint &p, const Direction &dir, double scale) {
    SearchPoint out;
    out.a = expm_skew_hermitian(Complex(scale) * dir.a) * p.a;
    if (p.b.rows() != 0) {
        out.b = expm_skew_hermitian(Complex(scale) * dir.b) * p.b;
    }
    return out;
}

double point_unitarity_defect(const SearchPoint &p) {
    double d = unitarity_defect(p.a);
    if (p.b.rows() != 0) {
        d = std::max(d, unitarity_defect(p.b));
    }
    return d;
}

constexpr double kMonotoneSlack = 1e-12;
constexpr double kArmijo = 1e-4;
constexpr double kResolvable = 1e-13;

OptimizerTrace run_search(const OrbitObjective &obj, SearchPoint point, const OptimizerConfig &config) {
    config.validate();
    double sense = config.mode == OptMode::Maximize ? 1.0 : -1.0;
    OptimizerTrace trace;
    double f = obj.value(point.unitary());
    double trial = config.step_size;
    trace.max_unitarity_defect = point_unitarity_defect(point);

    for (int it = 0;; it++) {
        Direction g = tangent_gradient(obj, point, config.manifold);
        trace.iterates.push_back({it, f, g.norm});
        if (g.norm <= config.grad_norm_tol) {
            trace.converged = true;
            break;
        }
        if (it >= config.max_iters) {
            break;
        }
        // Tr(K M) is maximized over unit skew-Hermitian K by K = -M / ||M||.
        bool accepted = false;
        double step = trial;
        while (step >= config.min_step) {
            SearchPoint candidate = retract(point, g, -sense * step);
            double fc = obj.value(candidate.unitary());
            // Below the resolvable gain a step is judged by the tangent-gradient
            // norm, and f may slip by at most kMonotoneSlack.
            double expected = step * g.norm * g.norm;
            bool improves;
            if (expected > kResolvable * std::max(1.0, std::abs(f))) {
                improves = sense * (fc - f) > kArmijo * expected;
            } else {
                improves = sense * (fc - f) >= -kMonotoneSlack &&
                           tangent_gradient(obj, candidate, config.manifold).norm < g.norm;
            }
            if (improves) {
                point = std::move(candidate);
                f = fc;
                accepted = true;
                trial = std::min(2 * step, 8 * config.step_size);
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            trace.stalled = true;
            break;
        }
        trace.max_unitarity_defect = std::max(trace.max_unitarity_defect, point_unitarity_defect(point));
    }

    trace.final_unitary = point.unitary();
    if (point.b.rows() != 0) {
        trace.final_a = point.a;
        trace.final_b = point.b;
    }
    return trace;
}

bool better(const OptimizerTrace &x, const OptimizerTrace &y, OptMode mode) {
    return mode == OptMode::Maximize ? x.final_objective() > y.final_objective()
                                     : x.final_objective() < y.final_objective();
}

}  // namespace

void OptimizerConfig::validate() const {
    if (!(step_size > 0) || !(grad_norm_tol > 0) || !(fd_epsilon > 0) || !(min_step > 0) || max_iters < 1) {
        throw DomainError("OptimizerConfig: step_size, grad_norm_tol, fd_epsilon must be > 0 and max_iters >= 1");
    }
}

OrbitObjective::OrbitObjective(const DensityMatrix &rho, const DensityMatrix &sigma)
    : rho_(rho), sigma_(sigma), log_sigma_(matrix_log2(sigma.matrix())), neg_entropy_rho_(-von_neumann_entropy(rho)) {
    if (rho.dim() != sigma.dim()) {
        throw DomainError("OrbitObjective: dimension mismatch");
    }
}

double OrbitObjective::value(const ComplexMatrix &u) const {
    ComplexMatrix rotated = conjugate_by(u, rho_.matrix());
    double cross = 0;
    size_t d = rotated.rows();
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            cross += (rotated(r, c) * log_sigma_(c, r)).real();
        }
    }
    return neg_entropy_rho_ - cross;
}

ComplexMatrix OrbitObjective::gradient(const ComplexMatrix &u) const {
    return commutator(log_sigma_, conjugate_by(u, rho_.matrix()));
}

ComplexMatrix riemannian_gradient(const ComplexMatrix &u, const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (u.rows() != rho.dim() || !u.is_square()) {
        throw DomainError("riemannian_gradient: unitary has the wrong shape");
    }
    if (unitarity_defect(u) > 1e-9) {
        throw DomainError("riemannian_gradient: U is not unitary within 1e-9");
    }
    return OrbitObjective(rho, sigma).gradient(u);
}

OptimizerTrace optimize_full(const DensityMatrix &rho, const DensityMatrix &sigma, const OptimizerConfig &config,
                             std::mt19937_64 &rng) {
    OrbitObjective obj(rho, sigma);
    OptimizerConfig cfg = config;
    cfg.manifold = OptManifold::Full;
    return run_search(obj, SearchPoint{sample_haar_unitary(rho.dim(), rng), {}}, cfg);
}

OptimizerTrace optimize_local(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab,
                              const OptimizerConfig &config, std::mt19937_64 &rng) {
    if (rho_ab.dim() != 4) {
        throw DomainError("optimize_local: expected two-qubit states");
    }
    OrbitObjective obj(rho_ab, sigma_ab);
    OptimizerConfig cfg = config;
    cfg.manifold = OptManifold::LocalProduct;
    ComplexMatrix ua = sample_haar_unitary(2, rng);
    ComplexMatrix ub = sample_haar_unitary(2, rng);
    return run_search(obj, SearchPoint{std::move(ua), std::move(ub)}, cfg);
}

OptimizerTrace optimize_local_multistart(const DensityMatrix &rho_ab, const DensityMatrix &sigma_ab,
                                         const OptimizerConfig &config, std::mt19937_64 &rng, int starts) {
    OptimizerTrace best = optimize_local(rho_ab, sigma_ab, config, rng);
    for (int k = 1; k < starts; k++) {
        OptimizerTrace t = optimize_local(rho_ab, sigma_ab, config, rng);
        if (better(t, best, config.mode)) {
            best = std::move(t);
        }
    }
    return best;
}

OptimizerTrace optimize_full_with_restarts(const DensityMatrix &rho, const DensityMatrix &sigma,
                                           const OptimizerConfig &config, std::mt19937_64 &rng, int restarts) {
    OptimizerTrace best = optimize_full(rho, sigma, config, rng);
    for (int k = 1; k < restarts && !best.converged; k++) {
        OptimizerTrace t = optimize_full(rho, sigma, config, rng);
        if (t.converged || better(t, best, config.mode)) {
            best = std::move(t);
        }
    }
    return best;
}

}  // namespace relent
