// Copyright 2026 The qlhv Authors
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

#include "qlhv/lhv.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qlhv {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

double condition9_rhs(double eta) { return (2.0 * eta - 1.0) / ((2.0 - eta) * eta * eta * eta); }

/// Hermitian basis whose trace functionals read off the real and imaginary
/// parts of every entry of a 4x4 Hermitian matrix.
const std::vector<HermitianMatrix> &two_qubit_basis() {
    static const std::vector<HermitianMatrix> basis = [] {
        std::vector<HermitianMatrix> out;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = i; j < 4; ++j) {
                ComplexMatrix re(4, 4);
                re(i, j) += 0.5;
                re(j, i) += 0.5;
                out.emplace_back(std::move(re));
                if (i != j) {
                    ComplexMatrix im(4, 4);
                    im(i, j) = Complex{0.0, 0.5};
                    im(j, i) = Complex{0.0, -0.5};
                    out.emplace_back(std::move(im));
                }
            }
        }
        return out;
    }();
    return basis;
}

HermitianMatrix scalar(double v) { return HermitianMatrix::diagonal({v}); }

}  // namespace

bool condition9(double theta, double eta) {
    theta = checked_schmidt_angle(theta);
    checked_visibility(eta);
    if (eta == 0.0) {
        return true;
    }
    const double c = std::cos(2.0 * theta);
    return c * c >= condition9_rhs(eta);
}

double condition9_boundary(double theta) {
    theta = checked_schmidt_angle(theta);
    const double c = std::cos(2.0 * theta);
    const double target = c * c;
    // rhs is 0 at eta = 1/2, 1 at eta = 1, and increasing in between.
    if (condition9_rhs(1.0) <= target) {
        return 1.0;
    }
    double lo = 0.5;
    double hi = 1.0;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (condition9_rhs(mid) <= target ? lo : hi) = mid;
    }
    return lo;
}

bool WitnessCheck::valid() const {
    return decomposition_error <= 1e-9 && trace_error <= 1e-9 && sigma_min_eigenvalue >= -1e-8 &&
           sigma_pt_min_eigenvalue >= -1e-8 && alpha >= 0.0;
}

WitnessCheck verify_witness(const DecompositionWitness &w) {
    WitnessCheck check;
    const HermitianMatrix target = rho_theta_eta(w.theta, w.eta).matrix();
    const HermitianMatrix rebuilt = w.alpha * werner(w.mu).matrix() + w.sigma;
    check.decomposition_error = max_abs_diff(target, rebuilt);
    check.sigma_min_eigenvalue = min_eigenvalue(w.sigma);
    check.sigma_pt_min_eigenvalue = min_eigenvalue(partial_transpose(w.sigma, Subsystem::B));
    check.trace_error = std::abs(w.sigma.trace() + w.alpha - 1.0);
    check.alpha = w.alpha;
    return check;
}

AnalyticDecomposition analytic_decomposition(double theta, double eta, double mu) {
    theta = checked_schmidt_angle(theta);
    checked_visibility(eta);
    if (!(mu > 0.0 && mu < 1.0)) {
        throw std::invalid_argument("analytic_decomposition: mu must lie in (0, 1)");
    }
    AnalyticDecomposition out;
    const double alpha = eta * std::sin(2.0 * theta) / mu;
    if (alpha > 1.0) {
        out.refusal = "alpha = " + std::to_string(alpha) + " exceeds 1";
        return out;
    }
    const HermitianMatrix sigma = rho_theta_eta(theta, eta).matrix() - alpha * werner(mu).matrix();
    if (off_diagonal_norm(sigma.matrix()) > 1e-12) {
        out.refusal = "residual is not diagonal";
        return out;
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (sigma(i, i).real() < -1e-12) {
            out.refusal = "residual diagonal entry " + std::to_string(i) + " is " +
                          std::to_string(sigma(i, i).real());
            return out;
        }
    }
    out.witness = DecompositionWitness{theta, eta, alpha, mu, sigma};
    return out;
}

double analytic_eta_bound(double theta, double mu) {
    theta = checked_schmidt_angle(theta);
    if (theta == 0.0) {
        return 0.0;
    }
    return mu / ((1.0 + mu) / std::tan(theta) - mu);
}

SdpEtaResult sdp_eta_max(double theta, double mu, const SdpOptions &options) {
    theta = checked_schmidt_angle(theta);
    if (!(mu > 0.0 && mu < 1.0)) {
        throw std::invalid_argument("sdp_eta_max: mu must lie in (0, 1)");
    }
    // rho_theta_eta = R0 + eta D with R0 = (1/2) (x) rho_B.
    const HermitianMatrix pure = schmidt_state(theta).matrix();
    const HermitianMatrix r0 = tensor(0.5 * HermitianMatrix::identity(2), partial_trace(pure, Subsystem::A));
    const HermitianMatrix d = pure - r0;
    const HermitianMatrix w = werner(mu).matrix();

    SdpProblem problem(SdpSense::Maximize);
    const std::size_t sigma = problem.add_block(4);
    const std::size_t sigma_pt = problem.add_block(4);
    const std::size_t alpha = problem.add_block(1);
    const std::size_t eta = problem.add_block(1);
    const std::size_t eta_slack = problem.add_block(1);
    problem.set_objective(eta, scalar(1.0));

    // sigma + alpha W - eta D = R0 entrywise. Its trace already enforces
    // tr(sigma) + alpha = 1, so that row is not added separately.
    for (const auto &b : two_qubit_basis()) {
        problem.add_constraint({{{sigma, b}, {alpha, scalar(trace_inner(b, w))}, {eta, scalar(-trace_inner(b, d))}},
                                trace_inner(b, r0)});
    }
    // sigma_pt = PT(sigma); tr(B PT(X)) = tr(PT(B) X).
    for (const auto &b : two_qubit_basis()) {
        problem.add_constraint({{{sigma_pt, b}, {sigma, -1.0 * partial_transpose(b, Subsystem::B)}}, 0.0});
    }
    problem.add_constraint({{{eta, scalar(1.0)}, {eta_slack, scalar(1.0)}}, 1.0});

    SdpEtaResult out;
    out.solution = solve(problem, options);
    if (out.solution.status != SdpStatus::Optimal) {
        throw SdpError("sdp_eta_max(theta=" + std::to_string(theta) + "): " + to_string(out.solution.status) +
                       " " + out.solution.diagnostic);
    }
    out.eta = std::clamp(out.solution.primal_blocks[eta](0, 0).real(), 0.0, 1.0);
    const double a = std::max(0.0, out.solution.primal_blocks[alpha](0, 0).real());
    // Rebuild sigma from (alpha, eta) so the decomposition holds to rounding.
    out.witness = DecompositionWitness{theta, out.eta, a, mu, rho_theta_eta(theta, out.eta).matrix() - a * w};
    return out;
}

std::vector<LhvCurvePoint> lhv_curve(double mu, std::size_t grid_size, const SdpOptions &options) {
    if (grid_size < 2) {
        throw std::invalid_argument("lhv_curve: grid needs at least two points");
    }
    std::vector<LhvCurvePoint> curve;
    curve.reserve(grid_size);
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double theta = kQuarterPi * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        curve.push_back({theta, condition9_boundary(theta), analytic_eta_bound(theta, mu), sdp_eta_max(theta, mu, options).eta});
    }
    return curve;
}

CombinedThreshold combined_threshold(double mu, std::size_t grid_size, CertificateBranch branch,
                                     const SdpOptions &options) {
    if (grid_size < 50) {
        throw std::invalid_argument("combined_threshold: grid_size must be at least 50");
    }
    auto certified = [&](double theta) {
        return branch == CertificateBranch::Sdp ? sdp_eta_max(theta, mu, options).eta : analytic_eta_bound(theta, mu);
    };
    auto covered = [&](double theta) { return std::max(condition9_boundary(theta), certified(theta)); };

    CombinedThreshold out;
    out.curve.reserve(grid_size);
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double theta = kQuarterPi * static_cast<double>(i) / static_cast<double>(grid_size - 1);
        LhvCurvePoint pt{theta, condition9_boundary(theta), analytic_eta_bound(theta, mu),
                         std::numeric_limits<double>::quiet_NaN()};
        if (branch == CertificateBranch::Sdp) {
            pt.eta_sdp = sdp_eta_max(theta, mu, options).eta;
        }
        const double value =
            std::max(pt.eta_condition9, branch == CertificateBranch::Sdp ? pt.eta_sdp : pt.eta_analytic_decomp);
        if (value < best_value) {
            best_value = value;
            best = i;
        }
        out.curve.push_back(pt);
    }
    out.eta_star = best_value;
    out.theta_star = out.curve[best].theta;

    // condition9_boundary falls and the decomposition bound rises across the
    // crossing, so bisect their difference inside the neighbouring cells.
    double lo = out.curve[best == 0 ? 0 : best - 1].theta;
    double hi = out.curve[std::min(best + 1, grid_size - 1)].theta;
    auto gap = [&](double theta) { return condition9_boundary(theta) - certified(theta); };
    if (lo < hi && gap(lo) > 0.0 && gap(hi) < 0.0) {
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            (gap(mid) > 0.0 ? lo : hi) = mid;
        }
        for (double theta : {lo, hi}) {
            const double value = covered(theta);
            if (value < out.eta_star) {
                out.eta_star = value;
                out.theta_star = theta;
            }
        }
    }
    return out;
}

bool ppt_check(const DensityMatrix &state) {
    if (state.dim() != 4) {
        throw std::invalid_argument("ppt_check: separability via PPT is only decided for two qubits");
    }
    return min_eigenvalue(partial_transpose(state.matrix(), Subsystem::B)) >= -1e-10;
}

}  // namespace qlhv
