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

#ifndef QLHV_LHV_H
#define QLHV_LHV_H

#include <optional>
#include <string>
#include <vector>

#include "qlhv/quantum.h"
#include "qlhv/sdp.h"

namespace qlhv {

/// Werner weight up to which a local model for all projective measurements is
/// taken as known. Two-digit published figure.
inline constexpr double kMuLhv = 0.66;

/// Sufficient condition for a local model of rho_theta_eta under projective
/// measurements: cos^2(2 theta) >= (2 eta - 1) / ((2 - eta) eta^3).
/// eta = 0 is reported local without evaluating the singular right-hand side.
bool condition9(double theta, double eta);

/// Largest eta satisfying condition9 at fixed theta (bisection on [1/2, 1]
/// to 1e-12).
double condition9_boundary(double theta);

/// rho_theta_eta = alpha * werner(mu) + sigma with sigma unnormalized
/// (trace 1 - alpha).
struct DecompositionWitness {
    double theta = 0.0;
    double eta = 0.0;
    double alpha = 0.0;
    double mu = 0.0;
    HermitianMatrix sigma;
};

/// Independent re-check of a witness.
struct WitnessCheck {
    double decomposition_error = 0.0;
    double sigma_min_eigenvalue = 0.0;
    double sigma_pt_min_eigenvalue = 0.0;
    double trace_error = 0.0;
    double alpha = 0.0;

    /// Decomposition and trace within 1e-9, both spectra >= -1e-8, alpha >= 0.
    bool valid() const;
};

WitnessCheck verify_witness(const DecompositionWitness &witness);

struct AnalyticDecomposition {
    std::optional<DecompositionWitness> witness;
    /// Why no witness was produced, empty on success.
    std::string refusal;
};

/// alpha = eta sin(2 theta) / mu leaves a diagonal residual; accepted iff
/// alpha <= 1 and the residual diagonal is nonnegative.
AnalyticDecomposition analytic_decomposition(double theta, double eta, double mu);

/// mu / ((1 + mu) cot(theta) - mu); 0 at theta = 0.
double analytic_eta_bound(double theta, double mu);

struct SdpEtaResult {
    double eta = 0.0;
    DecompositionWitness witness;
    SdpSolution solution;
};

/// Largest eta with rho_theta_eta = alpha werner(mu) + sigma, sigma >= 0,
/// sigma^PT >= 0, tr(sigma) + alpha = 1, alpha >= 0. Throws SdpError when the
/// solver does not reach optimality.
SdpEtaResult sdp_eta_max(double theta, double mu, const SdpOptions &options = {});

struct LhvCurvePoint {
    double theta = 0.0;
    double eta_condition9 = 0.0;
    double eta_analytic_decomp = 0.0;
    double eta_sdp = 0.0;
};

enum class CertificateBranch { Sdp, AnalyticDecomposition };

struct CombinedThreshold {
    double eta_star = 0.0;
    /// Angle at which the two certificates cross.
    double theta_star = 0.0;
    std::vector<LhvCurvePoint> curve;
};

/// theta_i = i (pi/4) / (grid_size - 1), i = 0..grid_size-1. Each row holds
/// all three certified boundaries.
std::vector<LhvCurvePoint> lhv_curve(double mu, std::size_t grid_size, const SdpOptions &options = {});

/// Largest eta such that every theta in [0, pi/4] is covered by condition9 or
/// by the chosen decomposition branch: min over theta of
/// max(condition9_boundary, branch). The grid minimum is refined by bisection
/// on the crossing. Requires grid_size >= 50.
CombinedThreshold combined_threshold(double mu, std::size_t grid_size, CertificateBranch branch,
                                     const SdpOptions &options = {});

/// Peres test: min eigenvalue of the partial transpose >= -1e-10. Decides
/// separability for two-qubit states only; other dimensions are rejected.
bool ppt_check(const DensityMatrix &state);

}  // namespace qlhv

#endif
