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

#ifndef QLHV_JOINT_MEASURABILITY_H
#define QLHV_JOINT_MEASURABILITY_H

#include <optional>
#include <string>
#include <vector>

#include "qlhv/quantum.h"
#include "qlhv/sdp.h"

namespace qlhv {

/// Largest measurement count accepted by the joint-measurability engine
/// (2^14 joint effects).
inline constexpr std::size_t kMaxJointMeasurements = 14;

/// Parent POVM over the full outcome lattice {+1,-1}^N.
struct JointObservable {
    /// outcome_vectors[k][x] is the outcome a_x of joint outcome k.
    std::vector<std::vector<int>> outcome_vectors;
    std::vector<HermitianMatrix> effects;

    /// sum over joint outcomes with a_x = a of the effects.
    HermitianMatrix marginal(std::size_t x, int a) const;
};

/// Independent re-check of a joint observable against the measurements it
/// claims to reproduce.
struct JointObservableCheck {
    double min_effect_eigenvalue = 0.0;
    double completeness_error = 0.0;
    double marginal_error = 0.0;

    /// All three within 1e-8.
    bool valid() const;
};

JointObservableCheck verify_joint_observable(const JointObservable &joint, const std::vector<Povm> &measurements);

/// Certificate re-check from the measurements alone. With G and F_x the
/// operators assembled from the multipliers of the completeness and marginal
/// constraints, every G + sum_{x : a_x = +1} F_x must be PSD while
/// tr G + sum_x tr(F_x M_{+|x}) < 0.
struct IncompatibilityCertificateCheck {
    double min_eigenvalue = 0.0;
    double margin = 0.0;

    /// min_eigenvalue >= -1e-8 and margin > 1e-8.
    bool valid() const;
};

IncompatibilityCertificateCheck verify_incompatibility_certificate(const InfeasibilityCertificate &certificate,
                                                                   const std::vector<Povm> &measurements);

struct IncompatibilityReport {
    bool jointly_measurable = false;
    std::optional<JointObservable> joint_observable;
    std::optional<InfeasibilityCertificate> infeasibility_certificate;
    std::optional<double> eta_threshold;
    /// Phase-1 value: largest t with every joint effect >= t * 1.
    double feasibility_margin = 0.0;
};

/// Decides whether dichotomic qubit POVMs (1 <= N <= 14) admit a joint
/// observable. Throws std::invalid_argument for other inputs and SdpError when
/// the solver fails to converge.
IncompatibilityReport jm_check(const std::vector<Povm> &measurements, const SdpOptions &options = {});

/// Largest eta for which {noisy_povm(d, eta)} is jointly measurable, from a
/// single SDP with eta as a variable. Directions must be pairwise distinct and
/// non-antipodal.
double eta_threshold(const std::vector<BlochVector> &directions, const SdpOptions &options = {});

/// Analytic pair criterion: jointly measurable iff
/// |eta d1 + eta d2| + |eta d1 - eta d2| <= 2.
bool busch_pair_criterion(const BlochVector &d1, const BlochVector &d2, double eta);

/// Upper half of a 2n-point Fibonacci sphere: z_i = 1 - (2i + 1)/(2n),
/// azimuth i * pi * (3 - sqrt 5), i = 0..n-1.
std::vector<BlochVector> fibonacci_hemisphere(std::size_t n);

/// Named direction sets: "pauli2" {x, z}, "pauli3" {x, y, z}, "fib12".
/// Throws std::invalid_argument for unknown names.
std::vector<BlochVector> direction_preset(const std::string &name);

}  // namespace qlhv

#endif
