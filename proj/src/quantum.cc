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

#include "qlhv/quantum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qlhv {

namespace {

constexpr double kUnitTolerance = 1e-10;
constexpr double kStateTolerance = 1e-10;
constexpr double kAngleSlack = 1e-12;

}  // namespace

BlochVector::BlochVector(double x, double y, double z) : v_{x, y, z} {
    const double norm2 = x * x + y * y + z * z;
    if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kUnitTolerance) {
        throw std::invalid_argument("BlochVector: squared norm " + std::to_string(norm2) + " is not 1");
    }
}

BlochVector BlochVector::normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw std::invalid_argument("BlochVector::normalized: zero or non-finite vector");
    }
    return {x / n, y / n, z / n};
}

BlochVector BlochVector::random(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    while (true) {
        const double x = gauss(rng);
        const double y = gauss(rng);
        const double z = gauss(rng);
        if (x * x + y * y + z * z > 1e-12) {
            return normalized(x, y, z);
        }
    }
}

double BlochVector::dot(const BlochVector &other) const {
    return v_[0] * other.v_[0] + v_[1] * other.v_[1] + v_[2] * other.v_[2];
}

HermitianMatrix BlochVector::sigma_dot() const {
    return HermitianMatrix{{v_[2], Complex{v_[0], -v_[1]}}, {Complex{v_[0], v_[1]}, -v_[2]}};
}

Povm::Povm(std::vector<HermitianMatrix> effects, std::vector<int> outcome_labels)
    : effects_(std::move(effects)), labels_(std::move(outcome_labels)) {
    if (effects_.empty()) {
        throw std::invalid_argument("Povm: no effects");
    }
    if (labels_.size() != effects_.size()) {
        throw std::invalid_argument("Povm: " + std::to_string(labels_.size()) + " labels for " +
                                    std::to_string(effects_.size()) + " effects");
    }
    const std::size_t d = effects_.front().dim();
    HermitianMatrix total = HermitianMatrix::zeros(d);
    for (std::size_t k = 0; k < effects_.size(); ++k) {
        if (effects_[k].dim() != d) {
            throw std::invalid_argument("Povm: effects have different dimensions");
        }
        const double lo = min_eigenvalue(effects_[k]);
        if (lo < -kStateTolerance) {
            throw std::invalid_argument("Povm: effect " + std::to_string(k) + " has negative eigenvalue " +
                                        std::to_string(lo));
        }
        total += effects_[k];
    }
    const double err = max_abs_diff(total, HermitianMatrix::identity(d));
    if (err > kStateTolerance) {
        throw std::invalid_argument("Povm: effects sum to identity only within " + std::to_string(err));
    }
}

const HermitianMatrix &Povm::effect_for(int label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] == label) {
            return effects_[k];
        }
    }
    throw std::invalid_argument("Povm: no outcome labelled " + std::to_string(label));
}

DensityMatrix::DensityMatrix(HermitianMatrix m) : m_(std::move(m)) {
    const double tr = m_.trace();
    if (std::abs(tr - 1.0) > kStateTolerance) {
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) + " is not 1");
    }
    const double lo = min_eigenvalue(m_);
    if (lo < -kStateTolerance) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(lo));
    }
}

double checked_schmidt_angle(double theta) {
    constexpr double kMax = std::numbers::pi / 4.0;
    if (!std::isfinite(theta) || theta < -kAngleSlack || theta > kMax + kAngleSlack) {
        throw std::invalid_argument("Schmidt angle " + std::to_string(theta) + " outside [0, pi/4]");
    }
    return std::clamp(theta, 0.0, kMax);
}

double checked_visibility(double eta) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
        throw std::invalid_argument("visibility " + std::to_string(eta) + " outside [0, 1]");
    }
    return eta;
}

void NoisyFamilyParams::validate() {
    eta = checked_visibility(eta);
    theta = checked_schmidt_angle(theta);
}

Povm noisy_povm(const BlochVector &direction, double eta) {
    checked_visibility(eta);
    const HermitianMatrix id = HermitianMatrix::identity(2);
    const HermitianMatrix n = direction.sigma_dot();
    return Povm({0.5 * (id + eta * n), 0.5 * (id - eta * n)}, {kOutcomes[0], kOutcomes[1]});
}

HermitianMatrix projector(const BlochVector &direction, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("projector: outcome must be +1 or -1");
    }
    return 0.5 * (HermitianMatrix::identity(2) + static_cast<double>(outcome) * direction.sigma_dot());
}

std::vector<Complex> schmidt_vector(double theta) {
    theta = checked_schmidt_angle(theta);
    return {std::cos(theta), 0.0, 0.0, std::sin(theta)};
}

DensityMatrix schmidt_state(double theta) { return DensityMatrix(HermitianMatrix::projector_onto(schmidt_vector(theta))); }

DensityMatrix rho_theta_eta(double theta, double eta) {
    theta = checked_schmidt_angle(theta);
    checked_visibility(eta);
    const HermitianMatrix pure = schmidt_state(theta).matrix();
    const HermitianMatrix rho_b = partial_trace(pure, Subsystem::A);
    return DensityMatrix(eta * pure + (1.0 - eta) * tensor(0.5 * HermitianMatrix::identity(2), rho_b));
}

DensityMatrix werner(double mu) {
    if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) {
        throw std::invalid_argument("werner: weight " + std::to_string(mu) + " outside [0, 1]");
    }
    const HermitianMatrix phi_plus = schmidt_state(std::numbers::pi / 4.0).matrix();
    return DensityMatrix(mu * phi_plus + (1.0 - mu) * (0.25 * HermitianMatrix::identity(4)));
}

double born_probability(const DensityMatrix &state, const HermitianMatrix &effect_a, const HermitianMatrix &effect_b) {
    if (state.dim() != 4 || effect_a.dim() != 2 || effect_b.dim() != 2) {
        throw std::invalid_argument("born_probability: expected a two-qubit state and qubit effects");
    }
    const ComplexMatrix product = state.matrix().matrix() * tensor(effect_a.matrix(), effect_b.matrix());
    return product.trace().real();
}

double check_equivalence(double theta, double eta, const BlochVector &x_dir, const BlochVector &y_dir) {
    const DensityMatrix pure = schmidt_state(theta);
    const DensityMatrix mixed = rho_theta_eta(theta, eta);
    const Povm alice = noisy_povm(x_dir, eta);
    double worst = 0.0;
    for (int a : kOutcomes) {
        for (int b : kOutcomes) {
            const HermitianMatrix bob = projector(y_dir, b);
            const double lhs = born_probability(pure, alice.effect_for(a), bob);
            const double rhs = born_probability(mixed, projector(x_dir, a), bob);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

}  // namespace qlhv
