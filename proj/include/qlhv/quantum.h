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

#ifndef QLHV_QUANTUM_H
#define QLHV_QUANTUM_H

#include <array>
#include <random>
#include <vector>

#include "qlhv/linalg.h"

namespace qlhv {

/// Unit vector on the Bloch sphere.
class BlochVector {
   public:
    /// Throws std::invalid_argument unless x^2 + y^2 + z^2 = 1 within 1e-10.
    BlochVector(double x, double y, double z);

    /// Rescales any nonzero vector onto the sphere.
    static BlochVector normalized(double x, double y, double z);
    static BlochVector unit_x() { return {1.0, 0.0, 0.0}; }
    static BlochVector unit_y() { return {0.0, 1.0, 0.0}; }
    static BlochVector unit_z() { return {0.0, 0.0, 1.0}; }
    /// Uniformly distributed on the sphere.
    static BlochVector random(std::mt19937_64 &rng);

    double x() const { return v_[0]; }
    double y() const { return v_[1]; }
    double z() const { return v_[2]; }
    const std::array<double, 3> &components() const { return v_; }

    double dot(const BlochVector &other) const;
    BlochVector operator-() const { return {-v_[0], -v_[1], -v_[2]}; }

    /// x sigma_1 + y sigma_2 + z sigma_3.
    HermitianMatrix sigma_dot() const;

    bool operator==(const BlochVector &) const = default;

   private:
    std::array<double, 3> v_;
};

/// Outcome labels are +1 and -1 throughout; a dichotomic POVM stores the +1
/// effect first.
inline constexpr std::array<int, 2> kOutcomes = {+1, -1};

/// Finite-outcome measurement: PSD effects summing to the identity.
class Povm {
   public:
    /// Validates each effect has min eigenvalue >= -1e-10 and that effects sum
    /// to the identity within 1e-10 per entry.
    Povm(std::vector<HermitianMatrix> effects, std::vector<int> outcome_labels);

    std::size_t dim() const { return effects_.front().dim(); }
    std::size_t size() const { return effects_.size(); }
    const std::vector<HermitianMatrix> &effects() const { return effects_; }
    const std::vector<int> &outcome_labels() const { return labels_; }
    const HermitianMatrix &effect(std::size_t k) const { return effects_.at(k); }
    /// Effect for outcome label (+1 / -1 for dichotomic measurements).
    const HermitianMatrix &effect_for(int label) const;

   private:
    std::vector<HermitianMatrix> effects_;
    std::vector<int> labels_;
};

/// Unit-trace PSD operator. Four-dimensional states carry the 2x2 split.
class DensityMatrix {
   public:
    /// Validates min eigenvalue >= -1e-10 and trace = 1 within 1e-10.
    explicit DensityMatrix(HermitianMatrix m);

    const HermitianMatrix &matrix() const { return m_; }
    std::size_t dim() const { return m_.dim(); }
    bool bipartite() const { return m_.dim() == 4; }

   private:
    HermitianMatrix m_;
};

/// Visibility eta in [0,1] and Schmidt angle theta in [0, pi/4].
struct NoisyFamilyParams {
    double eta = 1.0;
    double theta = 0.0;

    /// Throws std::invalid_argument when out of range. theta within 1e-12 of
    /// an endpoint is clamped onto it.
    void validate();
};

/// Clamps theta into [0, pi/4] when it overshoots by at most 1e-12; rejects
/// anything further out.
double checked_schmidt_angle(double theta);
double checked_visibility(double eta);

/// Effects (1 +/- eta x.sigma)/2 for outcomes +1, -1.
Povm noisy_povm(const BlochVector &direction, double eta);

/// (1 + outcome x.sigma)/2.
HermitianMatrix projector(const BlochVector &direction, int outcome);

/// Amplitudes of cos(theta)|00> + sin(theta)|11>.
std::vector<Complex> schmidt_vector(double theta);
DensityMatrix schmidt_state(double theta);

/// eta |phi_theta><phi_theta| + (1 - eta) (1/2) (x) rho_B, rho_B = tr_A |phi_theta><phi_theta|.
/// Measuring Alice's half of this state projectively reproduces the statistics
/// of noisy_povm(., eta) on the pure Schmidt state.
DensityMatrix rho_theta_eta(double theta, double eta);

/// mu |phi_+><phi_+| + (1 - mu) 1/4 for mu in [0, 1].
DensityMatrix werner(double mu);

/// tr(rho (effect_a (x) effect_b)) for a two-qubit state and qubit effects.
double born_probability(const DensityMatrix &state, const HermitianMatrix &effect_a,
                        const HermitianMatrix &effect_b);

/// Largest |p_noisy - p_state| over a, b in {+1, -1}, where p_noisy uses
/// noisy_povm on the Schmidt state and p_state uses projectors on
/// rho_theta_eta. Zero up to rounding.
double check_equivalence(double theta, double eta, const BlochVector &x_dir, const BlochVector &y_dir);

}  // namespace qlhv

#endif
