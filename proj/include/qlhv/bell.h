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

#ifndef QLHV_BELL_H
#define QLHV_BELL_H

#include <cstddef>
#include <vector>

#include "qlhv/quantum.h"

namespace qlhv {

/// Largest number of settings per party accepted by is_local.
inline constexpr std::size_t kMaxBellSettings = 6;

/// Outcome index used in behavior tables: 0 for +1, 1 for -1.
int outcome_index(int outcome);

/// Two-party, two-outcome correlation table p(a, b | x, y).
class Behavior {
   public:
    /// Checks nonnegativity, normalization and no-signaling within 1e-10.
    /// Throws std::invalid_argument on failure.
    Behavior(std::size_t n_settings_a, std::size_t n_settings_b, std::vector<double> table);

    std::size_t n_settings_a() const { return n_a_; }
    std::size_t n_settings_b() const { return n_b_; }
    const std::vector<double> &table() const { return table_; }

    /// a and b are outcomes in {+1, -1}.
    double p(std::size_t x, std::size_t y, int a, int b) const { return table_[index(x, y, a, b)]; }
    double marginal_a(std::size_t x, int a) const;
    double marginal_b(std::size_t y, int b) const;
    /// E_xy = sum_ab a b p(a, b | x, y).
    double correlator(std::size_t x, std::size_t y) const;

    std::size_t index(std::size_t x, std::size_t y, int a, int b) const {
        return ((x * n_b_ + y) * 2 + outcome_index(a)) * 2 + outcome_index(b);
    }
    static std::size_t table_size(std::size_t n_a, std::size_t n_b) { return n_a * n_b * 4; }

   private:
    std::size_t n_a_;
    std::size_t n_b_;
    std::vector<double> table_;
};

/// Worst violations of the behavior invariants for a raw table.
struct BehaviorCheck {
    double min_entry = 0.0;
    double normalization_error = 0.0;
    double signaling = 0.0;

    bool valid(double tolerance = 1e-10) const;
};

BehaviorCheck check_behavior(std::size_t n_a, std::size_t n_b, const std::vector<double> &table);

struct DeterministicStrategy {
    std::vector<int> assign_a;
    std::vector<int> assign_b;

    /// Strategy number k of the scenario: bit x of k set means Alice answers
    /// -1 to setting x; bits n_a.. do the same for Bob.
    static DeterministicStrategy from_index(std::size_t n_a, std::size_t n_b, std::size_t k);
    Behavior behavior() const;
};

/// p(a, b | x, y) = tr(rho M_{a|x} (x) M_{b|y}) for dichotomic qubit POVMs.
Behavior build_behavior(const DensityMatrix &state, const std::vector<Povm> &alice, const std::vector<Povm> &bob);

struct LocalityResult {
    bool local = false;
    /// Convex weights indexed as in DeterministicStrategy::from_index.
    std::vector<double> weights;
    double reconstruction_error = 0.0;
    /// Separating functional on the full table, with its largest value over
    /// deterministic behaviors and its value on the input.
    std::vector<double> functional;
    double local_bound = 0.0;
    double value = 0.0;
    double margin = 0.0;
    int pivots = 0;
};

/// Membership in the local polytope by LP over deterministic strategies in
/// Collins-Gisin coordinates. Throws std::invalid_argument when either party
/// has more than kMaxBellSettings settings.
LocalityResult is_local(const Behavior &behavior);

/// max |E_11 + E_12 + E_21 - E_22| over placements of the minus sign.
/// Requires a 2x2 scenario.
double chsh_value(const Behavior &behavior);

/// Alice z and x, Bob (z + x)/sqrt2 and (z - x)/sqrt2.
struct ChshSettings {
    std::vector<BlochVector> alice;
    std::vector<BlochVector> bob;
};
ChshSettings chsh_settings();

}  // namespace qlhv

#endif
