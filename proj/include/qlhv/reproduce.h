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

#ifndef QLHV_REPRODUCE_H
#define QLHV_REPRODUCE_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlhv/lhv.h"
#include "qlhv/sdp.h"

namespace qlhv {

/// Frozen SDP value of eta_threshold(fibonacci_hemisphere(12)).
inline constexpr double kFib12Threshold = 0.514396;

struct ReproductionConfig {
    double mu = kMuLhv;
    std::size_t grid = 256;
    /// Duality-gap tolerance handed to every SDP.
    double tolerance = 1e-7;
    std::uint64_t seed = 20260101;
};

struct Claim {
    std::string id;
    /// Acceptance criterion number the claim belongs to.
    int criterion = 0;
    std::string description;
    std::optional<double> reference;
    double computed = 0.0;
    std::optional<double> tolerance;
    /// Human-readable pass rule.
    std::string rule;
    bool pass = false;
    /// Set when the computation itself failed.
    std::string error;
};

struct ReproductionReport {
    ReproductionConfig config;
    std::vector<Claim> claims;
    /// Crossing angles and the fib12 threshold minus the SDP crossing, for
    /// context next to the pass/fail claims.
    double theta_star_analytic = 0.0;
    double theta_star_sdp = 0.0;
    double fib12_minus_eta_star_sdp = 0.0;

    bool all_pass() const;
};

/// Ids in registry order.
const std::vector<std::string> &claim_ids();

/// Runs every claim. Solver failures become failed claims.
ReproductionReport reproduce(const ReproductionConfig &config);

}  // namespace qlhv

#endif
