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

#ifndef QLHV_LP_H
#define QLHV_LP_H

#include <vector>

namespace qlhv {

/// Outcome of a convex-hull membership test.
///
/// inside: `weights` are convex weights (one per vertex) reproducing the target
/// to `residual` in max norm.
/// outside: `functional` f (unit max-norm) satisfies
/// f.target - max_v f.v = `margin` > 0.
struct HullMembership {
    bool inside = false;
    std::vector<double> weights;
    double residual = 0.0;
    std::vector<double> functional;
    double margin = 0.0;
    int pivots = 0;
};

/// Decides whether `target` lies in the convex hull of `vertices` with a dense
/// two-phase-style simplex (phase 1 only; Dantzig pricing, Bland's rule once
/// degenerate pivots pile up). Throws std::invalid_argument on empty input or
/// inconsistent vector lengths.
HullMembership solve_lp(const std::vector<std::vector<double>> &vertices, const std::vector<double> &target);

}  // namespace qlhv

#endif
