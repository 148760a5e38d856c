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

#ifndef QLHV_TOOLS_CLI_IO_H
#define QLHV_TOOLS_CLI_IO_H

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlhv/bell.h"
#include "qlhv/lhv.h"
#include "qlhv/quantum.h"
#include "qlhv/reproduce.h"

namespace qlhv::cli {

/// Malformed user input; the message carries the location.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct ParsedDirections {
    std::vector<BlochVector> directions;
    std::vector<std::string> warnings;
};

/// One direction per line as three reals; '#' starts a comment. Vectors off
/// the unit sphere by more than 1e-6 are normalized with a warning.
ParsedDirections parse_directions(std::istream &in, const std::string &source);

/// "x", "-z" or "a,b,c" items separated by ';'.
std::vector<BlochVector> parse_direction_list(const std::string &text);

/// Header theta,eta_condition9,eta_analytic_decomp,eta_sdp then one row per
/// point, fixed 12-digit precision.
void write_curve_csv(std::ostream &out, const std::vector<LhvCurvePoint> &curve);

std::string report_json(const ReproductionReport &report, const std::string &version);

void print_locality(std::ostream &out, const Behavior &behavior, const LocalityResult &result);

}  // namespace qlhv::cli

#endif
