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

#include "qlhv/joint_measurability.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qlhv {

namespace {

/// Real-linear functionals Re tr(B X) that pin down a 2x2 Hermitian X.
const std::vector<HermitianMatrix> &qubit_basis() {
    static const std::vector<HermitianMatrix> basis = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
    return basis;
}

int outcome_of(std::size_t joint_index, std::size_t x) { return ((joint_index >> x) & 1U) ? -1 : +1; }

void require_size(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("joint measurability: empty measurement set");
    }
    if (n > kMaxJointMeasurements) {
        throw std::invalid_argument("joint measurability: " + std::to_string(n) + " measurements need 2^" +
                                    std::to_string(n) + " joint effects; the limit is " +
                                    std::to_string(kMaxJointMeasurements));
    }
}

/// Adds the 2^N joint-effect blocks plus completeness constraints.
std::vector<std::size_t> add_joint_blocks(SdpProblem &problem, std::size_t n) {
    const std::size_t outcomes = std::size_t{1} << n;
    std::vector<std::size_t> blocks;
    blocks.reserve(outcomes);
    for (std::size_t k = 0; k < outcomes; ++k) {
        blocks.push_back(problem.add_block(2));
    }
    for (const auto &b : qubit_basis()) {
        LinearConstraint c;
        c.rhs = b.trace();
        for (auto blk : blocks) {
            c.terms.push_back({blk, b});
        }
        problem.add_constraint(std::move(c));
    }
    return blocks;
}

/// Terms sum_{k : a_x = +1} Re tr(b M_k).
std::vector<BlockTerm> plus_marginal_terms(const std::vector<std::size_t> &blocks, std::size_t x,
                                           const HermitianMatrix &b) {
    std::vector<BlockTerm> terms;
    terms.reserve(blocks.size() / 2);
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        if (outcome_of(k, x) == +1) {
            terms.push_back({blocks[k], b});
        }
    }
    return terms;
}

}  // namespace

HermitianMatrix JointObservable::marginal(std::size_t x, int a) const {
    HermitianMatrix out = HermitianMatrix::zeros(2);
    for (std::size_t k = 0; k < effects.size(); ++k) {
        if (outcome_vectors[k].at(x) == a) {
            out += effects[k];
        }
    }
    return out;
}

bool JointObservableCheck::valid() const {
    constexpr double kTol = 1e-8;
    return min_effect_eigenvalue >= -kTol && completeness_error <= kTol && marginal_error <= kTol;
}

JointObservableCheck verify_joint_observable(const JointObservable &joint, const std::vector<Povm> &measurements) {
    JointObservableCheck check;
    check.min_effect_eigenvalue = std::numeric_limits<double>::infinity();
    HermitianMatrix total = HermitianMatrix::zeros(2);
    for (const auto &e : joint.effects) {
        check.min_effect_eigenvalue = std::min(check.min_effect_eigenvalue, min_eigenvalue(e));
        total += e;
    }
    check.completeness_error = max_abs_diff(total, HermitianMatrix::identity(2));
    for (std::size_t x = 0; x < measurements.size(); ++x) {
        for (int a : kOutcomes) {
            check.marginal_error =
                std::max(check.marginal_error, max_abs_diff(joint.marginal(x, a), measurements[x].effect_for(a)));
        }
    }
    return check;
}

bool IncompatibilityCertificateCheck::valid() const { return min_eigenvalue >= -1e-8 && margin > 1e-8; }

IncompatibilityCertificateCheck verify_incompatibility_certificate(const InfeasibilityCertificate &certificate,
                                                                   const std::vector<Povm> &measurements) {
    const std::size_t n = measurements.size();
    require_size(n);
    if (certificate.y.size() != 4 * (n + 1)) {
        throw std::invalid_argument("verify_incompatibility_certificate: expected " + std::to_string(4 * (n + 1)) +
                                    " multipliers, got " + std::to_string(certificate.y.size()));
    }
    auto assemble = [&](std::size_t offset) {
        HermitianMatrix op = HermitianMatrix::zeros(2);
        for (std::size_t j = 0; j < 4; ++j) {
            op += certificate.y[offset + j] * qubit_basis()[j];
        }
        return op;
    };
    const HermitianMatrix g = assemble(0);
    std::vector<HermitianMatrix> f;
    double by = g.trace();
    for (std::size_t x = 0; x < n; ++x) {
        f.push_back(assemble(4 * (x + 1)));
        by += trace_inner(f.back(), measurements[x].effect_for(+1));
    }
    IncompatibilityCertificateCheck check;
    check.margin = -by;
    check.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
        HermitianMatrix slack = g;
        for (std::size_t x = 0; x < n; ++x) {
            if (outcome_of(k, x) == +1) {
                slack += f[x];
            }
        }
        check.min_eigenvalue = std::min(check.min_eigenvalue, min_eigenvalue(slack));
    }
    return check;
}

IncompatibilityReport jm_check(const std::vector<Povm> &measurements, const SdpOptions &options) {
    require_size(measurements.size());
    for (const auto &m : measurements) {
        if (m.dim() != 2 || m.size() != 2) {
            throw std::invalid_argument("jm_check: only dichotomic qubit POVMs are supported");
        }
    }
    const std::size_t n = measurements.size();
    SdpProblem problem(SdpSense::Feasibility);
    const auto blocks = add_joint_blocks(problem, n);
    for (std::size_t x = 0; x < n; ++x) {
        const HermitianMatrix &target = measurements[x].effect_for(+1);
        for (const auto &b : qubit_basis()) {
            problem.add_constraint({plus_marginal_terms(blocks, x, b), trace_inner(b, target)});
        }
    }

    const SdpSolution sol = solve(problem, options);
    if (sol.status == SdpStatus::MaxIterations) {
        throw SdpError("jm_check: " + sol.diagnostic);
    }
    IncompatibilityReport report;
    report.feasibility_margin = sol.objective_value;
    if (sol.status == SdpStatus::Optimal) {
        JointObservable joint;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            std::vector<int> outcome(n);
            for (std::size_t x = 0; x < n; ++x) {
                outcome[x] = outcome_of(k, x);
            }
            joint.outcome_vectors.push_back(std::move(outcome));
            joint.effects.push_back(sol.primal_blocks[blocks[k]]);
        }
        report.jointly_measurable = true;
        report.joint_observable = std::move(joint);
    } else {
        report.jointly_measurable = false;
        report.infeasibility_certificate = sol.certificate;
    }
    return report;
}

double eta_threshold(const std::vector<BlochVector> &directions, const SdpOptions &options) {
    require_size(directions.size());
    for (std::size_t i = 0; i < directions.size(); ++i) {
        for (std::size_t j = i + 1; j < directions.size(); ++j) {
            if (std::abs(directions[i].dot(directions[j])) > 1.0 - 1e-9) {
                throw std::invalid_argument("eta_threshold: directions " + std::to_string(i) + " and " +
                                            std::to_string(j) +
                                            " are parallel or antipodal (a relabelling of one measurement)");
            }
        }
    }
    const std::size_t n = directions.size();
    SdpProblem problem(SdpSense::Maximize);
    const auto blocks = add_joint_blocks(problem, n);
    const std::size_t eta = problem.add_block(1);
    problem.set_objective(eta, HermitianMatrix::diagonal({1.0}));
    // sum_{a_x = +1} M_a = (1 + eta d_x.sigma)/2.
    for (std::size_t x = 0; x < n; ++x) {
        const HermitianMatrix half_sigma = 0.5 * directions[x].sigma_dot();
        for (const auto &b : qubit_basis()) {
            auto terms = plus_marginal_terms(blocks, x, b);
            terms.push_back({eta, HermitianMatrix::diagonal({-trace_inner(b, half_sigma)})});
            problem.add_constraint({std::move(terms), 0.5 * b.trace()});
        }
    }
    const SdpSolution sol = solve(problem, options);
    if (sol.status != SdpStatus::Optimal) {
        throw SdpError(std::string("eta_threshold: solver returned ") + to_string(sol.status) + ": " +
                       sol.diagnostic);
    }
    return sol.primal_blocks[eta](0, 0).real();
}

bool busch_pair_criterion(const BlochVector &d1, const BlochVector &d2, double eta) {
    checked_visibility(eta);
    double sum2 = 0.0;
    double diff2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double s = eta * (d1.components()[k] + d2.components()[k]);
        const double d = eta * (d1.components()[k] - d2.components()[k]);
        sum2 += s * s;
        diff2 += d * d;
    }
    return std::sqrt(sum2) + std::sqrt(diff2) <= 2.0;
}

std::vector<BlochVector> fibonacci_hemisphere(std::size_t n) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<BlochVector> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / (2.0 * static_cast<double>(n));
        const double r = std::sqrt(1.0 - z * z);
        const double phi = golden * static_cast<double>(i);
        out.push_back(BlochVector::normalized(r * std::cos(phi), r * std::sin(phi), z));
    }
    return out;
}

std::vector<BlochVector> direction_preset(const std::string &name) {
    if (name == "pauli2") {
        return {BlochVector::unit_x(), BlochVector::unit_z()};
    }
    if (name == "pauli3") {
        return {BlochVector::unit_x(), BlochVector::unit_y(), BlochVector::unit_z()};
    }
    if (name == "fib12") {
        return fibonacci_hemisphere(12);
    }
    throw std::invalid_argument("unknown direction preset '" + name + "' (expected pauli2, pauli3 or fib12)");
}

}  // namespace qlhv
