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

#ifndef QLHV_SDP_H
#define QLHV_SDP_H

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlhv/linalg.h"

namespace qlhv {

enum class SdpSense { Maximize, Minimize, Feasibility };
enum class SdpStatus { Optimal, Infeasible, MaxIterations };

const char *to_string(SdpStatus status);

/// Raised for malformed problems or linearly dependent constraint systems.
class SdpError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Coefficient of one block inside a linear functional: contributes
/// Re tr(coefficient * X_block).
struct BlockTerm {
    std::size_t block;
    HermitianMatrix coefficient;
};

/// sum_k Re tr(A_k X_k) = rhs.
struct LinearConstraint {
    std::vector<BlockTerm> terms;
    double rhs = 0.0;
};

/// Block-diagonal semidefinite program over complex Hermitian PSD blocks.
///
///   maximize / minimize  sum_k Re tr(C_k X_k)
///   subject to           sum_k Re tr(A_ik X_k) = b_i,   X_k >= 0.
///
/// A block of dimension 1 is a nonnegative real scalar.
class SdpProblem {
   public:
    explicit SdpProblem(SdpSense sense = SdpSense::Feasibility) : sense_(sense) {}

    /// Returns the new block's index.
    std::size_t add_block(std::size_t dim);
    void set_objective(std::size_t block, HermitianMatrix coefficient);
    void add_constraint(LinearConstraint constraint);

    SdpSense sense() const { return sense_; }
    void set_sense(SdpSense sense) { sense_ = sense; }
    const std::vector<std::size_t> &block_dims() const { return dims_; }
    const std::vector<std::optional<HermitianMatrix>> &objective() const { return objective_; }
    const std::vector<LinearConstraint> &constraints() const { return constraints_; }

    /// Value of the objective functional at the given blocks.
    double objective_value(const std::vector<HermitianMatrix> &blocks) const;
    /// Largest |sum_k Re tr(A_ik X_k) - b_i| over the constraints.
    double constraint_residual(const std::vector<HermitianMatrix> &blocks) const;
    /// sum_i y_i A_i restricted to each block.
    std::vector<HermitianMatrix> adjoint_map(const std::vector<double> &y) const;

   private:
    SdpSense sense_;
    std::vector<std::size_t> dims_;
    std::vector<std::optional<HermitianMatrix>> objective_;
    std::vector<LinearConstraint> constraints_;
};

/// Farkas-type evidence that {X >= 0, A(X) = b} is empty: A*(y) >= 0 while
/// b.y < 0. `dual_slack_min_eigenvalue` is the smallest eigenvalue of A*(y)
/// over all blocks (>= -1e-8 for a sound certificate) and `margin` is -b.y,
/// with y scaled to unit max-norm.
struct InfeasibilityCertificate {
    std::vector<double> y;
    double margin = 0.0;
    double dual_slack_min_eigenvalue = 0.0;
};

struct SdpSolution {
    SdpStatus status = SdpStatus::MaxIterations;
    std::vector<HermitianMatrix> primal_blocks;
    /// Multipliers y of the dual: for maximization, minimize b.y subject to
    /// A*(y) - C >= 0; for minimization, maximize b.y subject to C - A*(y) >= 0.
    std::vector<double> dual_vector;
    double objective_value = 0.0;
    double dual_objective_value = 0.0;
    double duality_gap = 0.0;
    double constraint_residual = 0.0;
    double min_block_eigenvalue = 0.0;
    int iterations = 0;
    std::optional<InfeasibilityCertificate> certificate;
    std::string diagnostic;
};

struct SdpOptions {
    /// Absolute bound on |primal - dual| at termination.
    double gap_tolerance = 1e-7;
    /// Absolute bound on the largest primal constraint violation.
    double residual_tolerance = 1e-8;
    /// Fraction of the distance to the cone boundary taken per step.
    double step_fraction = 0.98;
    int max_iterations = 500;
    /// Per-iteration log on stderr.
    bool verbose = false;
};

/// Primal-dual interior point (HKM direction, Mehrotra predictor-corrector)
/// on the real symmetric embedding of the Hermitian blocks. Feasibility
/// problems run a phase-1 program that either returns a feasible point or an
/// InfeasibilityCertificate.
SdpSolution solve(const SdpProblem &problem, const SdpOptions &options = {});

/// H -> [[Re H, -Im H], [Im H, Re H]]; 1x1 blocks map to themselves.
Eigen::MatrixXd embed_hermitian(const HermitianMatrix &h);
/// Inverse of embed_hermitian on its image; other inputs are first projected
/// onto the image.
HermitianMatrix extract_hermitian(const Eigen::MatrixXd &m, std::size_t complex_dim);

/// Plain-text dump for cross-checking against external solvers:
///
///   sense <max|min|feas>
///   blocks <count> <dim_0> ... <dim_{k-1}>
///   objective <block> <row> <col> <re> <im>        (upper triangle, one line per entry)
///   constraint <index> <rhs>
///   term <index> <block> <row> <col> <re> <im>     (upper triangle)
void write_problem(std::ostream &out, const SdpProblem &problem);

}  // namespace qlhv

#endif
