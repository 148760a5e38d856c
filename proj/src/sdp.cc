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

#include "qlhv/sdp.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <utility>

namespace qlhv {

const char *to_string(SdpStatus status) {
    switch (status) {
        case SdpStatus::Optimal:
            return "optimal";
        case SdpStatus::Infeasible:
            return "infeasible";
        case SdpStatus::MaxIterations:
            return "max_iterations";
    }
    return "unknown";
}

std::size_t SdpProblem::add_block(std::size_t dim) {
    if (dim == 0) {
        throw SdpError("SdpProblem: block dimension must be at least 1");
    }
    dims_.push_back(dim);
    objective_.emplace_back();
    return dims_.size() - 1;
}

void SdpProblem::set_objective(std::size_t block, HermitianMatrix coefficient) {
    if (block >= dims_.size() || coefficient.dim() != dims_[block]) {
        throw SdpError("SdpProblem::set_objective: block " + std::to_string(block) + " does not match coefficient");
    }
    objective_[block] = std::move(coefficient);
}

void SdpProblem::add_constraint(LinearConstraint constraint) {
    if (!std::isfinite(constraint.rhs)) {
        throw SdpError("SdpProblem::add_constraint: non-finite right-hand side");
    }
    for (const auto &term : constraint.terms) {
        if (term.block >= dims_.size() || term.coefficient.dim() != dims_[term.block]) {
            throw SdpError("SdpProblem::add_constraint: term refers to block " + std::to_string(term.block) +
                           " with mismatched dimension");
        }
    }
    constraints_.push_back(std::move(constraint));
}

double SdpProblem::objective_value(const std::vector<HermitianMatrix> &blocks) const {
    double v = 0.0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (objective_[k]) {
            v += trace_inner(*objective_[k], blocks.at(k));
        }
    }
    return v;
}

double SdpProblem::constraint_residual(const std::vector<HermitianMatrix> &blocks) const {
    double worst = 0.0;
    for (const auto &c : constraints_) {
        double lhs = 0.0;
        for (const auto &term : c.terms) {
            lhs += trace_inner(term.coefficient, blocks.at(term.block));
        }
        worst = std::max(worst, std::abs(lhs - c.rhs));
    }
    return worst;
}

std::vector<HermitianMatrix> SdpProblem::adjoint_map(const std::vector<double> &y) const {
    if (y.size() != constraints_.size()) {
        throw SdpError("SdpProblem::adjoint_map: multiplier count does not match constraints");
    }
    std::vector<HermitianMatrix> out;
    out.reserve(dims_.size());
    for (std::size_t d : dims_) {
        out.push_back(HermitianMatrix::zeros(d));
    }
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        for (const auto &term : constraints_[i].terms) {
            out[term.block] += y[i] * term.coefficient;
        }
    }
    return out;
}

Eigen::MatrixXd embed_hermitian(const HermitianMatrix &h) {
    const auto n = static_cast<Eigen::Index>(h.dim());
    if (n == 1) {
        return Eigen::MatrixXd::Constant(1, 1, h(0, 0).real());
    }
    Eigen::MatrixXd out(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const Complex z = h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            out(i, j) = z.real();
            out(i + n, j + n) = z.real();
            out(i, j + n) = -z.imag();
            out(i + n, j) = z.imag();
        }
    }
    return out;
}

HermitianMatrix extract_hermitian(const Eigen::MatrixXd &m, std::size_t complex_dim) {
    const auto n = static_cast<Eigen::Index>(complex_dim);
    if (n == 1) {
        if (m.rows() != 1 || m.cols() != 1) {
            throw SdpError("extract_hermitian: expected a 1x1 block");
        }
        return HermitianMatrix::diagonal({m(0, 0)});
    }
    if (m.rows() != 2 * n || m.cols() != 2 * n) {
        throw SdpError("extract_hermitian: block size does not match complex dimension");
    }
    ComplexMatrix out(complex_dim, complex_dim);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const double re = 0.5 * (m(i, j) + m(i + n, j + n));
            const double im = 0.5 * (m(i + n, j) - m(i, j + n));
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Complex{re, im};
        }
    }
    // Symmetrize explicitly: rounding in m may exceed the Hermitian tolerance.
    ComplexMatrix sym = 0.5 * (out + out.adjoint());
    return HermitianMatrix(std::move(sym));
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct RealTerm {
    std::size_t block;
    MatrixXd coefficient;
};

/// minimize <C, X> subject to <A_i, X> = b_i, X >= 0 over real symmetric blocks.
struct RealProblem {
    std::vector<Eigen::Index> dims;
    std::vector<MatrixXd> cost;
    std::vector<std::vector<RealTerm>> rows;
    VectorXd rhs;
};

struct RealResult {
    SdpStatus status = SdpStatus::MaxIterations;
    std::vector<MatrixXd> x;
    std::vector<MatrixXd> z;
    VectorXd y;
    double primal_objective = 0.0;
    double dual_objective = 0.0;
    int iterations = 0;
    std::string diagnostic;
};

double weight_for(std::size_t complex_dim) { return complex_dim == 1 ? 1.0 : 0.5; }

RealProblem to_real(const SdpProblem &problem) {
    RealProblem rp;
    const auto &dims = problem.block_dims();
    const double sign = problem.sense() == SdpSense::Maximize ? -1.0 : 1.0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        const Eigen::Index n = dims[k] == 1 ? 1 : static_cast<Eigen::Index>(2 * dims[k]);
        rp.dims.push_back(n);
        if (problem.sense() != SdpSense::Feasibility && problem.objective()[k]) {
            rp.cost.push_back(sign * weight_for(dims[k]) * embed_hermitian(*problem.objective()[k]));
        } else {
            rp.cost.push_back(MatrixXd::Zero(n, n));
        }
    }
    const auto &cons = problem.constraints();
    rp.rhs.resize(static_cast<Eigen::Index>(cons.size()));
    rp.rows.resize(cons.size());
    for (std::size_t i = 0; i < cons.size(); ++i) {
        rp.rhs(static_cast<Eigen::Index>(i)) = cons[i].rhs;
        for (const auto &term : cons[i].terms) {
            MatrixXd a = weight_for(dims[term.block]) * embed_hermitian(term.coefficient);
            // Merge repeated mentions of a block.
            auto it = std::find_if(rp.rows[i].begin(), rp.rows[i].end(),
                                   [&](const RealTerm &t) { return t.block == term.block; });
            if (it != rp.rows[i].end()) {
                it->coefficient += a;
            } else {
                rp.rows[i].push_back({term.block, std::move(a)});
            }
        }
    }
    return rp;
}

void require_full_row_rank(const RealProblem &p) {
    const auto m = p.rhs.size();
    if (m == 0) {
        return;
    }
    std::vector<std::vector<std::pair<Eigen::Index, const MatrixXd *>>> by_block(p.dims.size());
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        for (const auto &t : p.rows[i]) {
            by_block[t.block].emplace_back(static_cast<Eigen::Index>(i), &t.coefficient);
        }
    }
    MatrixXd gram = MatrixXd::Zero(m, m);
    for (const auto &terms : by_block) {
        for (std::size_t u = 0; u < terms.size(); ++u) {
            for (std::size_t v = u; v < terms.size(); ++v) {
                const double g = terms[u].second->cwiseProduct(*terms[v].second).sum();
                gram(terms[u].first, terms[v].first) += g;
                if (u != v) {
                    gram(terms[v].first, terms[u].first) += g;
                }
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
    const double hi = eig.eigenvalues().maxCoeff();
    const double lo = eig.eigenvalues().minCoeff();
    if (!(hi > 0.0) || lo <= 1e-12 * hi) {
        throw SdpError("SDP constraint system is rank deficient (Gram eigenvalues " + std::to_string(lo) + " / " +
                       std::to_string(hi) + "); remove redundant equalities");
    }
}

class InteriorPoint {
   public:
    InteriorPoint(const RealProblem &p, const SdpOptions &opt) : p_(p), opt_(opt) {
        m_ = p.rhs.size();
        by_block_.resize(p.dims.size());
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            for (const auto &t : p.rows[i]) {
                by_block_[t.block].emplace_back(static_cast<Eigen::Index>(i), &t.coefficient);
            }
        }
        for (auto n : p.dims) {
            total_dim_ += static_cast<double>(n);
        }
    }

    RealResult run();

   private:
    VectorXd apply(const std::vector<MatrixXd> &w) const {
        VectorXd out = VectorXd::Zero(m_);
        for (std::size_t k = 0; k < by_block_.size(); ++k) {
            for (const auto &[i, a] : by_block_[k]) {
                out(i) += a->cwiseProduct(w[k]).sum();
            }
        }
        return out;
    }

    std::vector<MatrixXd> adjoint(const VectorXd &y) const {
        std::vector<MatrixXd> out;
        out.reserve(p_.dims.size());
        for (std::size_t k = 0; k < p_.dims.size(); ++k) {
            MatrixXd s = MatrixXd::Zero(p_.dims[k], p_.dims[k]);
            for (const auto &[i, a] : by_block_[k]) {
                s.noalias() += y(i) * *a;
            }
            out.push_back(std::move(s));
        }
        return out;
    }

    static double inner(const std::vector<MatrixXd> &a, const std::vector<MatrixXd> &b) {
        double s = 0.0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            s += a[k].cwiseProduct(b[k]).sum();
        }
        return s;
    }

    static double norm(const std::vector<MatrixXd> &a) { return std::sqrt(inner(a, a)); }

    static double max_abs(const std::vector<MatrixXd> &a) {
        double s = 0.0;
        for (const auto &m : a) {
            s = std::max(s, m.cwiseAbs().maxCoeff());
        }
        return s;
    }

    /// Largest alpha with x + alpha dx >= 0 (infinity when unbounded).
    static double max_step(const MatrixXd &x, const MatrixXd &dx) {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        if (x.rows() == 1) {
            return dx(0, 0) < 0.0 ? -x(0, 0) / dx(0, 0) : kInf;
        }
        Eigen::LLT<MatrixXd> llt(x);
        if (llt.info() != Eigen::Success) {
            return 0.0;
        }
        const MatrixXd w = llt.matrixL().solve(dx);
        MatrixXd t = llt.matrixL().solve(w.transpose());
        t = 0.5 * (t + t.transpose()).eval();
        const double lo = Eigen::SelfAdjointEigenSolver<MatrixXd>(t, Eigen::EigenvaluesOnly).eigenvalues()(0);
        return lo < 0.0 ? -1.0 / lo : kInf;
    }

    double max_step(const std::vector<MatrixXd> &x, const std::vector<MatrixXd> &dx) const {
        double alpha = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < x.size(); ++k) {
            alpha = std::min(alpha, max_step(x[k], dx[k]));
        }
        return alpha;
    }

    /// HKM Schur complement M_ij = sum_k tr(A_ik X_k A_jk Z_k^{-1}).
    MatrixXd schur(const std::vector<MatrixXd> &x, const std::vector<MatrixXd> &zinv) const {
        MatrixXd m = MatrixXd::Zero(m_, m_);
        std::vector<MatrixXd> g;
        for (std::size_t k = 0; k < by_block_.size(); ++k) {
            const auto &terms = by_block_[k];
            g.resize(terms.size());
            for (std::size_t u = 0; u < terms.size(); ++u) {
                g[u].noalias() = x[k] * *terms[u].second * zinv[k];
            }
            for (std::size_t u = 0; u < terms.size(); ++u) {
                for (std::size_t v = u; v < terms.size(); ++v) {
                    const double val = terms[v].second->cwiseProduct(g[u].transpose()).sum();
                    m(terms[u].first, terms[v].first) += val;
                    if (u != v) {
                        m(terms[v].first, terms[u].first) += val;
                    }
                }
            }
        }
        return m;
    }

    const RealProblem &p_;
    const SdpOptions &opt_;
    Eigen::Index m_ = 0;
    double total_dim_ = 0.0;
    std::vector<std::vector<std::pair<Eigen::Index, const MatrixXd *>>> by_block_;
};

RealResult InteriorPoint::run() {
    const std::size_t nb = p_.dims.size();
    RealResult res;

    // Starting point in the style of SDPT3: scaled identities.
    std::vector<MatrixXd> x(nb), z(nb), zinv(nb);
    VectorXd y = VectorXd::Zero(m_);
    double c_norm = 0.0;
    for (const auto &c : p_.cost) {
        c_norm += c.squaredNorm();
    }
    c_norm = std::sqrt(c_norm);
    for (std::size_t k = 0; k < nb; ++k) {
        const auto n = static_cast<double>(p_.dims[k]);
        double xi = std::max(1.0, std::sqrt(n));
        double zeta = std::max({1.0, std::sqrt(n), p_.cost[k].norm()});
        for (const auto &[i, a] : by_block_[k]) {
            xi = std::max(xi, n * (1.0 + std::abs(p_.rhs(i))) / (1.0 + a->norm()));
            zeta = std::max(zeta, a->norm());
        }
        x[k] = xi * MatrixXd::Identity(p_.dims[k], p_.dims[k]);
        z[k] = zeta * MatrixXd::Identity(p_.dims[k], p_.dims[k]);
    }

    constexpr double kDivergence = 1e12;
    int stalls = 0;
    for (int iter = 0; iter <= opt_.max_iterations; ++iter) {
        res.iterations = iter;
        const VectorXd rp = p_.rhs - apply(x);
        std::vector<MatrixXd> rd = adjoint(y);
        // Dual residual is judged relative to the data and to A*(y), whose
        // rounding error grows with |y| on nearly degenerate problems.
        const double aty_norm = max_abs(rd);
        for (std::size_t k = 0; k < nb; ++k) {
            rd[k] = p_.cost[k] - z[k] - rd[k];
        }
        const double pobj = inner(p_.cost, x);
        const double dobj = p_.rhs.dot(y);
        const double xz = inner(x, z);
        const double mu = xz / total_dim_;
        const double pinf = rp.size() ? rp.cwiseAbs().maxCoeff() : 0.0;
        const double dinf = max_abs(rd);
        const double gap = std::abs(pobj - dobj);
        const double scale = 1.0 + std::max(std::abs(pobj), std::abs(dobj));

        res.primal_objective = pobj;
        res.dual_objective = dobj;
        if (opt_.verbose) {
            std::fprintf(stderr, "%4d pobj %+.10e dobj %+.10e pinf %.2e dinf %.2e xz %.2e |x| %.2e |y| %.2e\n", iter,
                         pobj, dobj, pinf, dinf, xz, norm(x), y.norm());
        }
        if (gap <= opt_.gap_tolerance && xz <= opt_.gap_tolerance * scale && pinf <= opt_.residual_tolerance &&
            dinf <= opt_.residual_tolerance * (1.0 + std::max(c_norm, aty_norm))) {
            res.status = SdpStatus::Optimal;
            break;
        }
        if (xz <= 1e-16 * scale) {
            res.diagnostic = "complementarity exhausted before residuals converged (primal residual " +
                             std::to_string(pinf) + ", dual residual " + std::to_string(dinf) + ")";
            break;
        }
        if (norm(x) > kDivergence || y.norm() > kDivergence) {
            res.status = SdpStatus::Infeasible;
            res.diagnostic = norm(x) > kDivergence ? "primal iterates diverge: dual infeasible or primal unbounded"
                                                   : "dual iterates diverge: primal infeasible or dual unbounded";
            break;
        }
        if (iter == opt_.max_iterations) {
            res.diagnostic = "iteration cap reached (gap " + std::to_string(gap) + ", primal residual " +
                             std::to_string(pinf) + ", dual residual " + std::to_string(dinf) + ")";
            break;
        }

        for (std::size_t k = 0; k < nb; ++k) {
            Eigen::LLT<MatrixXd> llt(z[k]);
            zinv[k] = llt.solve(MatrixXd::Identity(p_.dims[k], p_.dims[k]));
            zinv[k] = 0.5 * (zinv[k] + zinv[k].transpose()).eval();
        }
        MatrixXd schur_matrix = schur(x, zinv);
        Eigen::LLT<MatrixXd> schur_llt(schur_matrix);
        // Near-degenerate faces make the Schur matrix numerically singular;
        // a small diagonal shift keeps the direction usable.
        for (double shift = 1e-14; schur_llt.info() != Eigen::Success && shift < 1e-6; shift *= 100.0) {
            const double diag = schur_matrix.diagonal().cwiseAbs().maxCoeff();
            schur_matrix.diagonal().array() += shift * std::max(diag, 1.0);
            schur_llt.compute(schur_matrix);
        }
        if (schur_llt.info() != Eigen::Success) {
            res.diagnostic = "Schur complement lost positive definiteness at iteration " + std::to_string(iter);
            break;
        }

        // Shared right-hand side pieces: rp + A(X) + A(X Rd Z^-1).
        std::vector<MatrixXd> x_rd_zinv(nb);
        for (std::size_t k = 0; k < nb; ++k) {
            x_rd_zinv[k].noalias() = x[k] * rd[k] * zinv[k];
        }
        const VectorXd rhs_base = rp + apply(x) + apply(x_rd_zinv);
        const VectorXd a_zinv = apply(zinv);

        auto direction = [&](double sigma_mu, const std::vector<MatrixXd> *corr, std::vector<MatrixXd> &dx,
                             VectorXd &dy, std::vector<MatrixXd> &dz) {
            VectorXd rhs = rhs_base - sigma_mu * a_zinv;
            if (corr) {
                rhs += apply(*corr);
            }
            dy = schur_llt.solve(rhs);
            dz = adjoint(dy);
            for (std::size_t k = 0; k < nb; ++k) {
                dz[k] = rd[k] - dz[k];
                MatrixXd d = sigma_mu * zinv[k] - x[k] - x[k] * dz[k] * zinv[k];
                if (corr) {
                    d -= (*corr)[k];
                }
                dx[k] = 0.5 * (d + d.transpose());
            }
        };

        std::vector<MatrixXd> dx(nb), dz(nb);
        VectorXd dy;
        direction(0.0, nullptr, dx, dy, dz);
        const double ap_aff = std::min(1.0, max_step(x, dx));
        const double ad_aff = std::min(1.0, max_step(z, dz));
        double xz_aff = 0.0;
        for (std::size_t k = 0; k < nb; ++k) {
            xz_aff += (x[k] + ap_aff * dx[k]).cwiseProduct(z[k] + ad_aff * dz[k]).sum();
        }
        const double sigma = std::clamp(std::pow(std::max(xz_aff, 0.0) / xz, 3.0), 0.0, 1.0);

        // Second-order (Mehrotra) term dX_aff dZ_aff Z^-1.
        std::vector<MatrixXd> corr(nb);
        for (std::size_t k = 0; k < nb; ++k) {
            corr[k].noalias() = dx[k] * dz[k] * zinv[k];
        }
        direction(sigma * mu, &corr, dx, dy, dz);

        const double ap = std::min(1.0, opt_.step_fraction * max_step(x, dx));
        const double ad = std::min(1.0, opt_.step_fraction * max_step(z, dz));
        for (std::size_t k = 0; k < nb; ++k) {
            x[k] += ap * dx[k];
            z[k] += ad * dz[k];
        }
        y += ad * dy;

        stalls = (ap < 1e-10 && ad < 1e-10) ? stalls + 1 : 0;
        if (stalls >= 5) {
            res.diagnostic = "interior point stalled (step lengths below 1e-10)";
            break;
        }
    }
    res.x = std::move(x);
    res.z = std::move(z);
    res.y = std::move(y);
    return res;
}

SdpSolution finish(const SdpProblem &problem, const RealResult &r, std::vector<MatrixXd> x_blocks) {
    SdpSolution sol;
    sol.status = r.status;
    sol.iterations = r.iterations;
    sol.diagnostic = r.diagnostic;
    const auto &dims = problem.block_dims();
    sol.min_block_eigenvalue = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < dims.size(); ++k) {
        sol.primal_blocks.push_back(extract_hermitian(x_blocks[k], dims[k]));
        sol.min_block_eigenvalue = std::min(sol.min_block_eigenvalue, min_eigenvalue(sol.primal_blocks.back()));
    }
    sol.constraint_residual = problem.constraint_residual(sol.primal_blocks);
    return sol;
}

}  // namespace

SdpSolution solve(const SdpProblem &problem, const SdpOptions &options) {
    if (problem.block_dims().empty()) {
        throw SdpError("solve: problem has no variable blocks");
    }
    RealProblem real = to_real(problem);
    require_full_row_rank(real);

    if (problem.sense() != SdpSense::Feasibility) {
        RealResult r = InteriorPoint(real, options).run();
        SdpSolution sol = finish(problem, r, r.x);
        const double sign = problem.sense() == SdpSense::Maximize ? -1.0 : 1.0;
        sol.dual_vector.assign(r.y.data(), r.y.data() + r.y.size());
        for (auto &v : sol.dual_vector) {
            v *= sign;
        }
        sol.objective_value = problem.objective_value(sol.primal_blocks);
        double dual = 0.0;
        for (std::size_t i = 0; i < sol.dual_vector.size(); ++i) {
            dual += sol.dual_vector[i] * problem.constraints()[i].rhs;
        }
        sol.dual_objective_value = dual;
        sol.duality_gap = std::abs(sol.objective_value - dual);
        return sol;
    }

    // Phase 1: X = Z + t I with t = 1 - u, minimize u >= 0 over Z >= 0. The
    // original system is feasible iff the optimal t is nonnegative.
    RealProblem phase1 = real;
    const std::size_t u_block = phase1.dims.size();
    phase1.dims.push_back(1);
    for (auto &c : phase1.cost) {
        c.setZero();
    }
    phase1.cost.push_back(MatrixXd::Constant(1, 1, 1.0));
    for (std::size_t i = 0; i < phase1.rows.size(); ++i) {
        double trace_sum = 0.0;
        for (const auto &t : phase1.rows[i]) {
            trace_sum += t.coefficient.trace();
        }
        phase1.rows[i].push_back({u_block, MatrixXd::Constant(1, 1, -trace_sum)});
        phase1.rhs(static_cast<Eigen::Index>(i)) -= trace_sum;
    }
    RealResult r = InteriorPoint(phase1, options).run();

    const double t = 1.0 - r.x[u_block](0, 0);
    std::vector<MatrixXd> x_blocks(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(u_block));
    for (auto &xb : x_blocks) {
        xb += t * MatrixXd::Identity(xb.rows(), xb.cols());
    }
    SdpSolution sol = finish(problem, r, std::move(x_blocks));
    sol.dual_vector.assign(r.y.data(), r.y.data() + r.y.size());
    sol.objective_value = t;
    sol.dual_objective_value = 1.0 - r.dual_objective;
    sol.duality_gap = std::abs(r.primal_objective - r.dual_objective);
    if (r.status != SdpStatus::Optimal) {
        return sol;
    }
    constexpr double kPsdSlack = 1e-8;
    if (t >= -kPsdSlack) {
        return sol;
    }

    // Phase-1 dual: -A*(y) >= 0 and (b - a).y = u* > 1 give the Farkas ray -y.
    std::vector<double> ray(sol.dual_vector.size());
    double scale = 0.0;
    for (std::size_t i = 0; i < ray.size(); ++i) {
        ray[i] = -sol.dual_vector[i];
        scale = std::max(scale, std::abs(ray[i]));
    }
    InfeasibilityCertificate cert;
    if (scale > 0.0) {
        for (auto &v : ray) {
            v /= scale;
        }
    }
    double by = 0.0;
    for (std::size_t i = 0; i < ray.size(); ++i) {
        by += ray[i] * problem.constraints()[i].rhs;
    }
    cert.margin = -by;
    cert.dual_slack_min_eigenvalue = std::numeric_limits<double>::infinity();
    for (const auto &block : problem.adjoint_map(ray)) {
        cert.dual_slack_min_eigenvalue = std::min(cert.dual_slack_min_eigenvalue, min_eigenvalue(block));
    }
    cert.y = std::move(ray);
    sol.status = SdpStatus::Infeasible;
    sol.certificate = std::move(cert);
    sol.diagnostic = "phase-1 optimum t = " + std::to_string(t) + " < 0";
    return sol;
}

void write_problem(std::ostream &out, const SdpProblem &problem) {
    const char *sense = problem.sense() == SdpSense::Maximize   ? "max"
                        : problem.sense() == SdpSense::Minimize ? "min"
                                                                : "feas";
    out << "sense " << sense << "\n";
    out << "blocks " << problem.block_dims().size();
    for (auto d : problem.block_dims()) {
        out << ' ' << d;
    }
    out << "\n";
    const auto prec = out.precision(17);
    auto entries = [&](const HermitianMatrix &h, auto &&emit) {
        for (std::size_t i = 0; i < h.dim(); ++i) {
            for (std::size_t j = i; j < h.dim(); ++j) {
                if (h(i, j) != Complex{0.0, 0.0}) {
                    emit(i, j, h(i, j) + Complex{0.0, 0.0});
                }
            }
        }
    };
    for (std::size_t k = 0; k < problem.block_dims().size(); ++k) {
        if (const auto &c = problem.objective()[k]) {
            entries(*c, [&](std::size_t i, std::size_t j, Complex v) {
                out << "objective " << k << ' ' << i << ' ' << j << ' ' << v.real() << ' ' << v.imag() << "\n";
            });
        }
    }
    for (std::size_t n = 0; n < problem.constraints().size(); ++n) {
        const auto &c = problem.constraints()[n];
        out << "constraint " << n << ' ' << c.rhs << "\n";
        for (const auto &term : c.terms) {
            entries(term.coefficient, [&](std::size_t i, std::size_t j, Complex v) {
                out << "term " << n << ' ' << term.block << ' ' << i << ' ' << j << ' ' << v.real() << ' '
                    << v.imag() << "\n";
            });
        }
    }
    out.precision(prec);
}

}  // namespace qlhv
