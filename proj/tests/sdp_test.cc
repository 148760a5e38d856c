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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "qlhv/quantum.h"

namespace qlhv {
namespace {

HermitianMatrix scalar(double v) { return HermitianMatrix::diagonal({v}); }

const std::vector<HermitianMatrix> &qubit_basis() {
    static const std::vector<HermitianMatrix> b = {pauli::identity(), pauli::x(), pauli::y(), pauli::z()};
    return b;
}

/// Real-linear functionals Re tr(B X) spanning the 4x4 Hermitian matrices.
std::vector<HermitianMatrix> basis4() {
    std::vector<HermitianMatrix> out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i; j < 4; ++j) {
            ComplexMatrix re(4, 4);
            re(i, j) += 0.5;
            re(j, i) += 0.5;
            out.emplace_back(re);
            if (i != j) {
                ComplexMatrix im(4, 4);
                im(i, j) = Complex(0, 0.5);
                im(j, i) = Complex(0, -0.5);
                out.emplace_back(im);
            }
        }
    }
    return out;
}

HermitianMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Complex(g(rng), g(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return HermitianMatrix(m);
}

/// Re-derives residual and spectrum from the returned blocks.
void expect_certified(const SdpProblem &p, const SdpSolution &s) {
    ASSERT_EQ(s.status, SdpStatus::Optimal) << s.diagnostic;
    double min_ev = std::numeric_limits<double>::infinity();
    for (const auto &b : s.primal_blocks) {
        min_ev = std::min(min_ev, herm_eigenvalues(b).front());
    }
    EXPECT_GE(min_ev, -1e-8);
    EXPECT_LE(p.constraint_residual(s.primal_blocks), 1e-8);
    EXPECT_NEAR(p.constraint_residual(s.primal_blocks), s.constraint_residual, 1e-12);
    EXPECT_NEAR(min_ev, s.min_block_eigenvalue, 1e-9);
    EXPECT_LE(s.duality_gap, 1e-7 * (1.0 + std::abs(s.objective_value)));
}

/// Dual feasibility of the returned multipliers: A*(y) - C >= 0 when
/// maximizing, C - A*(y) >= 0 when minimizing.
void expect_dual_feasible(const SdpProblem &p, const SdpSolution &s) {
    const auto aty = p.adjoint_map(s.dual_vector);
    const double sign = p.sense() == SdpSense::Maximize ? 1.0 : -1.0;
    for (std::size_t k = 0; k < aty.size(); ++k) {
        HermitianMatrix slack = aty[k];
        if (p.objective()[k]) {
            slack -= *p.objective()[k];
        }
        EXPECT_GE(min_eigenvalue(sign * slack), -1e-6) << "block " << k;
    }
    // Weak duality at the returned pair, up to solver tolerance.
    if (p.sense() == SdpSense::Maximize) {
        EXPECT_LE(s.objective_value, s.dual_objective_value + 1e-7);
    } else {
        EXPECT_GE(s.objective_value, s.dual_objective_value - 1e-7);
    }
}

TEST(Sdp, LargestMultipleOfIdentityBelowDiagonal) {
    // maximize t subject to diag(2, 3) - t 1 = S >= 0.
    SdpProblem p(SdpSense::Maximize);
    const auto t = p.add_block(1);
    const auto s = p.add_block(2);
    p.set_objective(t, scalar(1.0));
    const HermitianMatrix d = HermitianMatrix::diagonal({2.0, 3.0});
    for (const auto &b : qubit_basis()) {
        p.add_constraint({{{s, b}, {t, scalar(b.trace())}}, trace_inner(b, d)});
    }
    const SdpSolution sol = solve(p);
    expect_certified(p, sol);
    expect_dual_feasible(p, sol);
    EXPECT_NEAR(sol.objective_value, 2.0, 1e-7);
}

TEST(Sdp, FeasibilityFindsMaximallyMixedQubit) {
    SdpProblem p(SdpSense::Feasibility);
    const auto x = p.add_block(2);
    p.add_constraint({{{x, pauli::identity()}}, 1.0});
    p.add_constraint({{{x, pauli::z()}}, 0.0});
    const SdpSolution sol = solve(p);
    expect_certified(p, sol);
    EXPECT_NEAR(sol.primal_blocks[x](0, 0).real(), 0.5, 1e-8);
    EXPECT_NEAR(sol.primal_blocks[x](1, 1).real(), 0.5, 1e-8);
    EXPECT_FALSE(sol.certificate.has_value());
}

TEST(Sdp, InfeasibleSystemYieldsCheckableCertificate) {
    // tr X = 1 and tr(sigma_z X) = 2 cannot both hold for X >= 0.
    SdpProblem p(SdpSense::Feasibility);
    const auto x = p.add_block(2);
    p.add_constraint({{{x, pauli::identity()}}, 1.0});
    p.add_constraint({{{x, pauli::z()}}, 2.0});
    const SdpSolution sol = solve(p);
    ASSERT_EQ(sol.status, SdpStatus::Infeasible);
    ASSERT_TRUE(sol.certificate.has_value());
    const auto &y = sol.certificate->y;
    const HermitianMatrix aty = y[0] * pauli::identity() + y[1] * pauli::z();
    EXPECT_GE(min_eigenvalue(aty), -1e-8);
    const double by = y[0] * 1.0 + y[1] * 2.0;
    EXPECT_LT(by, -1e-8);
    EXPECT_NEAR(sol.certificate->margin, -by, 1e-12);
}

TEST(Sdp, WernerPptThreshold) {
    // maximize mu subject to PT(werner(mu)) = S >= 0, with werner(mu) affine in mu.
    SdpProblem p(SdpSense::Maximize);
    const auto mu = p.add_block(1);
    const auto s = p.add_block(4);
    p.set_objective(mu, scalar(1.0));
    const HermitianMatrix w0 = partial_transpose(werner(0.0).matrix(), Subsystem::B);
    const HermitianMatrix dw = partial_transpose(werner(1.0).matrix(), Subsystem::B) - w0;
    for (const auto &b : basis4()) {
        p.add_constraint({{{s, b}, {mu, scalar(-trace_inner(b, dw))}}, trace_inner(b, w0)});
    }
    const SdpSolution sol = solve(p);
    expect_certified(p, sol);
    expect_dual_feasible(p, sol);
    EXPECT_NEAR(sol.objective_value, 1.0 / 3.0, 1e-7);
}

TEST(Sdp, LargestEigenvalueOfRandomHermitian) {
    std::mt19937_64 rng(17);
    for (std::size_t n : {2u, 3u, 4u, 6u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const HermitianMatrix c = random_hermitian(n, rng);
            for (SdpSense sense : {SdpSense::Maximize, SdpSense::Minimize}) {
                SdpProblem p(sense);
                const auto x = p.add_block(n);
                p.set_objective(x, c);
                p.add_constraint({{{x, HermitianMatrix::identity(n)}}, 1.0});
                const SdpSolution sol = solve(p);
                expect_certified(p, sol);
                expect_dual_feasible(p, sol);
                const auto ev = herm_eigenvalues(c);
                const double expected = sense == SdpSense::Maximize ? ev.back() : ev.front();
                EXPECT_NEAR(sol.objective_value, expected, 1e-6 * (1.0 + std::abs(expected)));
            }
        }
    }
}

TEST(Sdp, RejectsLinearlyDependentConstraints) {
    SdpProblem p(SdpSense::Feasibility);
    const auto x = p.add_block(2);
    p.add_constraint({{{x, pauli::identity()}}, 1.0});
    p.add_constraint({{{x, pauli::z()}}, 0.0});
    p.add_constraint({{{x, pauli::identity() + pauli::z()}}, 1.0});
    EXPECT_THROW(solve(p), SdpError);
}

TEST(Sdp, RejectsMalformedProblems) {
    SdpProblem empty;
    EXPECT_THROW(solve(empty), SdpError);
    SdpProblem p;
    EXPECT_THROW(p.add_block(0), SdpError);
    const auto x = p.add_block(2);
    EXPECT_THROW(p.add_constraint({{{x + 1, pauli::identity()}}, 1.0}), SdpError);
    EXPECT_THROW(p.add_constraint({{{x, HermitianMatrix::identity(3)}}, 1.0}), SdpError);
}

TEST(Sdp, IterationCapIsReportedNotThrown) {
    SdpProblem p(SdpSense::Maximize);
    const auto x = p.add_block(3);
    std::mt19937_64 rng(5);
    p.set_objective(x, random_hermitian(3, rng));
    p.add_constraint({{{x, HermitianMatrix::identity(3)}}, 1.0});
    SdpOptions o;
    o.max_iterations = 2;
    const SdpSolution sol = solve(p, o);
    EXPECT_EQ(sol.status, SdpStatus::MaxIterations);
    EXPECT_FALSE(sol.diagnostic.empty());
}

TEST(Embedding, RoundTripIsExact) {
    std::mt19937_64 rng(23);
    for (std::size_t n : {1u, 2u, 4u, 7u}) {
        const HermitianMatrix h = random_hermitian(n, rng);
        const Eigen::MatrixXd e = embed_hermitian(h);
        ASSERT_EQ(static_cast<std::size_t>(e.rows()), n == 1 ? 1u : 2 * n);
        EXPECT_EQ(extract_hermitian(e, n), h);
    }
}

TEST(Embedding, SpectrumDoubles) {
    std::mt19937_64 rng(29);
    const HermitianMatrix h = random_hermitian(3, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(embed_hermitian(h));
    const auto ev = herm_eigenvalues(h);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(es.eigenvalues()(static_cast<Eigen::Index>(2 * i)), ev[i], 1e-12);
        EXPECT_NEAR(es.eigenvalues()(static_cast<Eigen::Index>(2 * i + 1)), ev[i], 1e-12);
    }
}

TEST(WriteProblem, DumpsBlocksObjectiveAndTerms) {
    SdpProblem p(SdpSense::Maximize);
    const auto t = p.add_block(1);
    const auto x = p.add_block(2);
    p.set_objective(t, scalar(1.0));
    p.add_constraint({{{x, pauli::y()}, {t, scalar(2.0)}}, 0.5});
    std::ostringstream out;
    write_problem(out, p);
    const std::string s = out.str();
    EXPECT_NE(s.find("sense max\n"), std::string::npos);
    EXPECT_NE(s.find("blocks 2 1 2\n"), std::string::npos);
    EXPECT_NE(s.find("objective 0 0 0 1 0\n"), std::string::npos);
    EXPECT_NE(s.find("constraint 0 0.5\n"), std::string::npos);
    EXPECT_NE(s.find("term 0 1 0 1 0 -1\n"), std::string::npos);
    EXPECT_NE(s.find("term 0 0 0 0 2 0\n"), std::string::npos);
}

}  // namespace
}  // namespace qlhv
