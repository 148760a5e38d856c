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

#include "qlhv/lhv.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace qlhv {
namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

TEST(Condition9, Examples) {
    for (double theta : {0.0, 0.2, 0.5, kQuarterPi}) {
        EXPECT_TRUE(condition9(theta, 0.5));
        EXPECT_TRUE(condition9(theta, 0.0));
    }
    EXPECT_FALSE(condition9(kQuarterPi, 0.51));
    for (double eta : {0.6, 0.9, 1.0}) {
        EXPECT_TRUE(condition9(0.0, eta));
    }
}

TEST(Condition9, ProductStatePolynomialHoldsOnUnitInterval) {
    // (2 - eta) eta^3 >= 2 eta - 1 on [0, 1].
    for (int i = 0; i <= 1000; ++i) {
        const double eta = i / 1000.0;
        EXPECT_GE((2.0 - eta) * eta * eta * eta - (2.0 * eta - 1.0), -1e-15);
        EXPECT_TRUE(condition9(0.0, eta));
    }
}

TEST(Condition9, BoundaryMatchesPredicate) {
    for (double theta : {0.0, 0.1, 0.3, 0.5, 0.7, kQuarterPi}) {
        const double b = condition9_boundary(theta);
        EXPECT_GE(b, 0.5);
        EXPECT_LE(b, 1.0);
        EXPECT_TRUE(condition9(theta, b));
        if (b < 1.0) {
            EXPECT_FALSE(condition9(theta, std::min(1.0, b + 1e-9)));
        }
    }
    EXPECT_NEAR(condition9_boundary(kQuarterPi), 0.5, 1e-12);
    EXPECT_EQ(condition9_boundary(0.0), 1.0);
}

TEST(Condition9, BoundaryFallsWithAngle) {
    double previous = 1.0;
    for (int i = 0; i <= 100; ++i) {
        const double b = condition9_boundary(kQuarterPi * i / 100.0);
        EXPECT_LE(b, previous + 1e-12);
        previous = b;
    }
}

TEST(AnalyticDecomposition, WernerBoundaryCase) {
    const auto r = analytic_decomposition(kQuarterPi, 0.66, 0.66);
    ASSERT_TRUE(r.witness.has_value()) << r.refusal;
    EXPECT_NEAR(r.witness->alpha, 1.0, 1e-12);
    EXPECT_LT(max_abs_diff(r.witness->sigma, HermitianMatrix::zeros(4)), 1e-12);
    EXPECT_TRUE(verify_witness(*r.witness).valid());
}

TEST(AnalyticDecomposition, Refusals) {
    EXPECT_FALSE(analytic_decomposition(kQuarterPi, 0.7, 0.66).witness.has_value());
    const auto r = analytic_decomposition(0.3, 0.9, 0.66);
    EXPECT_FALSE(r.witness.has_value());
    EXPECT_FALSE(r.refusal.empty());
    EXPECT_THROW(analytic_decomposition(0.3, 0.5, 1.0), std::invalid_argument);
}

TEST(AnalyticDecomposition, ResidualIsDiagonalForAllParameters) {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> th(0.0, kQuarterPi);
    std::uniform_real_distribution<double> et(0.0, 1.0);
    const HermitianMatrix w = werner(kMuLhv).matrix();
    for (int rep = 0; rep < 500; ++rep) {
        const double theta = th(rng);
        const double eta = et(rng);
        const double alpha = eta * std::sin(2.0 * theta) / kMuLhv;
        const HermitianMatrix sigma = rho_theta_eta(theta, eta).matrix() - alpha * w;
        ASSERT_LT(off_diagonal_norm(sigma.matrix()), 1e-12);
    }
}

TEST(AnalyticBound, Examples) {
    EXPECT_NEAR(analytic_eta_bound(kQuarterPi, 0.66), 0.66, 1e-12);
    const double cot = 1.0 / std::tan(std::numbers::pi / 8);
    EXPECT_NEAR(cot, 1.0 + std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(analytic_eta_bound(std::numbers::pi / 8, 0.66), 0.66 / (1.66 * cot - 0.66), 1e-12);
    EXPECT_NEAR(analytic_eta_bound(std::numbers::pi / 8, 0.66), 0.1971565, 1e-6);
    EXPECT_EQ(analytic_eta_bound(0.0, 0.66), 0.0);
    EXPECT_LT(analytic_eta_bound(1e-8, 0.66), 1e-7);
}

TEST(AnalyticBound, CoincidesWithAcceptanceRegion) {
    for (int i = 1; i <= 64; ++i) {
        const double theta = kQuarterPi * i / 64.0;
        for (double mu : {0.4, kMuLhv, 0.9}) {
            double lo = 0.0;
            double hi = 1.0;
            if (analytic_decomposition(theta, hi, mu).witness) {
                lo = hi;
            }
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                (analytic_decomposition(theta, mid, mu).witness ? lo : hi) = mid;
            }
            EXPECT_NEAR(lo, std::min(1.0, analytic_eta_bound(theta, mu)), 1e-9) << "theta=" << theta << " mu=" << mu;
        }
    }
}

TEST(AnalyticDecomposition, WitnessesBelowBoundAreValid) {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> th(1e-3, kQuarterPi);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 300; ++rep) {
        const double theta = th(rng);
        const double eta = u(rng) * analytic_eta_bound(theta, kMuLhv);
        const auto r = analytic_decomposition(theta, eta, kMuLhv);
        ASSERT_TRUE(r.witness.has_value()) << r.refusal;
        const WitnessCheck c = verify_witness(*r.witness);
        EXPECT_TRUE(c.valid());
    }
}

TEST(SdpEtaMax, ProductStateAtZeroAngle) {
    const SdpEtaResult r = sdp_eta_max(0.0, kMuLhv);
    EXPECT_NEAR(r.eta, 1.0, 1e-6);
    EXPECT_NEAR(r.witness.alpha, 0.0, 1e-6);
    EXPECT_TRUE(verify_witness(r.witness).valid());
}

TEST(SdpEtaMax, WernerClosedForm) {
    const SdpEtaResult r = sdp_eta_max(kQuarterPi, kMuLhv);
    EXPECT_NEAR(r.eta, 0.66, 1e-6);
    EXPECT_NEAR(r.witness.alpha, 1.0, 1e-6);
    EXPECT_TRUE(verify_witness(r.witness).valid());
    for (double mu : {0.4, 0.8}) {
        EXPECT_NEAR(sdp_eta_max(kQuarterPi, mu).eta, mu, 1e-6);
    }
}

TEST(SdpEtaMax, SmallAnglesStayOnTheSeparablePlateau) {
    for (double theta : {1e-6, 1e-3, 1e-2, 0.1}) {
        const SdpEtaResult r = sdp_eta_max(theta, kMuLhv);
        EXPECT_NEAR(r.eta, 1.0 / 3.0, 1e-6) << theta;
        EXPECT_TRUE(verify_witness(r.witness).valid());
    }
}

TEST(SdpEtaMax, RejectsBadParameters) {
    EXPECT_THROW(sdp_eta_max(-0.1, kMuLhv), std::invalid_argument);
    EXPECT_THROW(sdp_eta_max(0.3, 0.0), std::invalid_argument);
}

TEST(LhvCurve, DominanceWitnessesAndShape) {
    const auto curve = lhv_curve(kMuLhv, 128);
    ASSERT_EQ(curve.size(), 128u);
    EXPECT_EQ(curve.front().theta, 0.0);
    EXPECT_NEAR(curve.back().theta, kQuarterPi, 1e-15);
    EXPECT_NEAR(curve.front().eta_sdp, 1.0, 1e-6);
    EXPECT_NEAR(curve.back().eta_sdp, kMuLhv, 1e-6);
    for (std::size_t i = 0; i < curve.size(); ++i) {
        EXPECT_GE(curve[i].eta_sdp, curve[i].eta_analytic_decomp - 1e-6) << curve[i].theta;
        if (i >= 2) {
            // Rises with the angle once the state is entangled.
            EXPECT_GE(curve[i].eta_sdp, curve[i - 1].eta_sdp - 1e-6) << curve[i].theta;
        }
    }
    EXPECT_LT(curve[1].eta_sdp, curve[0].eta_sdp - 0.5);
    for (std::size_t i = 0; i < curve.size(); i += 16) {
        EXPECT_TRUE(verify_witness(sdp_eta_max(curve[i].theta, kMuLhv).witness).valid());
    }
}

TEST(CombinedThreshold, AnalyticBranch) {
    const CombinedThreshold t = combined_threshold(kMuLhv, 256, CertificateBranch::AnalyticDecomposition);
    EXPECT_NEAR(t.eta_star, 0.503, 0.002);
    EXPECT_GT(t.eta_star, 0.5);
    EXPECT_EQ(t.curve.size(), 256u);
    EXPECT_TRUE(std::isnan(t.curve[10].eta_sdp));
    EXPECT_NEAR(condition9_boundary(t.theta_star), analytic_eta_bound(t.theta_star, kMuLhv), 1e-4);
}

TEST(CombinedThreshold, SdpBranch) {
    const CombinedThreshold t = combined_threshold(kMuLhv, 256, CertificateBranch::Sdp);
    EXPECT_NEAR(t.eta_star, 0.515, 0.003);
    EXPECT_GT(t.eta_star, 0.5);
    EXPECT_NEAR(condition9_boundary(t.theta_star), sdp_eta_max(t.theta_star, kMuLhv).eta, 1e-4);
    // No grid angle is left uncovered below eta_star.
    for (const auto &p : t.curve) {
        EXPECT_GE(std::max(p.eta_condition9, p.eta_sdp), t.eta_star - 1e-9);
    }
}

TEST(CombinedThreshold, RequiresFineGrid) {
    EXPECT_THROW(combined_threshold(kMuLhv, 49, CertificateBranch::Sdp), std::invalid_argument);
}

TEST(PptCheck, Examples) {
    EXPECT_TRUE(ppt_check(werner(0.0)));
    EXPECT_FALSE(ppt_check(werner(1.0)));
    EXPECT_FALSE(ppt_check(werner(0.5)));
    EXPECT_TRUE(ppt_check(werner(1.0 / 3.0)));
    EXPECT_TRUE(ppt_check(werner(1.0 / 3.0 - 1e-6)));
    EXPECT_FALSE(ppt_check(werner(1.0 / 3.0 + 1e-6)));
    EXPECT_THROW(ppt_check(DensityMatrix(0.5 * HermitianMatrix::identity(2))), std::invalid_argument);
}

TEST(VerifyWitness, DetectsBrokenDecomposition) {
    DecompositionWitness w{0.3, 0.5, 0.2, kMuLhv, rho_theta_eta(0.3, 0.5).matrix()};
    const WitnessCheck c = verify_witness(w);
    EXPECT_FALSE(c.valid());
    EXPECT_GT(c.decomposition_error, 1e-3);
}

}  // namespace
}  // namespace qlhv
