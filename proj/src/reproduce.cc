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

#include "qlhv/reproduce.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qlhv/bell.h"
#include "qlhv/joint_measurability.h"
#include "qlhv/quantum.h"

namespace qlhv {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

Claim near(std::string id, int criterion, std::string description, double reference, double computed,
           double tolerance) {
    Claim c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.description = std::move(description);
    c.reference = reference;
    c.computed = computed;
    c.tolerance = tolerance;
    c.rule = "|computed - reference| <= tolerance";
    c.pass = std::abs(computed - reference) <= tolerance;
    return c;
}

Claim below(std::string id, int criterion, std::string description, double computed, double limit) {
    Claim c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.description = std::move(description);
    c.reference = 0.0;
    c.computed = computed;
    c.tolerance = limit;
    c.rule = "computed < tolerance";
    c.pass = computed < limit;
    return c;
}

Claim zero_count(std::string id, int criterion, std::string description, int failures) {
    Claim c;
    c.id = std::move(id);
    c.criterion = criterion;
    c.description = std::move(description);
    c.reference = 0.0;
    c.computed = failures;
    c.tolerance = 0.0;
    c.rule = "no failures";
    c.pass = failures == 0;
    return c;
}

SdpOptions solver_options(const ReproductionConfig &config) {
    SdpOptions o;
    o.gap_tolerance = config.tolerance;
    return o;
}

std::vector<Povm> noisy_set(const std::vector<BlochVector> &dirs, double eta) {
    std::vector<Povm> out;
    for (const auto &d : dirs) {
        out.push_back(noisy_povm(d, eta));
    }
    return out;
}

Behavior chsh_behavior(double theta, double eta) {
    const ChshSettings s = chsh_settings();
    return build_behavior(schmidt_state(theta), noisy_set(s.alice, eta), noisy_set(s.bob, 1.0));
}

struct Context {
    const ReproductionConfig &config;
    ReproductionReport &report;
    std::mt19937_64 rng;
    std::optional<CombinedThreshold> sdp_threshold;
    std::optional<double> fib12;
};

using ClaimFn = std::function<Claim(Context &)>;

struct Entry {
    std::string id;
    int criterion;
    std::string description;
    ClaimFn run;
};

const std::vector<Entry> &registry() {
    static const std::vector<Entry> entries = {
        {"eta_star_analytic", 1, "combined threshold, analytic decomposition branch",
         [](Context &ctx) {
             const CombinedThreshold t =
                 combined_threshold(ctx.config.mu, ctx.config.grid, CertificateBranch::AnalyticDecomposition);
             ctx.report.theta_star_analytic = t.theta_star;
             return near("", 0, "", 0.503, t.eta_star, 0.002);
         }},
        {"eta_star_sdp", 2, "combined threshold, SDP decomposition branch",
         [](Context &ctx) {
             ctx.sdp_threshold =
                 combined_threshold(ctx.config.mu, ctx.config.grid, CertificateBranch::Sdp, solver_options(ctx.config));
             ctx.report.theta_star_sdp = ctx.sdp_threshold->theta_star;
             return near("", 0, "", 0.515, ctx.sdp_threshold->eta_star, 0.003);
         }},
        {"jm_threshold_pauli2", 3, "incompatibility threshold of {x, z}",
         [](Context &ctx) {
             return near("", 0, "", 1.0 / std::sqrt(2.0),
                         eta_threshold(direction_preset("pauli2"), solver_options(ctx.config)), 1e-4);
         }},
        {"jm_threshold_pauli3", 3, "incompatibility threshold of {x, y, z}",
         [](Context &ctx) {
             return near("", 0, "", 1.0 / std::sqrt(3.0),
                         eta_threshold(direction_preset("pauli3"), solver_options(ctx.config)), 1e-4);
         }},
        {"jm_threshold_fib12", 4, "incompatibility threshold of the 12-direction hemisphere set",
         [](Context &ctx) {
             ctx.fib12 = eta_threshold(direction_preset("fib12"), solver_options(ctx.config));
             Claim c;
             c.reference = 0.512;
             c.computed = *ctx.fib12;
             c.rule = "0.5 < computed < 0.515";
             c.pass = *ctx.fib12 > 0.5 && *ctx.fib12 < 0.515;
             if (ctx.sdp_threshold) {
                 ctx.report.fib12_minus_eta_star_sdp = *ctx.fib12 - ctx.sdp_threshold->eta_star;
             }
             return c;
         }},
        {"fib12_incompatible_at_0515", 4, "12-direction set at eta = 0.515 has a verified incompatibility certificate",
         [](Context &ctx) {
             const auto ms = noisy_set(direction_preset("fib12"), 0.515);
             const IncompatibilityReport r = jm_check(ms, solver_options(ctx.config));
             Claim c;
             c.rule = "certificate margin > 1e-8 and PSD slack within 1e-8";
             if (r.infeasibility_certificate) {
                 const auto check = verify_incompatibility_certificate(*r.infeasibility_certificate, ms);
                 c.computed = check.margin;
                 c.pass = check.valid();
             }
             return c;
         }},
        {"equivalence_identity", 5, "max Born-rule discrepancy over 1000 random draws",
         [](Context &ctx) {
             std::uniform_real_distribution<double> th(0.0, kQuarterPi);
             std::uniform_real_distribution<double> et(0.0, 1.0);
             double worst = 0.0;
             for (int i = 0; i < 1000; ++i) {
                 const double theta = th(ctx.rng);
                 const double eta = et(ctx.rng);
                 const BlochVector x = BlochVector::random(ctx.rng);
                 const BlochVector y = BlochVector::random(ctx.rng);
                 worst = std::max(worst, check_equivalence(theta, eta, x, y));
             }
             return below("", 0, "", worst, 1e-12);
         }},
        {"diagonal_sigma", 6, "max off-diagonal mass of the analytic residual over 500 random draws",
         [](Context &ctx) {
             std::uniform_real_distribution<double> th(0.0, kQuarterPi);
             std::uniform_real_distribution<double> et(0.0, 1.0);
             const HermitianMatrix w = werner(ctx.config.mu).matrix();
             double worst = 0.0;
             for (int i = 0; i < 500; ++i) {
                 const double theta = th(ctx.rng);
                 const double eta = et(ctx.rng);
                 const double alpha = eta * std::sin(2.0 * theta) / ctx.config.mu;
                 const HermitianMatrix sigma = rho_theta_eta(theta, eta).matrix() - alpha * w;
                 worst = std::max(worst, off_diagonal_norm(sigma.matrix()));
             }
             return below("", 0, "", worst, 1e-12);
         }},
        {"werner_identification", 7, "max entry difference between rho(pi/4, eta) and werner(eta)",
         [](Context &) {
             double worst = 0.0;
             for (int i = 0; i <= 100; ++i) {
                 const double eta = i / 100.0;
                 worst = std::max(worst, max_abs_diff(rho_theta_eta(kQuarterPi, eta).matrix(), werner(eta).matrix()));
             }
             return below("", 0, "", worst, 1e-12);
         }},
        {"ppt_boundary", 7, "Werner weight where the PPT test flips",
         [](Context &) {
             double lo = 0.0;
             double hi = 1.0;
             while (hi - lo > 1e-10) {
                 const double mid = 0.5 * (lo + hi);
                 (ppt_check(werner(mid)) ? lo : hi) = mid;
             }
             return near("", 0, "", 1.0 / 3.0, 0.5 * (lo + hi), 1e-6);
         }},
        {"werner_sdp_eta", 7, "SDP decomposition bound at theta = pi/4",
         [](Context &ctx) {
             return near("", 0, "", ctx.config.mu,
                         sdp_eta_max(kQuarterPi, ctx.config.mu, solver_options(ctx.config)).eta, 1e-4);
         }},
        {"chsh_optimal", 8, "CHSH value for the optimal settings on the maximally entangled state",
         [](Context &) {
             double worst = 0.0;
             for (double eta : {1.0, 0.9, 0.75, 0.515, 0.3}) {
                 worst = std::max(worst, std::abs(chsh_value(chsh_behavior(kQuarterPi, eta)) -
                                                  2.0 * std::sqrt(2.0) * eta));
             }
             Claim c = below("", 0, "", worst, 1e-8);
             c.rule = "max |S - 2 sqrt2 eta| < tolerance";
             return c;
         }},
        {"chsh_locality_flip", 8, "visibility where the local-polytope verdict flips in the CHSH scenario",
         [](Context &) {
             double lo = 0.5;
             double hi = 1.0;
             while (hi - lo > 1e-7) {
                 const double mid = 0.5 * (lo + hi);
                 (is_local(chsh_behavior(kQuarterPi, mid)).local ? lo : hi) = mid;
             }
             return near("", 0, "", 1.0 / std::sqrt(2.0), 0.5 * (lo + hi), 1e-4);
         }},
        {"bell_local_sweep", 8, "nonlocal behaviors among sampled scenarios with eta = 0.515 Alice sets",
         [](Context &ctx) {
             std::uniform_real_distribution<double> th(0.0, kQuarterPi);
             std::uniform_int_distribution<int> n(2, static_cast<int>(kMaxBellSettings));
             const auto fib = direction_preset("fib12");
             int nonlocal = 0;
             for (int i = 0; i < 60; ++i) {
                 const std::size_t na = i < 10 ? kMaxBellSettings : static_cast<std::size_t>(n(ctx.rng));
                 const std::size_t nb = i < 10 ? kMaxBellSettings : static_cast<std::size_t>(n(ctx.rng));
                 std::vector<BlochVector> a;
                 std::vector<BlochVector> b;
                 for (std::size_t x = 0; x < na; ++x) {
                     a.push_back(i % 2 == 0 ? fib[(x + static_cast<std::size_t>(i)) % fib.size()]
                                            : BlochVector::random(ctx.rng));
                 }
                 for (std::size_t y = 0; y < nb; ++y) {
                     b.push_back(BlochVector::random(ctx.rng));
                 }
                 const Behavior beh =
                     build_behavior(schmidt_state(th(ctx.rng)), noisy_set(a, 0.515), noisy_set(b, 1.0));
                 if (!is_local(beh).local) {
                     ++nonlocal;
                 }
             }
             return zero_count("", 0, "", nonlocal);
         }},
        {"sdp_self_certification", 9, "SDP answers failing independent re-verification",
         [](Context &ctx) {
             const SdpOptions o = solver_options(ctx.config);
             int failures = 0;
             for (double theta : {0.0, 0.05, 0.2, 0.4, 0.55, 0.6, 0.7, kQuarterPi}) {
                 if (!verify_witness(sdp_eta_max(theta, ctx.config.mu, o).witness).valid()) {
                     ++failures;
                 }
             }
             const std::vector<std::pair<std::string, double>> cases = {
                 {"pauli2", 0.70}, {"pauli2", 0.72}, {"pauli3", 0.55}, {"pauli3", 0.60}, {"fib12", 0.50}};
             for (const auto &[name, eta] : cases) {
                 const auto ms = noisy_set(direction_preset(name), eta);
                 const IncompatibilityReport r = jm_check(ms, o);
                 const bool ok = r.jointly_measurable
                                     ? verify_joint_observable(*r.joint_observable, ms).valid()
                                     : verify_incompatibility_certificate(*r.infeasibility_certificate, ms).valid();
                 if (!ok) {
                     ++failures;
                 }
             }
             return zero_count("", 0, "", failures);
         }},
        {"lp_self_certification", 9, "LP answers failing independent re-verification",
         [](Context &ctx) {
             int failures = 0;
             std::uniform_real_distribution<double> th(0.0, kQuarterPi);
             std::uniform_real_distribution<double> et(0.3, 1.0);
             for (int i = 0; i < 40; ++i) {
                 const double theta = i < 20 ? kQuarterPi : th(ctx.rng);
                 const LocalityResult r = is_local(chsh_behavior(theta, et(ctx.rng)));
                 const bool ok = r.local ? r.reconstruction_error <= 1e-8 : r.margin > 1e-8;
                 if (!ok) {
                     ++failures;
                 }
             }
             return zero_count("", 0, "", failures);
         }},
        {"busch_agreement", 9, "disagreements between the SDP and the pair criterion over 500 random pairs",
         [](Context &ctx) {
             std::uniform_real_distribution<double> et(0.0, 1.0);
             const SdpOptions o = solver_options(ctx.config);
             int disagreements = 0;
             int done = 0;
             while (done < 500) {
                 const BlochVector d1 = BlochVector::random(ctx.rng);
                 const BlochVector d2 = BlochVector::random(ctx.rng);
                 const double eta = et(ctx.rng);
                 // Skip draws within 1e-6 of the boundary, where either verdict is
                 // within solver tolerance.
                 double s = 0.0;
                 double d = 0.0;
                 for (int k = 0; k < 3; ++k) {
                     s += std::pow(d1.components()[k] + d2.components()[k], 2);
                     d += std::pow(d1.components()[k] - d2.components()[k], 2);
                 }
                 if (std::abs(eta * (std::sqrt(s) + std::sqrt(d)) - 2.0) < 1e-6) {
                     continue;
                 }
                 ++done;
                 const bool sdp = jm_check({noisy_povm(d1, eta), noisy_povm(d2, eta)}, o).jointly_measurable;
                 if (sdp != busch_pair_criterion(d1, d2, eta)) {
                     ++disagreements;
                 }
             }
             return zero_count("", 0, "", disagreements);
         }},
    };
    return entries;
}

}  // namespace

bool ReproductionReport::all_pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim &c) { return c.pass; });
}

const std::vector<std::string> &claim_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto &e : registry()) {
            out.push_back(e.id);
        }
        return out;
    }();
    return ids;
}

ReproductionReport reproduce(const ReproductionConfig &config) {
    if (!(config.mu > 0.0 && config.mu <= 1.0)) {
        throw std::invalid_argument("reproduce: mu must lie in (0, 1]");
    }
    if (config.grid < 50) {
        throw std::invalid_argument("reproduce: grid must be at least 50");
    }
    if (!(config.tolerance > 0.0)) {
        throw std::invalid_argument("reproduce: tolerance must be positive");
    }
    ReproductionReport report;
    report.config = config;
    Context ctx{config, report, std::mt19937_64(config.seed), std::nullopt, std::nullopt};
    for (const auto &e : registry()) {
        Claim c;
        try {
            c = e.run(ctx);
        } catch (const std::exception &ex) {
            c = Claim{};
            c.pass = false;
            c.computed = std::nan("");
            c.error = ex.what();
        }
        c.id = e.id;
        c.criterion = e.criterion;
        c.description = e.description;
        report.claims.push_back(std::move(c));
    }
    return report;
}

}  // namespace qlhv
