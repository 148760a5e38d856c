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

// qlhv: command-line front end.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_io.h"
#include "qlhv/bell.h"
#include "qlhv/joint_measurability.h"
#include "qlhv/lhv.h"
#include "qlhv/reproduce.h"
#include "qlhv/sdp.h"

#ifndef QLHV_VERSION
#define QLHV_VERSION "0.0.0"
#endif

namespace {

enum ExitCode { kOk = 0, kClaimFailure = 1, kUsage = 2, kSolver = 3 };

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Writes to stdout for "-" or an empty path, otherwise to the named file.
void emit(const std::string &path, const std::string &content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << content;
    out.close();
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

std::string six(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

qlhv::SdpOptions options_with(double tol) {
    qlhv::SdpOptions o;
    o.gap_tolerance = tol;
    return o;
}

struct JmArgs {
    std::string preset;
    std::string directions;
    std::string witness;
    double tol = 1e-7;
};

int run_jm_threshold(const JmArgs &args) {
    std::vector<qlhv::BlochVector> dirs;
    if (!args.directions.empty()) {
        std::ifstream in(args.directions);
        if (!in) {
            throw qlhv::cli::InputError("cannot open directions file '" + args.directions + "'");
        }
        const auto parsed = qlhv::cli::parse_directions(in, args.directions);
        for (const auto &w : parsed.warnings) {
            std::cerr << "warning: " << w << '\n';
        }
        dirs = parsed.directions;
    } else {
        dirs = qlhv::direction_preset(args.preset.empty() ? "fib12" : args.preset);
    }
    const qlhv::SdpOptions o = options_with(args.tol);
    const double eta = qlhv::eta_threshold(dirs, o);
    std::cout << six(eta) << '\n';
    if (!args.witness.empty()) {
        nlohmann::ordered_json j;
        j["eta_threshold"] = eta;
        auto measure = [&](double v) {
            std::vector<qlhv::Povm> ms;
            for (const auto &d : dirs) {
                ms.push_back(qlhv::noisy_povm(d, v));
            }
            return ms;
        };
        const double below = std::max(0.0, eta - 1e-4);
        const auto r_below = qlhv::jm_check(measure(below), o);
        if (r_below.joint_observable) {
            nlohmann::ordered_json effects = nlohmann::ordered_json::array();
            for (std::size_t k = 0; k < r_below.joint_observable->effects.size(); ++k) {
                const auto &e = r_below.joint_observable->effects[k];
                auto part = [&](auto get) {
                    return nlohmann::ordered_json{{get(e(0, 0)) + 0.0, get(e(0, 1)) + 0.0},
                                                  {get(e(1, 0)) + 0.0, get(e(1, 1)) + 0.0}};
                };
                effects.push_back({{"outcomes", r_below.joint_observable->outcome_vectors[k]},
                                   {"re", part([](qlhv::Complex z) { return z.real(); })},
                                   {"im", part([](qlhv::Complex z) { return z.imag(); })}});
            }
            j["joint_observable"] = {{"eta", below}, {"effects", effects}};
        }
        const double above = std::min(1.0, eta + 1e-4);
        const auto r_above = qlhv::jm_check(measure(above), o);
        if (r_above.infeasibility_certificate) {
            std::vector<double> y = r_above.infeasibility_certificate->y;
            for (double &v : y) {
                v += 0.0;
            }
            j["incompatibility_certificate"] = {{"eta", above},
                                                {"y", y},
                                                {"margin", r_above.infeasibility_certificate->margin}};
        }
        emit(args.witness, j.dump(2) + "\n");
    }
    return kOk;
}

struct CurveArgs {
    double mu = qlhv::kMuLhv;
    std::size_t grid = 256;
    double tol = 1e-7;
    std::string output = "-";
};

int run_lhv_curve(const CurveArgs &args) {
    const auto curve = qlhv::lhv_curve(args.mu, args.grid, options_with(args.tol));
    std::ostringstream csv;
    qlhv::cli::write_curve_csv(csv, curve);
    emit(args.output, csv.str());
    return kOk;
}

struct ReproduceArgs {
    qlhv::ReproductionConfig config;
    std::string output = "-";
};

int run_reproduce(const ReproduceArgs &args) {
    const qlhv::ReproductionReport report = qlhv::reproduce(args.config);
    emit(args.output, qlhv::cli::report_json(report, QLHV_VERSION) + "\n");
    for (const auto &c : report.claims) {
        std::cerr << (c.pass ? "PASS " : "FAIL ") << c.id;
        if (!c.error.empty()) {
            std::cerr << " (" << c.error << ")";
        }
        std::cerr << '\n';
    }
    return report.all_pass() ? kOk : kClaimFailure;
}

struct BellArgs {
    double theta = std::numbers::pi / 4.0;
    double eta = 1.0;
    std::string alice;
    std::string bob;
};

int run_bell_check(const BellArgs &args) {
    const qlhv::ChshSettings chsh = qlhv::chsh_settings();
    const auto alice_dirs = args.alice.empty() ? chsh.alice : qlhv::cli::parse_direction_list(args.alice);
    const auto bob_dirs = args.bob.empty() ? chsh.bob : qlhv::cli::parse_direction_list(args.bob);
    std::vector<qlhv::Povm> alice;
    std::vector<qlhv::Povm> bob;
    for (const auto &d : alice_dirs) {
        alice.push_back(qlhv::noisy_povm(d, args.eta));
    }
    for (const auto &d : bob_dirs) {
        bob.push_back(qlhv::noisy_povm(d, 1.0));
    }
    const qlhv::Behavior behavior = qlhv::build_behavior(qlhv::schmidt_state(args.theta), alice, bob);
    qlhv::cli::print_locality(std::cout, behavior, qlhv::is_local(behavior));
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Incompatibility and local-model thresholds for noisy qubit measurements"};
    app.set_version_flag("--version", std::string("qlhv ") + QLHV_VERSION);
    app.require_subcommand(1);

    JmArgs jm;
    auto *jm_cmd = app.add_subcommand("jm-threshold", "Largest visibility at which a direction set is jointly measurable");
    auto *preset_opt = jm_cmd->add_option("--preset", jm.preset, "pauli2, pauli3 or fib12 (default fib12)")
                           ->check(CLI::IsMember({"pauli2", "pauli3", "fib12"}));
    jm_cmd->add_option("--directions", jm.directions, "File with one direction per line")->excludes(preset_opt);
    jm_cmd->add_option("--witness", jm.witness, "Write parent POVM and incompatibility certificate near the threshold (JSON)");
    jm_cmd->add_option("--tol", jm.tol, "SDP duality-gap tolerance")->check(CLI::PositiveNumber);

    CurveArgs curve;
    auto *curve_cmd = app.add_subcommand("lhv-curve", "Certified local-model boundaries over the Schmidt angle (CSV)");
    curve_cmd->add_option("--mu", curve.mu, "Werner weight with a known local model")->check(CLI::Range(0.0, 1.0));
    curve_cmd->add_option("--grid", curve.grid, "Number of angles on [0, pi/4]")->check(CLI::Range(2, 100000));
    curve_cmd->add_option("--tol", curve.tol, "SDP duality-gap tolerance")->check(CLI::PositiveNumber);
    curve_cmd->add_option("--output", curve.output, "Output path, - for stdout");

    ReproduceArgs rep;
    auto *rep_cmd = app.add_subcommand("reproduce", "Run every benchmark claim and report as JSON");
    rep_cmd->add_option("--mu", rep.config.mu, "Werner weight with a known local model")->check(CLI::Range(0.0, 1.0));
    rep_cmd->add_option("--grid", rep.config.grid, "Number of angles on [0, pi/4]")->check(CLI::Range(50, 100000));
    rep_cmd->add_option("--tol", rep.config.tolerance, "SDP duality-gap tolerance")->check(CLI::PositiveNumber);
    rep_cmd->add_option("--seed", rep.config.seed, "Seed for the randomized checks");
    rep_cmd->add_option("--output", rep.output, "Output path, - for stdout");

    BellArgs bell;
    auto *bell_cmd = app.add_subcommand("bell-check", "Local-polytope membership of a two-qubit behavior");
    bell_cmd->add_option("--theta", bell.theta, "Schmidt angle in [0, pi/4]");
    bell_cmd->add_option("--eta", bell.eta, "Visibility of Alice's measurements")->check(CLI::Range(0.0, 1.0));
    bell_cmd->add_option("--alice", bell.alice, "Alice directions, e.g. \"z;x\" or \"0,0,1;1,0,0\" (default CHSH)");
    bell_cmd->add_option("--bob", bell.bob, "Bob directions, projective (default CHSH)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*jm_cmd) {
            return run_jm_threshold(jm);
        }
        if (*curve_cmd) {
            return run_lhv_curve(curve);
        }
        if (*rep_cmd) {
            return run_reproduce(rep);
        }
        if (*bell_cmd) {
            return run_bell_check(bell);
        }
    } catch (const qlhv::cli::InputError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception &e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kSolver;
    }
    return kUsage;
}
