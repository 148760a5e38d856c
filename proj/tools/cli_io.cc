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

#include "cli_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qlhv::cli {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool parse_double(const std::string &token, double &value) {
    const char *first = token.data();
    const char *last = token.data() + token.size();
    if (first != last && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last && std::isfinite(value);
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

ParsedDirections parse_directions(std::istream &in, const std::string &source) {
    ParsedDirections out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string t; fields >> t;) {
            tokens.push_back(t);
        }
        if (tokens.empty()) {
            continue;
        }
        const std::string where = source + ":" + std::to_string(number) + ": ";
        if (tokens.size() != 3) {
            throw InputError(where + "expected three numbers, found " + std::to_string(tokens.size()) + " fields");
        }
        double v[3];
        for (int k = 0; k < 3; ++k) {
            if (!parse_double(tokens[k], v[k])) {
                throw InputError(where + "'" + tokens[k] + "' is not a number");
            }
        }
        const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (norm == 0.0) {
            throw InputError(where + "zero vector has no direction");
        }
        if (std::abs(norm - 1.0) > 1e-6) {
            out.warnings.push_back(where + "norm " + fixed(norm, 9) + " rescaled to 1");
        }
        out.directions.push_back(BlochVector::normalized(v[0], v[1], v[2]));
    }
    if (in.bad()) {
        throw InputError(source + ": read error");
    }
    if (out.directions.empty()) {
        throw InputError(source + ": no directions");
    }
    return out;
}

std::vector<BlochVector> parse_direction_list(const std::string &text) {
    std::vector<BlochVector> out;
    for (const std::string &raw : split(text, ';')) {
        const std::string item = trim(raw);
        if (item.empty()) {
            throw InputError("empty direction in '" + text + "'");
        }
        const bool negative = item.size() == 2 && item[0] == '-';
        const std::string axis = negative ? item.substr(1) : item;
        if (axis == "x" || axis == "y" || axis == "z") {
            BlochVector d = axis == "x" ? BlochVector::unit_x() : axis == "y" ? BlochVector::unit_y() : BlochVector::unit_z();
            out.push_back(negative ? -d : d);
            continue;
        }
        const auto parts = split(item, ',');
        if (parts.size() != 3) {
            throw InputError("direction '" + item + "' must be x, y, z or three comma-separated numbers");
        }
        double v[3];
        for (int k = 0; k < 3; ++k) {
            if (!parse_double(trim(parts[k]), v[k])) {
                throw InputError("direction '" + item + "': '" + trim(parts[k]) + "' is not a number");
            }
        }
        if (v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0) {
            throw InputError("direction '" + item + "' is the zero vector");
        }
        out.push_back(BlochVector::normalized(v[0], v[1], v[2]));
    }
    return out;
}

void write_curve_csv(std::ostream &out, const std::vector<LhvCurvePoint> &curve) {
    out << "theta,eta_condition9,eta_analytic_decomp,eta_sdp\n";
    for (const auto &p : curve) {
        out << fixed(p.theta, 12) << ',' << fixed(p.eta_condition9, 12) << ',' << fixed(p.eta_analytic_decomp, 12)
            << ',' << fixed(p.eta_sdp, 12) << '\n';
    }
}

std::string report_json(const ReproductionReport &report, const std::string &version) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["tool"] = "qlhv";
    j["version"] = version;
    j["config"] = {{"mu", report.config.mu},
                   {"grid", report.config.grid},
                   {"tol", report.config.tolerance},
                   {"seed", report.config.seed}};
    j["all_pass"] = report.all_pass();
    ordered_json claims = ordered_json::array();
    for (const Claim &c : report.claims) {
        ordered_json e;
        e["id"] = c.id;
        e["criterion"] = c.criterion;
        e["description"] = c.description;
        e["reference"] = c.reference ? ordered_json(*c.reference) : ordered_json(nullptr);
        e["computed"] = std::isfinite(c.computed) ? ordered_json(c.computed) : ordered_json(nullptr);
        e["tolerance"] = c.tolerance ? ordered_json(*c.tolerance) : ordered_json(nullptr);
        e["rule"] = c.rule;
        e["pass"] = c.pass;
        if (!c.error.empty()) {
            e["error"] = c.error;
        }
        claims.push_back(std::move(e));
    }
    j["claims"] = std::move(claims);
    j["context"] = {{"theta_star_analytic", report.theta_star_analytic},
                    {"theta_star_sdp", report.theta_star_sdp},
                    {"fib12_minus_eta_star_sdp", report.fib12_minus_eta_star_sdp}};
    return j.dump(2);
}

void print_locality(std::ostream &out, const Behavior &behavior, const LocalityResult &result) {
    out << (result.local ? "local" : "nonlocal");
    if (behavior.n_settings_a() == 2 && behavior.n_settings_b() == 2) {
        out << ", S=" << fixed(chsh_value(behavior), 6);
    }
    out << '\n';
    const std::size_t na = behavior.n_settings_a();
    const std::size_t nb = behavior.n_settings_b();
    auto signs = [](const std::vector<int> &v) {
        std::string s;
        for (int o : v) {
            s += o > 0 ? '+' : '-';
        }
        return s;
    };
    if (result.local) {
        out << "weights (A outcomes | B outcomes : weight), reconstruction error "
            << fixed(result.reconstruction_error, 12) << '\n';
        for (std::size_t k = 0; k < result.weights.size(); ++k) {
            if (result.weights[k] > 1e-12) {
                const auto s = DeterministicStrategy::from_index(na, nb, k);
                out << "  " << signs(s.assign_a) << " | " << signs(s.assign_b) << " : " << fixed(result.weights[k], 9)
                    << '\n';
            }
        }
        return;
    }
    out << "functional (x y a b : coefficient)\n";
    for (std::size_t x = 0; x < na; ++x) {
        for (std::size_t y = 0; y < nb; ++y) {
            for (int a : kOutcomes) {
                for (int b : kOutcomes) {
                    const double c = result.functional[behavior.index(x, y, a, b)];
                    if (c != 0.0) {
                        out << "  " << x << ' ' << y << ' ' << (a > 0 ? '+' : '-') << ' ' << (b > 0 ? '+' : '-')
                            << " : " << fixed(c, 9) << '\n';
                    }
                }
            }
        }
    }
    out << "local bound " << fixed(result.local_bound, 9) << ", value " << fixed(result.value, 9) << ", margin "
        << fixed(result.margin, 9) << '\n';
}

}  // namespace qlhv::cli
