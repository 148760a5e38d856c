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

#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace qlhv::cli {
namespace {

TEST(ParseDirections, CommentsBlankLinesAndNormalization) {
    std::istringstream in(
        "# header comment\n"
        "\n"
        "1 0 0\n"
        "  0 0 2   # trailing comment\n"
        "0.6 0.8 0\n"
        "0 1 1e-7\n");
    const ParsedDirections p = parse_directions(in, "dirs.txt");
    ASSERT_EQ(p.directions.size(), 4u);
    EXPECT_EQ(p.directions[1], BlochVector::unit_z());
    EXPECT_NEAR(p.directions[2].x(), 0.6, 1e-15);
    ASSERT_EQ(p.warnings.size(), 1u);
    EXPECT_NE(p.warnings[0].find("dirs.txt:4:"), std::string::npos);
}

TEST(ParseDirections, CommaSeparatedFields) {
    std::istringstream in("0, 0, 1\n0.6,0.8,0\n");
    const ParsedDirections p = parse_directions(in, "dirs.txt");
    ASSERT_EQ(p.directions.size(), 2u);
    EXPECT_EQ(p.directions[0], BlochVector::unit_z());
    EXPECT_NEAR(p.directions[1].y(), 0.8, 1e-15);
    EXPECT_TRUE(p.warnings.empty());
}

TEST(ParseDirections, LineNumberedErrors) {
    auto error_of = [](const std::string &text) {
        std::istringstream in(text);
        try {
            parse_directions(in, "f");
        } catch (const InputError &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(error_of("1 0 0\n0 1\n").find("f:2:"), std::string::npos);
    EXPECT_NE(error_of("# c\n1 0 0 0\n").find("f:2:"), std::string::npos);
    EXPECT_NE(error_of("1 0 zero\n").find("f:1: 'zero' is not a number"), std::string::npos);
    EXPECT_NE(error_of("0 0 0\n").find("f:1: zero vector"), std::string::npos);
    EXPECT_NE(error_of("1 nan 0\n").find("f:1:"), std::string::npos);
    EXPECT_NE(error_of("# nothing\n").find("no directions"), std::string::npos);
}

TEST(ParseDirectionList, AxesAndTriples) {
    const auto d = parse_direction_list("z; -x ;0,3,4");
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], BlochVector::unit_z());
    EXPECT_EQ(d[1], -BlochVector::unit_x());
    EXPECT_NEAR(d[2].z(), 0.8, 1e-15);
    EXPECT_THROW(parse_direction_list("x;;z"), InputError);
    EXPECT_THROW(parse_direction_list("w"), InputError);
    EXPECT_THROW(parse_direction_list("1,2"), InputError);
    EXPECT_THROW(parse_direction_list("0,0,0"), InputError);
}

TEST(CurveCsv, HeaderAndFixedFormat) {
    std::ostringstream out;
    write_curve_csv(out, {{0.0, 1.0, 0.0, 1.0}, {std::numbers::pi / 4, 0.5, 0.66, 0.66}});
    EXPECT_EQ(out.str(),
              "theta,eta_condition9,eta_analytic_decomp,eta_sdp\n"
              "0.000000000000,1.000000000000,0.000000000000,1.000000000000\n"
              "0.785398163397,0.500000000000,0.660000000000,0.660000000000\n");
}

TEST(ReportJson, StableKeyOrderAndNulls) {
    ReproductionReport r;
    Claim c;
    c.id = "demo";
    c.criterion = 3;
    c.reference = 0.5;
    c.computed = 0.5;
    c.tolerance = 1e-4;
    c.pass = true;
    r.claims.push_back(c);
    Claim broken;
    broken.id = "broken";
    broken.computed = std::nan("");
    broken.error = "solver failed";
    r.claims.push_back(broken);
    const std::string s = report_json(r, "1.2.3");
    const auto j = nlohmann::ordered_json::parse(s);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "config", "all_pass", "claims", "context"}));
    EXPECT_EQ(j["version"], "1.2.3");
    EXPECT_FALSE(j["all_pass"].get<bool>());
    EXPECT_EQ(j["claims"][0]["id"], "demo");
    EXPECT_TRUE(j["claims"][1]["computed"].is_null());
    EXPECT_TRUE(j["claims"][1]["reference"].is_null());
    EXPECT_EQ(j["claims"][1]["error"], "solver failed");
    EXPECT_EQ(report_json(r, "1.2.3"), s);
}

TEST(PrintLocality, ChshVerdicts) {
    const ChshSettings s = chsh_settings();
    auto run = [&](double eta) {
        std::vector<Povm> a;
        std::vector<Povm> b;
        for (const auto &d : s.alice) {
            a.push_back(noisy_povm(d, eta));
        }
        for (const auto &d : s.bob) {
            b.push_back(noisy_povm(d, 1.0));
        }
        const Behavior beh = build_behavior(schmidt_state(std::numbers::pi / 4), a, b);
        std::ostringstream out;
        print_locality(out, beh, is_local(beh));
        return out.str();
    };
    EXPECT_EQ(run(1.0).rfind("nonlocal, S=2.828427\n", 0), 0u);
    EXPECT_EQ(run(0.5).rfind("local, S=1.414214\n", 0), 0u);
    EXPECT_NE(run(1.0).find("margin"), std::string::npos);
    EXPECT_NE(run(0.5).find("weights"), std::string::npos);
}

}  // namespace
}  // namespace qlhv::cli
