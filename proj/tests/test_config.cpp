// SPDX-License-Identifier: Apache-2.0
//
// fasop: outage analysis for UAV-relayed rate-splitting downlinks with
// fluid-antenna ground users
// Copyright (C) 2026 The fasop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cmath>
#include <string>

#include "doctest.h"
#include "fasop/config.hpp"
#include "fasop/geometry.hpp"

using namespace fasop;
using namespace fasop::cli;

namespace {

std::string error_of(const std::string& text) {
    try {
        parse_config(text, "test.json");
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

ConfigError::Kind kind_of(const std::string& text) {
    try {
        parse_config(text, "test.json");
    } catch (const ConfigError& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ConfigError::Kind::parse;
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("empty document gives the default scenario") {
    for (const char* text : {"", "{}", "  \n"}) {
        const RunSpec spec = parse_config(text);
        const rsma::RsmaScenario& s = spec.scenario;
        REQUIRE(s.users_count() == 2);
        CHECK(s.uav.x == 10.0);
        CHECK(s.uav.z == 100.0);
        CHECK(s.users[0].position.x == 200.0);
        CHECK(s.users[1].position.y == 180.0);
        CHECK(s.env.mu1 == 5.0188);
        CHECK(s.env.mu2 == 0.3511);
        CHECK(s.env.eta1 == 4.65e-5);
        CHECK(s.env.beta == 2.0);
        CHECK(s.uav_fading.m == 4.0);
        CHECK(s.users[0].fading.m == 2.0);
        CHECK(s.users[0].fading.omega == 1.0);
        CHECK(s.users[0].fas.ports() == 4);
        CHECK(s.users[0].fas.n1 == 2);
        CHECK(s.users[0].fas.w1 * s.users[0].fas.w2 == 1.0);
        CHECK(s.users[0].fas.dof == 25.0);
        CHECK(geometry::watts_to_dbm(s.users[0].noise_power) == doctest::Approx(-70.0));
        CHECK(geometry::watts_to_dbm(s.uav_noise) == doctest::Approx(-70.0));
        CHECK(geometry::watts_to_dbm(s.p_b) == doctest::Approx(5.0));
        CHECK(geometry::watts_to_dbm(s.p_a) == doctest::Approx(5.0));
        CHECK(s.power.alpha_c == 0.6);
        CHECK(s.power.alpha_p[0] == doctest::Approx(0.3));
        CHECK(s.power.alpha_p[1] == doctest::Approx(0.1));
        CHECK(spec.modes == std::vector<Mode>{Mode::exact});
        CHECK_FALSE(spec.sweep);
    }
}

TEST_CASE("power split out of range is a validation error") {
    const std::string text = R"({"scenario": {"power_split": {"alpha_c": 1.2}}})";
    CHECK(kind_of(text) == ConfigError::Kind::validation);
    CHECK(error_of(text).find("alpha_c") != std::string::npos);
}

TEST_CASE("power sweep") {
    const RunSpec spec = parse_config(R"({"sweep": {"variable": "power_dbm", "values": [0, 5, 10, 15, 20, 25, 30]}})");
    REQUIRE(spec.sweep);
    CHECK(spec.sweep->values.size() == 7);
    const rsma::RsmaScenario s = spec.scenario_at(20.0);
    CHECK(s.p_b == doctest::Approx(0.1));
    CHECK(s.p_a == s.p_b);
}

TEST_CASE("sweep invariants") {
    CHECK(kind_of(R"({"sweep": {"variable": "power_dbm", "values": [0, 5, 5]}})") == ConfigError::Kind::validation);
    CHECK(kind_of(R"({"sweep": {"variable": "power_dbm", "values": []}})") == ConfigError::Kind::validation);
    CHECK(kind_of(R"({"sweep": {"variable": "n_ports", "values": [1, 2.5]}})") == ConfigError::Kind::validation);
    CHECK(kind_of(R"({"sweep": {"variable": "volume", "values": [1]}})") == ConfigError::Kind::parse);
    CHECK(kind_of(R"({"modes": []})") == ConfigError::Kind::validation);
}

TEST_CASE("sweep variables map onto the scenario") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "alpha_c", "values": [0.5]}})");
    rsma::RsmaScenario s = spec.scenario_at(0.5);
    CHECK(s.power.alpha_p[0] == doctest::Approx(0.375));
    CHECK(s.power.alpha_p[1] == doctest::Approx(0.125));

    spec = parse_config(R"({"sweep": {"variable": "n_ports", "values": [1, 3, 9]}})");
    CHECK(spec.scenario_at(9).users[0].fas.n1 == 3);
    CHECK(spec.scenario_at(9).users[0].fas.n2 == 3);
    CHECK(spec.scenario_at(3).users[1].fas.n1 == 3);
    CHECK(spec.scenario_at(3).users[1].fas.n2 == 1);

    spec = parse_config(R"({"sweep": {"variable": "aperture", "values": [0.25, 2]}})");
    CHECK(spec.scenario_at(0.25).users[0].fas.w1 == doctest::Approx(0.5));

    spec = parse_config(R"({"sweep": {"variable": "m_user", "values": [1, 2, 4]}})");
    CHECK(spec.scenario_at(4).users[1].fading.m == 4.0);

    spec = parse_config(R"({"sweep": {"variable": "threshold_common", "values": [0.3, 0.6]}})");
    CHECK(spec.scenario_at(0.3).users[0].thresholds.common == 0.3);
}

TEST_CASE("unknown keys carry the path and line") {
    const std::string text = "{\n  \"scenario\": {\n    \"uav\": {\n      \"altitude\": 100\n    }\n  }\n}\n";
    const std::string what = error_of(text);
    CHECK(kind_of(text) == ConfigError::Kind::parse);
    CHECK(what.find("test.json:4") != std::string::npos);
    CHECK(what.find("scenario.uav.altitude") != std::string::npos);
    CHECK(error_of(R"({"scenaro": {}})").find("unknown key 'scenaro'") != std::string::npos);
}

TEST_CASE("malformed documents report a line") {
    const std::string what = error_of("{\n  \"modes\": [\"exact\",\n}\n");
    CHECK(what.find("test.json:3") != std::string::npos);
    CHECK(kind_of(R"({"mc": {"trials": -5}})") == ConfigError::Kind::parse);
    CHECK(kind_of(R"({"mc": {"trials": "many"}})") == ConfigError::Kind::parse);
    CHECK(kind_of(R"({"scenario": {"users": [{"fas": {"kernel": "airy"}}]}})") == ConfigError::Kind::parse);
}

TEST_CASE("powers accept units") {
    CHECK(parse_power("5 dBm") == doctest::Approx(geometry::dbm_to_watts(5)));
    CHECK(parse_power("-70dBm") == doctest::Approx(1e-10));
    CHECK(parse_power("2 mW") == doctest::Approx(2e-3));
    CHECK(parse_power("0.1 W") == doctest::Approx(0.1));
    CHECK(parse_power("0 dBW") == doctest::Approx(1.0));
    CHECK(parse_power("0.25") == 0.25);
    CHECK_THROWS_AS(parse_power("5 furlongs"), ConfigError);
    CHECK_THROWS_AS(parse_power("loud"), ConfigError);

    const RunSpec spec = parse_config(R"({"scenario": {"bs": {"tx_power": "20 dBm"}, "uav": {"tx_power": 0.5}}})");
    CHECK(spec.scenario.p_b == doctest::Approx(0.1));
    CHECK(spec.scenario.p_a == 0.5);
}

TEST_CASE("users and power split") {
    RunSpec spec = parse_config(R"({"scenario": {"users": [{"fading": {"m": 3}}]}})");
    REQUIRE(spec.scenario.users_count() == 1);
    CHECK(spec.scenario.users[0].fading.m == 3.0);
    CHECK(spec.scenario.power.alpha_p.size() == 1);
    CHECK(spec.scenario.power.alpha_p[0] == doctest::Approx(0.4));

    spec = parse_config(R"({"scenario": {"power_split": {"alpha_c": 0.5, "alpha_p": [0.2, 0.3]}}})");
    CHECK(spec.scenario.power.alpha_p[1] == 0.3);
    CHECK(spec.private_shares[0] == doctest::Approx(0.4));

    CHECK(kind_of(R"({"scenario": {"users": [{}, {}, {}]}})") == ConfigError::Kind::parse);
    CHECK(kind_of(R"({"scenario": {"users": [{}, {}, {"position": [1, 2, 0]}]}})") == ConfigError::Kind::validation);
    spec = parse_config(R"({"scenario": {"users": [{}, {}, {"position": [1, 2, 0]}],
                            "power_split": {"private_shares": [0.5, 0.3, 0.2]}}})");
    CHECK(spec.scenario.users_count() == 3);
}

TEST_CASE("modes") {
    CHECK(parse_modes("exact, monte_carlo,exact") == std::vector<Mode>{Mode::exact, Mode::monte_carlo});
    CHECK_THROWS_AS(parse_modes("exact,fast"), ConfigError);
    CHECK_THROWS_AS(parse_modes(""), ConfigError);
    const RunSpec spec = parse_config(R"({"modes": "asymptotic,noma"})");
    CHECK(spec.modes == std::vector<Mode>{Mode::asymptotic, Mode::noma});
}

TEST_CASE("the default text parses back to the default scenario") {
    const std::string text = default_config_text();
    const RunSpec spec = parse_config(text);
    const RunSpec plain = parse_config("");
    CHECK(spec.scenario.p_b == doctest::Approx(plain.scenario.p_b).epsilon(1e-12));
    CHECK(spec.scenario.users[1].position.x == plain.scenario.users[1].position.x);
    CHECK(spec.scenario.power.alpha_p[0] == doctest::Approx(plain.scenario.power.alpha_p[0]));
    CHECK(spec.scenario.users[0].noise_power == doctest::Approx(plain.scenario.users[0].noise_power).epsilon(1e-12));
    REQUIRE(spec.sweep);
    CHECK(spec.sweep->values.size() == 7);
    CHECK(spec.mc);
}

TEST_CASE("missing file is an I/O error") {
    CHECK_THROWS_AS(load_config("/nonexistent/config.json"), IoError);
}

}  // TEST_SUITE
