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

#include <algorithm>
#include <sstream>
#include <string>

#include "doctest.h"
#include "fasop/report.hpp"

using namespace fasop;
using namespace fasop::cli;

namespace {

std::string csv_of(const SweepResult& r) {
    std::ostringstream out;
    write_csv(out, r);
    return out.str();
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');)
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("one row per point, user and mode, in grid order") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "power_dbm", "values": [10, 20, 30]},
                                   "modes": ["exact", "asymptotic"]})");
    const SweepResult r = evaluate(spec, 3);
    REQUIRE(r.rows.size() == 3 * 2 * 2);
    CHECK(r.rows[0].sweep_value == 10.0);
    CHECK(r.rows[0].user_index == 1);
    CHECK(r.rows[0].mode == Mode::exact);
    CHECK(r.rows[1].mode == Mode::asymptotic);
    CHECK(r.rows[2].user_index == 2);
    CHECK(r.rows.back().sweep_value == 30.0);
    CHECK(r.infeasible_points == 0);
    CHECK(r.rows[8].params.p_b_dbm == doctest::Approx(30.0));
}

TEST_CASE("CSV header and rows echo the resolved parameters") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "m_user", "values": [1, 4]},
                                   "mc": {"trials": 2000, "seed": 9}, "modes": "exact,monte_carlo"})");
    const std::string csv = csv_of(evaluate(spec));
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    CHECK(header.rfind("sweep_var,sweep_value,user_index,mode,op_value,std_error,feasible,seed,", 0) == 0);
    const auto cols = split(header);
    int rows = 0;
    while (std::getline(in, line)) {
        const auto cells = split(line);
        REQUIRE(cells.size() == cols.size());
        CHECK(cells[0] == "m_user");
        const bool mc = cells[3] == "monte_carlo";
        CHECK(cells[5].empty() != mc);
        CHECK(cells[7] == (mc ? "9" : ""));
        const auto m_col = std::find(cols.begin(), cols.end(), "m_user") - cols.begin();
        CHECK(cells[static_cast<std::size_t>(m_col)] == cells[1]);
        ++rows;
    }
    CHECK(rows == 2 * 2 * 2);
}

TEST_CASE("CSV is byte-identical across runs and worker counts") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "power_dbm", "values": [15, 25]},
                                   "mc": {"trials": 5000, "seed": 3, "chunk_size": 700},
                                   "modes": ["exact", "monte_carlo", "noma"]})");
    const std::string a = csv_of(evaluate(spec, 1));
    const std::string b = csv_of(evaluate(spec, 2));
    spec.mc->workers = 3;
    const std::string c = csv_of(evaluate(spec, 2));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("alpha_c sweep flags infeasible rows where the common bound fails") {
    std::string values;
    for (int i = 1; i < 100; ++i)
        values += (i > 1 ? "," : "") + std::to_string(i / 100.0);
    RunSpec spec = parse_config(R"({"sweep": {"variable": "alpha_c", "values": [)" + values +
                                R"(]}, "scenario": {"bs": {"tx_power": "25 dBm"}, "uav": {"tx_power": "25 dBm"}}})");
    const SweepResult r = evaluate(spec);
    for (const ResultRow& row : r.rows) {
        const double a = row.sweep_value;
        const double bound = a / (1.0 - a);
        const double interf = (1.0 - a) - row.params.alpha_p;
        const bool expected = row.params.gamma_common < bound && row.params.gamma_private < row.params.alpha_p / interf;
        CHECK(row.feasible == expected);
        if (!row.feasible)
            CHECK(row.op_value == 1.0);
    }
    CHECK_FALSE(r.all_infeasible());
}

TEST_CASE("all-infeasible sweep is detected") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "threshold_common", "values": [1.6, 2.0]}})");
    const SweepResult r = evaluate(spec);
    CHECK(r.all_infeasible());
}

TEST_CASE("failing points are named") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "m_user", "values": [1.5, 2]},
                                   "mc": {"trials": 100, "sampler": "physical"}, "modes": ["monte_carlo"]})");
    try {
        evaluate(spec);
        FAIL("expected an error");
    } catch (const PointError& e) {
        CHECK(std::string(e.what()).find("m_user = 1.5") != std::string::npos);
    }
}

TEST_CASE("SVG chart") {
    RunSpec spec = parse_config(R"({"sweep": {"variable": "power_dbm", "values": [20, 25, 30]},
                                   "modes": ["exact", "asymptotic"]})");
    std::ostringstream out;
    write_svg(out, evaluate(spec));
    const std::string svg = out.str();
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("user 2 asymptotic") != std::string::npos);
    CHECK(svg.find("power_dbm") != std::string::npos);
}

TEST_CASE("shortest round-trip formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-300) == "1e-300");
    CHECK(std::stod(format_double(0.9325371234567891)) == 0.9325371234567891);
}

}  // TEST_SUITE
