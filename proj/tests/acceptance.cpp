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

// Acceptance runner: one PASS/FAIL/WARN line per criterion on the default scenario.

#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "fasop/config.hpp"
#include "fasop/validation.hpp"

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria on the default scenario"};
    std::vector<int> ids;
    std::uint64_t trials = 1'000'000;
    bool details = false;
    app.add_option("--criterion", ids, "criteria to run (all when omitted)")
        ->check(CLI::Range(1, fasop::cli::criterion_count));
    app.add_option("--trials", trials, "Monte Carlo trials for the oracle gates");
    app.add_flag("--details", details, "print the JSON data of each criterion");
    CLI11_PARSE(app, argc, argv);

    fasop::cli::RunSpec spec = fasop::cli::parse_config("", "<defaults>");
    spec.mc.emplace();
    spec.mc->trials = trials;
    const fasop::cli::ValidationReport report = fasop::cli::validate(spec, ids);

    for (const std::string& w : report.warnings)
        std::cout << "warning: " << w << "\n";
    for (const auto& c : report.criteria) {
        const char* status = c.passed ? "PASS" : (c.blocking ? "FAIL" : "WARN");
        std::cout << status << " criterion " << c.id << ": " << c.title << "\n";
        for (const std::string& n : c.notes)
            std::cout << "    " << n << "\n";
        if (details)
            std::cout << c.data.dump(2) << "\n";
    }
    return report.passed() ? 0 : 1;
}
