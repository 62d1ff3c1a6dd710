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

#ifndef FASOP_VALIDATION_HPP
#define FASOP_VALIDATION_HPP

#include <string>
#include <vector>

#include "fasop/config.hpp"
#include "json.hpp"

namespace fasop::cli {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    bool blocking = true;  // a non-blocking failure is reported as a warning
    std::vector<std::string> notes;
    nlohmann::json data = nlohmann::json::object();
};

struct ValidationReport {
    std::vector<CriterionResult> criteria;
    std::vector<std::string> warnings;
    nlohmann::json audit;  // literal-typos audit, null unless the flag is set

    bool passed() const;
    nlohmann::json to_json() const;
};

inline constexpr int criterion_count = 10;

/// Power grid in dBm used when the run has no power sweep.
std::vector<double> default_power_grid();

/// Power grid for the suite: the run's power_dbm sweep if present, else the default grid.
std::vector<double> power_grid(const RunSpec& spec);

CriterionResult run_criterion(int id, const RunSpec& spec);

/// Runs the listed criteria (all when empty) on the configured scenario.
ValidationReport validate(const RunSpec& spec, const std::vector<int>& ids = {});

/// Exact vs Monte Carlo on the second hop with and without the literal transcription,
/// plus a variant with P_b offset from P_a so that a swapped power is visible.
nlohmann::json literal_typos_audit(const RunSpec& spec);

}  // namespace fasop::cli

#endif  // FASOP_VALIDATION_HPP
