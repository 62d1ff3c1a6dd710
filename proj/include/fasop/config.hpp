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

// Run configuration: a JSON document describing the scenario, an optional sweep,
// evaluation modes, Monte Carlo settings and output paths.

#ifndef FASOP_CONFIG_HPP
#define FASOP_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fasop/montecarlo.hpp"
#include "fasop/noma.hpp"
#include "fasop/rsma.hpp"

namespace fasop::cli {

enum class Mode { exact, asymptotic, monte_carlo, noma };

enum class SweepVariable { power_dbm, alpha_c, n_ports, aperture, m_user, threshold_common };

const char* to_string(Mode m);
const char* to_string(SweepVariable v);
std::optional<Mode> parse_mode(std::string_view name);
std::optional<SweepVariable> parse_sweep_variable(std::string_view name);

/// Comma-separated mode list. Throws ConfigError on unknown names or an empty list.
std::vector<Mode> parse_modes(std::string_view list);

struct Sweep {
    SweepVariable variable = SweepVariable::power_dbm;
    std::vector<double> values;
};

struct Outputs {
    std::string csv_path;  // empty: summary on standard output only
    std::optional<std::string> svg_path;
};

struct RunSpec {
    rsma::RsmaScenario scenario;
    /// Split of the private power 1 - alpha_c between users, kept so an alpha_c sweep
    /// rescales the private factors.
    std::vector<double> private_shares;
    std::optional<Sweep> sweep;
    Outputs outputs;
    std::optional<montecarlo::McConfig> mc;
    std::vector<Mode> modes{Mode::exact};
    rsma::NomaParams noma;

    /// Scenario at one sweep value (the base scenario when there is no sweep).
    rsma::RsmaScenario scenario_at(double value) const;
    /// Throws ConfigError(validation) naming the violated invariant.
    void validate() const;
};

class ConfigError : public std::runtime_error {
public:
    enum class Kind { parse, validation };

    ConfigError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Raised when the configuration file cannot be read.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a configuration document. An empty document gives the default two-user
/// scenario. Unknown keys are errors reported with their key path and line.
RunSpec parse_config(std::string_view text, std::string_view source = "<config>");
RunSpec load_config(const std::string& path);

/// Power given as a number (watts) or as a string with a unit suffix: "5 dBm", "2 mW", "0.1 W".
double parse_power(std::string_view text);

/// The complete default configuration as formatted JSON.
std::string default_config_text();

}  // namespace fasop::cli

#endif  // FASOP_CONFIG_HPP
