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

#ifndef FASOP_REPORT_HPP
#define FASOP_REPORT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fasop/config.hpp"

namespace fasop::cli {

/// Parameter values a row was computed with, after defaulting and sweep substitution.
struct ResolvedParams {
    double p_b_dbm = 0.0;
    double p_a_dbm = 0.0;
    double alpha_c = 0.0;
    double alpha_p = 0.0;
    int n1 = 1;
    int n2 = 1;
    double w1 = 0.0;
    double w2 = 0.0;
    double m_user = 0.0;
    double m_uav = 0.0;
    double dof = 0.0;
    double theta = 0.0;
    double gamma_common = 0.0;
    double gamma_private = 0.0;
    double noise_dbm = 0.0;
    bool literal_typos = false;
};

struct ResultRow {
    std::optional<SweepVariable> sweep_var;
    double sweep_value = 0.0;
    int user_index = 1;  // one-based
    Mode mode = Mode::exact;
    double op_value = 0.0;
    std::optional<double> std_error;
    bool feasible = true;
    std::optional<std::uint64_t> seed;
    ResolvedParams params;
};

struct SweepResult {
    std::vector<ResultRow> rows;  // grid order, then user, then mode
    std::size_t points = 0;
    std::size_t infeasible_points = 0;  // points where no user is feasible

    bool all_infeasible() const { return points > 0 && infeasible_points == points; }
};

/// Raised when one grid point fails; the message names the point.
class PointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Evaluates every mode at every grid point for every user. Points run concurrently
/// on `workers` threads (0: hardware concurrency).
SweepResult evaluate(const RunSpec& spec, unsigned workers = 0);

void write_csv(std::ostream& out, const SweepResult& result);
void write_svg(std::ostream& out, const SweepResult& result);
void write_summary(std::ostream& out, const SweepResult& result);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace fasop::cli

#endif  // FASOP_REPORT_HPP
