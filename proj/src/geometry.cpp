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

#include "fasop/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fasop::geometry {

void EnvParams::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok)
            throw std::invalid_argument(std::string("environment: ") + what);
    };
    require(mu1 > 0.0, "mu1 must be positive");
    require(mu2 > 0.0, "mu2 must be positive");
    require(eta1 > 0.0, "eta1 must be positive");
    require(eta2 > 0.0, "eta2 must be positive");
    require(beta >= 1.0, "beta must be at least 1");
}

double horizontal_distance(const Position3& a, const Position3& i) {
    return std::hypot(a.x - i.x, a.y - i.y);
}

double link_distance(const Position3& a, const Position3& i) {
    const double d = horizontal_distance(a, i);
    const double dz = a.z - i.z;
    return std::sqrt(d * d + dz * dz);
}

double elevation_angle(const Position3& a, const Position3& i) {
    const double d = horizontal_distance(a, i);
    if (d == 0.0) {
        if (a.z == 0.0)
            throw std::domain_error("elevation_angle: undefined for coincident ground projection at zero altitude");
        return 90.0;
    }
    return std::atan2(a.z, d) * 180.0 / std::numbers::pi;
}

double los_probability(double theta_deg, const EnvParams& env) {
    if (!(theta_deg >= 0.0 && theta_deg <= 90.0))
        throw std::domain_error("los_probability: elevation must lie in [0, 90] degrees");
    return 1.0 / (1.0 + env.mu1 * std::exp(-env.mu2 * (theta_deg - env.mu1)));
}

double nlos_probability(double theta_deg, const EnvParams& env) {
    return 1.0 - los_probability(theta_deg, env);
}

double path_loss(const Position3& a, const Position3& i, const EnvParams& env) {
    const double r = link_distance(a, i);
    if (r == 0.0)
        throw std::domain_error("path_loss: zero link distance");
    const double los = los_probability(elevation_angle(a, i), env);
    const double nlos = 1.0 - los;
    return (env.eta1 * los + env.eta2 * nlos) * std::pow(r, -env.beta);
}

double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts) {
    return 10.0 * std::log10(watts) + 30.0;
}

}  // namespace fasop::geometry
