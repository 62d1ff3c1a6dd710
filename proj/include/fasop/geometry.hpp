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

#ifndef FASOP_GEOMETRY_HPP
#define FASOP_GEOMETRY_HPP

namespace fasop::geometry {

struct Position3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Air-to-ground propagation constants. Elevation-angle parameters are per degree.
struct EnvParams {
    double mu1 = 5.0188;
    double mu2 = 0.3511;
    double eta1 = 4.65e-5;  // reference coefficient at 1 m, LoS
    double eta2 = 4.65e-5;  // same, NLoS
    double beta = 2.0;

    /// Throws std::invalid_argument naming the first violated bound.
    void validate() const;
};

double horizontal_distance(const Position3& a, const Position3& i);

/// 3D Euclidean distance.
double link_distance(const Position3& a, const Position3& i);

/// Elevation of the aerial node `a` seen from ground node `i`, in degrees. Uses the
/// altitude of `a` alone. 90 when `i` is directly below `a`; std::domain_error when
/// the angle is undefined (z_a = 0 and zero horizontal distance).
double elevation_angle(const Position3& a, const Position3& i);

/// Logistic LoS probability; theta in degrees, std::domain_error outside [0, 90].
double los_probability(double theta_deg, const EnvParams& env);

/// Complement of los_probability.
double nlos_probability(double theta_deg, const EnvParams& env);

/// Expected large-scale coefficient (LoS/NLoS mixture) times r^-beta.
/// std::domain_error for coincident nodes.
double path_loss(const Position3& a, const Position3& i, const EnvParams& env);

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

}  // namespace fasop::geometry

#endif  // FASOP_GEOMETRY_HPP
