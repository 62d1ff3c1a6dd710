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

#ifndef FASOP_RSMA_HPP
#define FASOP_RSMA_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "fasop/channel.hpp"
#include "fasop/geometry.hpp"

namespace fasop::rsma {

using channel::FadingParams;
using channel::FasConfig;
using geometry::EnvParams;
using geometry::Position3;

/// A threshold lies at or beyond the ceiling its stream's SINR can reach at any SNR.
class InfeasibleConfiguration : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct RsmaPower {
    double alpha_c = 0.6;
    std::vector<double> alpha_p{0.3, 0.1};

    /// Common factor alpha_c, private factors shares[k] * (1 - alpha_c).
    static RsmaPower from_shares(double alpha_c, const std::vector<double>& shares);

    int users() const { return static_cast<int>(alpha_p.size()); }
    double private_sum() const;
    /// Sum of the private factors of every user other than k (zero-based).
    double private_interference(int k) const;
    /// Throws std::invalid_argument unless all factors are in (0, 1) and sum to 1 within 1e-12.
    void validate() const;
};

/// One hop as seen by its receiver. `fas` is absent for a fixed-antenna receiver.
struct LinkBudget {
    double tx_power = 1.0;
    double path_loss = 1.0;
    double noise_power = 1.0;
    FadingParams fading;
    std::optional<FasConfig> fas;

    /// Average receive SNR per unit gain, P L / sigma^2.
    double snr_scale() const { return tx_power * path_loss / noise_power; }
};

struct Thresholds {
    double common = 0.6;
    double priv = 0.1;
};

struct UserSpec {
    Position3 position;
    FadingParams fading;
    FasConfig fas;
    double noise_power = 1e-10;
    Thresholds thresholds;
};

struct RsmaScenario {
    Position3 bs;
    Position3 uav{10.0, 10.0, 100.0};
    std::vector<UserSpec> users;
    EnvParams env;
    RsmaPower power;
    double p_b = 1e-3 * 3.1622776601683795;
    double p_a = 1e-3 * 3.1622776601683795;
    FadingParams uav_fading{4.0, 1.0};
    double uav_noise = 1e-10;
    /// Analytic thresholds use the second-hop expressions exactly as printed in the
    /// source model (BS power and relay noise on the user link). Audit only.
    bool paper_literal_typos = false;

    /// Two-user default scenario.
    static RsmaScenario defaults();

    int users_count() const { return static_cast<int>(users.size()); }
    LinkBudget relay_link() const;
    LinkBudget user_link(int k) const;
    /// Structural validation (not threshold feasibility). Throws std::invalid_argument.
    void validate() const;
};

enum class EstimateKind { exact, asymptotic, monte_carlo };

const char* to_string(EstimateKind kind);

struct OpEstimate {
    double value = 0.0;
    EstimateKind kind = EstimateKind::exact;
    std::optional<double> std_error;
};

/// 1 - OP = (1 - relay_cdf) (1 - user_cdf). The complements are carried separately so
/// that the success probability keeps its relative accuracy when OP rounds to 1.
struct OpFactors {
    double relay_cdf = 0.0;
    double user_cdf = 0.0;
    double relay_sf = 1.0;
    double user_sf = 1.0;

    double value() const;
    /// log(1 - OP).
    double log_success() const;
};

/// Gain thresholds. hat_* act on the BS->UAV gain, tilde_* on the best-port user gain.
struct EffectiveThresholds {
    double hat_common = 0.0;
    double hat_private = 0.0;
    double tilde_common = 0.0;
    double tilde_private = 0.0;

    double zeta_hat() const;
    double zeta_tilde() const;
};

/// Open upper bounds on the SINR thresholds of user k (zero-based).
struct FeasibilityBounds {
    double max_common = 0.0;
    double max_private = 0.0;
};

// SINRs for a given channel gain. k is zero-based.
double sinr_relay_common(double g, const LinkBudget& lb, const RsmaPower& power);
double sinr_relay_private(int k, double g, const LinkBudget& lb, const RsmaPower& power);
double sinr_user_common(double g, const LinkBudget& lb, const RsmaPower& power);
double sinr_user_private(int k, double g, const LinkBudget& lb, const RsmaPower& power);

FeasibilityBounds feasibility_bounds(const RsmaPower& power, int k);
bool is_feasible(int k, const RsmaScenario& scenario);

/// Throws InfeasibleConfiguration when either threshold of user k reaches its bound.
EffectiveThresholds effective_thresholds(int k, const RsmaScenario& scenario);

OpFactors outage_factors(int k, const RsmaScenario& scenario);
OpFactors outage_factors_asymptotic(int k, const RsmaScenario& scenario);
OpEstimate outage_probability(int k, const RsmaScenario& scenario);
OpEstimate outage_probability_asymptotic(int k, const RsmaScenario& scenario);

}  // namespace fasop::rsma

#endif  // FASOP_RSMA_HPP
