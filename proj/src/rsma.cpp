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

#include "fasop/rsma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "fasop/specfun.hpp"

namespace fasop::rsma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_user(int k, int users) {
    if (k < 0 || k >= users)
        throw std::out_of_range("user index " + std::to_string(k) + " outside 0.." + std::to_string(users - 1));
}

// Gain threshold for SINR >= gamma given the stream factor and interference factor.
double gain_threshold(double gamma, double alpha, double interference, double noise_over_power_loss) {
    return gamma * noise_over_power_loss / (alpha - gamma * interference);
}

}  // namespace

RsmaPower RsmaPower::from_shares(double alpha_c, const std::vector<double>& shares) {
    RsmaPower p;
    p.alpha_c = alpha_c;
    p.alpha_p.clear();
    for (double s : shares)
        p.alpha_p.push_back(s * (1.0 - alpha_c));
    return p;
}

double RsmaPower::private_sum() const {
    return std::accumulate(alpha_p.begin(), alpha_p.end(), 0.0);
}

double RsmaPower::private_interference(int k) const {
    check_user(k, users());
    double sum = 0.0;
    for (int i = 0; i < users(); ++i) {
        if (i != k)
            sum += alpha_p[i];
    }
    return sum;
}

void RsmaPower::validate() const {
    if (alpha_p.empty())
        throw std::invalid_argument("power split: at least one private factor required");
    if (!(alpha_c > 0.0 && alpha_c < 1.0))
        throw std::invalid_argument("power split: alpha_c must lie in (0, 1)");
    for (double a : alpha_p) {
        if (!(a > 0.0 && a < 1.0))
            throw std::invalid_argument("power split: private factors must lie in (0, 1)");
    }
    if (std::abs(alpha_c + private_sum() - 1.0) > 1e-12)
        throw std::invalid_argument("power split: alpha_c plus private factors must sum to 1");
}

RsmaScenario RsmaScenario::defaults() {
    RsmaScenario s;
    s.bs = {0.0, 0.0, 0.0};
    s.uav = {10.0, 10.0, 100.0};
    s.power = RsmaPower::from_shares(0.6, {0.75, 0.25});
    s.p_b = geometry::dbm_to_watts(5.0);
    s.p_a = geometry::dbm_to_watts(5.0);
    s.uav_fading = {4.0, 1.0};
    s.uav_noise = geometry::dbm_to_watts(-70.0);
    for (Position3 pos : {Position3{200.0, 200.0, 0.0}, Position3{180.0, 180.0, 0.0}}) {
        UserSpec u;
        u.position = pos;
        u.fading = {2.0, 1.0};
        u.noise_power = geometry::dbm_to_watts(-70.0);
        s.users.push_back(u);
    }
    return s;
}

LinkBudget RsmaScenario::relay_link() const {
    return {p_b, geometry::path_loss(uav, bs, env), uav_noise, uav_fading, std::nullopt};
}

LinkBudget RsmaScenario::user_link(int k) const {
    check_user(k, users_count());
    const UserSpec& u = users[k];
    return {p_a, geometry::path_loss(uav, u.position, env), u.noise_power, u.fading, u.fas};
}

void RsmaScenario::validate() const {
    if (users.empty())
        throw std::invalid_argument("scenario: at least one user required");
    if (static_cast<int>(power.alpha_p.size()) != users_count())
        throw std::invalid_argument("scenario: one private power factor per user required");
    env.validate();
    power.validate();
    uav_fading.validate();
    if (!(p_b > 0.0 && p_a > 0.0 && uav_noise > 0.0))
        throw std::invalid_argument("scenario: transmit and noise powers must be positive");
    for (const UserSpec& u : users) {
        u.fading.validate();
        u.fas.validate();
        if (!(u.noise_power > 0.0))
            throw std::invalid_argument("scenario: user noise power must be positive");
        if (!(u.thresholds.common > 0.0 && u.thresholds.priv > 0.0))
            throw std::invalid_argument("scenario: SINR thresholds must be positive");
    }
}

const char* to_string(EstimateKind kind) {
    switch (kind) {
    case EstimateKind::exact:
        return "exact";
    case EstimateKind::asymptotic:
        return "asymptotic";
    case EstimateKind::monte_carlo:
        return "monte_carlo";
    }
    return "?";
}

double OpFactors::value() const {
    const double success = relay_sf * user_sf;
    if (success < 0.5)
        return 1.0 - success;
    return std::clamp(relay_cdf + user_cdf - relay_cdf * user_cdf, 0.0, 1.0);
}

double OpFactors::log_success() const {
    return std::log(relay_sf) + std::log(user_sf);
}

double EffectiveThresholds::zeta_hat() const {
    return std::max(hat_common, hat_private);
}

double EffectiveThresholds::zeta_tilde() const {
    return std::max(tilde_common, tilde_private);
}

double sinr_relay_common(double g, const LinkBudget& lb, const RsmaPower& power) {
    const double x = lb.tx_power * lb.path_loss * g;
    return power.alpha_c * x / (power.private_sum() * x + lb.noise_power);
}

double sinr_relay_private(int k, double g, const LinkBudget& lb, const RsmaPower& power) {
    const double x = lb.tx_power * lb.path_loss * g;
    return power.alpha_p.at(k) * x / (power.private_interference(k) * x + lb.noise_power);
}

double sinr_user_common(double g, const LinkBudget& lb, const RsmaPower& power) {
    return sinr_relay_common(g, lb, power);
}

double sinr_user_private(int k, double g, const LinkBudget& lb, const RsmaPower& power) {
    return sinr_relay_private(k, g, lb, power);
}

FeasibilityBounds feasibility_bounds(const RsmaPower& power, int k) {
    const double interference = power.private_interference(k);
    return {power.alpha_c / power.private_sum(), interference > 0.0 ? power.alpha_p[k] / interference : kInf};
}

bool is_feasible(int k, const RsmaScenario& scenario) {
    const FeasibilityBounds b = feasibility_bounds(scenario.power, k);
    const Thresholds& t = scenario.users.at(k).thresholds;
    return t.common < b.max_common && t.priv < b.max_private;
}

EffectiveThresholds effective_thresholds(int k, const RsmaScenario& scenario) {
    check_user(k, scenario.users_count());
    const Thresholds& t = scenario.users[k].thresholds;
    const FeasibilityBounds b = feasibility_bounds(scenario.power, k);
    if (!(t.common < b.max_common))
        throw InfeasibleConfiguration("user " + std::to_string(k + 1) + ": common threshold " +
                                      std::to_string(t.common) + " not below its bound " +
                                      std::to_string(b.max_common));
    if (!(t.priv < b.max_private))
        throw InfeasibleConfiguration("user " + std::to_string(k + 1) + ": private threshold " +
                                      std::to_string(t.priv) + " not below its bound " +
                                      std::to_string(b.max_private));

    const RsmaPower& pw = scenario.power;
    const LinkBudget relay = scenario.relay_link();
    const LinkBudget user = scenario.user_link(k);
    const double relay_scale = relay.noise_power / (relay.tx_power * relay.path_loss);
    const double user_scale = user.noise_power / (user.tx_power * user.path_loss);
    const double user_private_scale =
        scenario.paper_literal_typos ? relay.noise_power / (relay.tx_power * user.path_loss) : user_scale;

    EffectiveThresholds e;
    e.hat_common = gain_threshold(t.common, pw.alpha_c, pw.private_sum(), relay_scale);
    e.hat_private = gain_threshold(t.priv, pw.alpha_p[k], pw.private_interference(k), relay_scale);
    if (scenario.paper_literal_typos) {
        // Common-stream SINR on the user link with the BS power in the interference term:
        // P_a a_c L g / (P_b L g S + s^2) >= t.
        const double denom = pw.alpha_c * user.tx_power - t.common * relay.tx_power * pw.private_sum();
        e.tilde_common = denom > 0.0 ? t.common * user.noise_power / (user.path_loss * denom) : kInf;
    } else {
        e.tilde_common = gain_threshold(t.common, pw.alpha_c, pw.private_sum(), user_scale);
    }
    e.tilde_private = gain_threshold(t.priv, pw.alpha_p[k], pw.private_interference(k), user_private_scale);
    return e;
}

OpFactors outage_factors(int k, const RsmaScenario& scenario) {
    const EffectiveThresholds e = effective_thresholds(k, scenario);
    const UserSpec& u = scenario.users[k];
    const FadingParams& fb = scenario.uav_fading;
    OpFactors f;
    f.relay_cdf = channel::gamma_gain_cdf(e.zeta_hat(), fb);
    f.relay_sf = std::isinf(e.zeta_hat()) ? 0.0 : specfun::reg_upper_inc_gamma(fb.m, fb.m * e.zeta_hat() / fb.omega);
    f.user_cdf = channel::fas_gain_cdf(e.zeta_tilde(), u.fading, u.fas);
    f.user_sf = f.user_cdf < 0.5 ? 1.0 - f.user_cdf : channel::fas_gain_sf(e.zeta_tilde(), u.fading, u.fas);
    return f;
}

OpFactors outage_factors_asymptotic(int k, const RsmaScenario& scenario) {
    const EffectiveThresholds e = effective_thresholds(k, scenario);
    const UserSpec& u = scenario.users[k];
    OpFactors f;
    f.relay_cdf = std::min(channel::gamma_gain_cdf_asymptotic(e.zeta_hat(), scenario.uav_fading), 1.0);
    f.user_cdf = channel::fas_gain_cdf_asymptotic(e.zeta_tilde(), u.fading, u.fas);
    f.relay_sf = 1.0 - f.relay_cdf;
    f.user_sf = 1.0 - f.user_cdf;
    return f;
}

OpEstimate outage_probability(int k, const RsmaScenario& scenario) {
    return {outage_factors(k, scenario).value(), EstimateKind::exact, std::nullopt};
}

OpEstimate outage_probability_asymptotic(int k, const RsmaScenario& scenario) {
    return {outage_factors_asymptotic(k, scenario).value(), EstimateKind::asymptotic, std::nullopt};
}

}  // namespace fasop::rsma
