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

#include "fasop/noma.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace fasop::rsma {

double noma_threshold(const Thresholds& t, int users) {
    return (1.0 + t.priv) * std::pow(1.0 + t.common, 1.0 / users) - 1.0;
}

int noma_far_user(const RsmaScenario& scenario) {
    int far = 0;
    double weakest = scenario.user_link(0).path_loss;
    for (int k = 1; k < scenario.users_count(); ++k) {
        const double l = scenario.user_link(k).path_loss;
        if (l < weakest) {
            weakest = l;
            far = k;
        }
    }
    return far;
}

montecarlo::OutageCount noma_outage_count(int k, const RsmaScenario& scenario, const NomaParams& noma,
                                          const montecarlo::McConfig& mc) {
    using namespace montecarlo;
    mc.validate();
    scenario.validate();
    const int users = scenario.users_count();
    if (users > 2)
        throw std::invalid_argument("NOMA baseline supports at most two users");
    if (!(noma.far_factor > 0.0 && noma.far_factor < 1.0))
        throw std::invalid_argument("NOMA far-user factor must lie in (0, 1)");
    if (k < 0 || k >= users)
        throw std::out_of_range("user index outside the scenario");

    const bool single = users == 1;
    const bool is_far = single || k == noma_far_user(scenario);
    const double a_far = single ? 1.0 : noma.far_factor;
    const double a_near = 1.0 - a_far;
    const double gamma = noma_threshold(scenario.users[k].thresholds, users);
    const LinkBudget relay = scenario.relay_link();
    const LinkBudget user = scenario.user_link(k);
    const UserSpec& spec = scenario.users[k];

    std::function<double(TrialRng&)> user_gain;
    if (mc.sampler == Sampler::copula) {
        auto s = std::make_shared<CopulaSampler>(spec.fading, spec.fas);
        user_gain = [s](TrialRng& rng) { return s->best_gain(rng); };
    } else {
        auto s = std::make_shared<PhysicalSampler>(spec.fading, spec.fas);
        user_gain = [s](TrialRng& rng) { return s->best_gain(rng); };
    }

    // Decodes the far signal (near signal as noise), then the near signal if required.
    auto decodes = [&](double snr) {
        const bool far_ok = a_far * snr / (a_near * snr + 1.0) > gamma;
        return is_far ? far_ok : far_ok && a_near * snr > gamma;
    };
    auto outage = [&](std::uint64_t trial) {
        TrialRng rng(mc.seed, trial);
        const double gb = sample_gamma_gain(rng, scenario.uav_fading);
        const double gk = user_gain(rng);
        return !(decodes(relay.snr_scale() * gb) && decodes(user.snr_scale() * gk));
    };

    OutageCount out;
    out.trials = mc.trials;
    out.infeasible = !single && !(a_far / a_near > gamma);
    out.outages = count_trials(mc.trials, mc.chunk_size, mc.workers, outage);
    return out;
}

OpEstimate noma_outage_mc(int k, const RsmaScenario& scenario, const NomaParams& noma,
                          const montecarlo::McConfig& mc) {
    const montecarlo::OutageCount c = noma_outage_count(k, scenario, noma, mc);
    return {c.estimate(), EstimateKind::monte_carlo, c.std_error()};
}

}  // namespace fasop::rsma
