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

// Two-user NOMA baseline over the same decode-and-forward relay.

#ifndef FASOP_NOMA_HPP
#define FASOP_NOMA_HPP

#include "fasop/montecarlo.hpp"
#include "fasop/rsma.hpp"

namespace fasop::rsma {

struct NomaParams {
    /// Power factor of the far user (weaker user link); the near user gets the rest.
    double far_factor = 0.75;
};

/// Single-stream SINR target carrying the same per-user rate as an RSMA user that
/// needs a 1/K share of the common stream plus its private stream.
double noma_threshold(const Thresholds& t, int users);

/// Index of the far user: the one with the smaller user-link path loss coefficient.
/// Ties go to the lower index.
int noma_far_user(const RsmaScenario& scenario);

/// Outage of user k: the relay must decode every signal the user's own decoding chain
/// needs, then the user decodes. The far user treats the near signal as noise; the near
/// user removes the far signal first. Supports K <= 2 (std::invalid_argument above).
montecarlo::OutageCount noma_outage_count(int k, const RsmaScenario& scenario, const NomaParams& noma,
                                          const montecarlo::McConfig& mc);
OpEstimate noma_outage_mc(int k, const RsmaScenario& scenario, const NomaParams& noma,
                          const montecarlo::McConfig& mc);

}  // namespace fasop::rsma

#endif  // FASOP_NOMA_HPP
