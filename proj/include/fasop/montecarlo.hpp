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

#ifndef FASOP_MONTECARLO_HPP
#define FASOP_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "fasop/channel.hpp"
#include "fasop/rsma.hpp"

namespace fasop::montecarlo {

using channel::FadingParams;
using channel::FasConfig;

enum class Sampler {
    copula,    // equicorrelated t-copula with Gamma marginals
    physical,  // sum of m correlated complex-Gaussian fields
};

const char* to_string(Sampler s);

struct McConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 20260101;
    Sampler sampler = Sampler::copula;
    std::uint64_t chunk_size = 1 << 16;
    unsigned workers = 0;  // 0: one per hardware thread

    void validate() const;
};

/// Counter-based SplitMix64 stream for one trial. The stream depends only on
/// (seed, trial, stream), never on which worker runs the trial.
class TrialRng {
public:
    using result_type = std::uint64_t;

    TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);

    result_type operator()();
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

private:
    std::uint64_t state_;
};

class CopulaSampler {
public:
    CopulaSampler(const FadingParams& f, const FasConfig& cfg);

    /// One draw of all port gains.
    std::vector<double> gains(TrialRng& rng) const;
    /// Largest port gain of one draw. The marginal transform is monotone, so only the
    /// largest t coordinate is mapped.
    double best_gain(TrialRng& rng) const;

    int ports() const { return ports_; }
    double theta() const { return theta_; }

private:
    void draw_t(TrialRng& rng, std::vector<double>& x) const;
    double to_gain(double t) const;

    FadingParams fading_;
    double dof_;
    double theta_;
    int ports_;
    Eigen::MatrixXd chol_;  // used only for negative theta
};

/// Requires an integer m (std::invalid_argument otherwise).
class PhysicalSampler {
public:
    PhysicalSampler(const FadingParams& f, const FasConfig& cfg);

    std::vector<double> gains(TrialRng& rng) const;
    double best_gain(TrialRng& rng) const;

    int ports() const { return static_cast<int>(factor_.rows()); }

private:
    FadingParams fading_;
    int fields_;
    Eigen::MatrixXd factor_;  // V sqrt(max(lambda, 0)) of the port correlation matrix
};

std::vector<double> sample_copula_gains(TrialRng& rng, const FadingParams& f, const FasConfig& cfg);
std::vector<double> sample_physical_gains(TrialRng& rng, const FadingParams& f, const FasConfig& cfg);

/// Draw from Gamma(m, omega / m).
double sample_gamma_gain(TrialRng& rng, const FadingParams& f);

struct OutageCount {
    std::uint64_t outages = 0;
    std::uint64_t trials = 0;
    bool infeasible = false;  // thresholds outside the feasible region; the estimate tends to 1

    double estimate() const;
    /// Binomial standard error sqrt(p (1 - p) / n).
    double std_error() const;
};

/// Counts the trials in [0, trials) for which `is_outage(trial)` holds. Trials are
/// handed to workers in chunks; the count does not depend on the partition.
std::uint64_t count_trials(std::uint64_t trials, std::uint64_t chunk_size, unsigned workers,
                           const std::function<bool(std::uint64_t)>& is_outage);

OutageCount simulate_outages(int k, const rsma::RsmaScenario& scenario, const McConfig& mc);
rsma::OpEstimate simulate_op(int k, const rsma::RsmaScenario& scenario, const McConfig& mc);

}  // namespace fasop::montecarlo

#endif  // FASOP_MONTECARLO_HPP
