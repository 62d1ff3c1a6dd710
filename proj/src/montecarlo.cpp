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

#include "fasop/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "fasop/specfun.hpp"

namespace fasop::montecarlo {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

const char* to_string(Sampler s) {
    return s == Sampler::copula ? "copula" : "physical";
}

void McConfig::validate() const {
    if (trials < 1)
        throw std::invalid_argument("mc: trials must be at least 1");
    if (chunk_size < 1)
        throw std::invalid_argument("mc: chunk_size must be at least 1");
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
    : state_(mix64(mix64(seed + kGolden) ^ (trial * 0xD1B54A32D192ED03ULL)) ^ mix64(stream + 0x8CB92BA72F3D8DD7ULL)) {}

TrialRng::result_type TrialRng::operator()() {
    state_ += kGolden;
    return mix64(state_);
}

CopulaSampler::CopulaSampler(const FadingParams& f, const FasConfig& cfg)
    : fading_(f), dof_(cfg.dof), theta_(channel::effective_theta(cfg)), ports_(cfg.ports()) {
    if (theta_ < 0.0) {
        Eigen::LLT<Eigen::MatrixXd> llt(specfun::equicorrelated(ports_, theta_));
        if (llt.info() != Eigen::Success)
            throw specfun::InvalidCorrelation("copula sampler: equicorrelation not positive definite");
        chol_ = llt.matrixL();
    }
}

void CopulaSampler::draw_t(TrialRng& rng, std::vector<double>& x) const {
    std::normal_distribution<double> normal;
    std::gamma_distribution<double> chi_half(0.5 * dof_, 2.0);
    x.resize(ports_);
    if (theta_ >= 0.0) {
        const double z0 = std::sqrt(theta_) * normal(rng);
        const double s = std::sqrt(1.0 - theta_);
        for (double& v : x)
            v = z0 + s * normal(rng);
    } else {
        Eigen::VectorXd e(ports_);
        for (int i = 0; i < ports_; ++i)
            e(i) = normal(rng);
        const Eigen::VectorXd c = chol_ * e;
        for (int i = 0; i < ports_; ++i)
            x[i] = c(i);
    }
    const double scale = 1.0 / std::sqrt(chi_half(rng) / dof_);
    for (double& v : x)
        v *= scale;
}

double CopulaSampler::to_gain(double t) const {
    double u = specfun::student_t_cdf(t, dof_);
    if (u <= 0.0)
        return 0.0;
    u = std::min(u, std::nextafter(1.0, 0.0));
    return channel::gamma_gain_quantile(u, fading_);
}

std::vector<double> CopulaSampler::gains(TrialRng& rng) const {
    std::vector<double> x;
    draw_t(rng, x);
    for (double& v : x)
        v = to_gain(v);
    return x;
}

double CopulaSampler::best_gain(TrialRng& rng) const {
    std::vector<double> x;
    draw_t(rng, x);
    return to_gain(*std::max_element(x.begin(), x.end()));
}

PhysicalSampler::PhysicalSampler(const FadingParams& f, const FasConfig& cfg) : fading_(f) {
    if (!(f.m >= 1.0 && f.m == std::round(f.m)))
        throw std::invalid_argument("physical sampler needs an integer Nakagami m; use the copula sampler");
    fields_ = static_cast<int>(f.m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(channel::correlation_matrix(cfg));
    // Eigenvalues at rounding level are treated as zero along with the negative ones.
    const double floor = eig.eigenvalues().maxCoeff() * static_cast<double>(eig.eigenvalues().size()) *
                         std::numeric_limits<double>::epsilon();
    const Eigen::VectorXd root =
        eig.eigenvalues().unaryExpr([floor](double l) { return l > floor ? std::sqrt(l) : 0.0; });
    factor_ = eig.eigenvectors() * root.asDiagonal();
}

std::vector<double> PhysicalSampler::gains(TrialRng& rng) const {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    const Eigen::Index n = factor_.rows();
    Eigen::VectorXd re(n);
    Eigen::VectorXd im(n);
    Eigen::VectorXd power = Eigen::VectorXd::Zero(n);
    for (int f = 0; f < fields_; ++f) {
        for (Eigen::Index i = 0; i < n; ++i) {
            re(i) = normal(rng);
            im(i) = normal(rng);
        }
        power += (factor_ * re).cwiseAbs2() + (factor_ * im).cwiseAbs2();
    }
    power *= fading_.omega / fading_.m;
    return {power.data(), power.data() + n};
}

double PhysicalSampler::best_gain(TrialRng& rng) const {
    const std::vector<double> g = gains(rng);
    return *std::max_element(g.begin(), g.end());
}

std::vector<double> sample_copula_gains(TrialRng& rng, const FadingParams& f, const FasConfig& cfg) {
    return CopulaSampler(f, cfg).gains(rng);
}

std::vector<double> sample_physical_gains(TrialRng& rng, const FadingParams& f, const FasConfig& cfg) {
    return PhysicalSampler(f, cfg).gains(rng);
}

double sample_gamma_gain(TrialRng& rng, const FadingParams& f) {
    return std::gamma_distribution<double>(f.m, f.omega / f.m)(rng);
}

double OutageCount::estimate() const {
    return trials == 0 ? 0.0 : static_cast<double>(outages) / static_cast<double>(trials);
}

double OutageCount::std_error() const {
    const double p = estimate();
    return trials == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

std::uint64_t count_trials(std::uint64_t trials, std::uint64_t chunk_size, unsigned workers,
                           const std::function<bool(std::uint64_t)>& is_outage) {
    if (chunk_size == 0)
        throw std::invalid_argument("count_trials: chunk_size must be positive");
    const std::uint64_t chunks = (trials + chunk_size - 1) / chunk_size;
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(chunks, 1)));

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> total{0};
    auto work = [&] {
        std::uint64_t local = 0;
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            const std::uint64_t end = std::min(trials, (c + 1) * chunk_size);
            for (std::uint64_t t = c * chunk_size; t < end; ++t)
                local += is_outage(t) ? 1 : 0;
        }
        total += local;
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    return total.load();
}

OutageCount simulate_outages(int k, const rsma::RsmaScenario& scenario, const McConfig& mc) {
    mc.validate();
    scenario.validate();
    const rsma::LinkBudget relay = scenario.relay_link();
    const rsma::LinkBudget user = scenario.user_link(k);
    const rsma::RsmaPower& power = scenario.power;
    const rsma::Thresholds& th = scenario.users[k].thresholds;
    const rsma::UserSpec& spec = scenario.users[k];

    std::function<double(TrialRng&)> user_gain;
    if (mc.sampler == Sampler::copula) {
        auto s = std::make_shared<CopulaSampler>(spec.fading, spec.fas);
        user_gain = [s](TrialRng& rng) { return s->best_gain(rng); };
    } else {
        auto s = std::make_shared<PhysicalSampler>(spec.fading, spec.fas);
        user_gain = [s](TrialRng& rng) { return s->best_gain(rng); };
    }

    auto outage = [&](std::uint64_t trial) {
        TrialRng rng(mc.seed, trial);
        const double gb = sample_gamma_gain(rng, scenario.uav_fading);
        const double gk = user_gain(rng);
        const bool ok = rsma::sinr_relay_common(gb, relay, power) > th.common &&
                        rsma::sinr_relay_private(k, gb, relay, power) > th.priv &&
                        rsma::sinr_user_common(gk, user, power) > th.common &&
                        rsma::sinr_user_private(k, gk, user, power) > th.priv;
        return !ok;
    };

    OutageCount out;
    out.trials = mc.trials;
    out.outages = count_trials(mc.trials, mc.chunk_size, mc.workers, outage);
    out.infeasible = !rsma::is_feasible(k, scenario);
    return out;
}

rsma::OpEstimate simulate_op(int k, const rsma::RsmaScenario& scenario, const McConfig& mc) {
    const OutageCount c = simulate_outages(k, scenario, mc);
    return {c.estimate(), rsma::EstimateKind::monte_carlo, c.std_error()};
}

}  // namespace fasop::montecarlo
