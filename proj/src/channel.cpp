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

#include "fasop/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "fasop/specfun.hpp"

namespace fasop::channel {

namespace {

constexpr double kPsdTolerance = 1e-12;

void check_port(PortIndex p, const FasConfig& cfg) {
    if (p.n1 < 1 || p.n1 > cfg.n1 || p.n2 < 1 || p.n2 > cfg.n2)
        throw std::out_of_range("port (" + std::to_string(p.n1) + ", " + std::to_string(p.n2) +
                                ") outside a " + std::to_string(cfg.n1) + "x" + std::to_string(cfg.n2) +
                                " grid");
}

double kernel_value(double x, CorrelationKernel kernel) {
    if (x == 0.0)
        return 1.0;
    switch (kernel) {
    case CorrelationKernel::bessel_j0:
        return std::cyl_bessel_j(0.0, x);
    case CorrelationKernel::sinc:
        return std::sin(x) / x;
    }
    return 1.0;
}

}  // namespace

void FadingParams::validate() const {
    if (!(m >= 0.5))
        throw std::invalid_argument("fading: m must be at least 0.5");
    if (!(omega > 0.0))
        throw std::invalid_argument("fading: omega must be positive");
}

void FasConfig::validate() const {
    if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("fas: port counts must be positive");
    if (!(w1 > 0.0 && w2 > 0.0))
        throw std::invalid_argument("fas: apertures must be positive");
    if (!(dof > 0.0))
        throw std::invalid_argument("fas: dof must be positive");
    if (theta_override) {
        const int n = ports();
        const double lower = n > 1 ? -1.0 / (n - 1) : -std::numeric_limits<double>::infinity();
        if (!(*theta_override > lower && *theta_override <= 1.0))
            throw std::invalid_argument("fas: theta_override outside (-1/(N-1), 1]");
    }
}

PortIndex port_index_to_2d(int n, const FasConfig& cfg) {
    if (n < 1 || n > cfg.ports())
        throw std::out_of_range("port " + std::to_string(n) + " outside 1.." + std::to_string(cfg.ports()));
    return {(n - 1) / cfg.n2 + 1, (n - 1) % cfg.n2 + 1};
}

int port_index_to_1d(PortIndex p, const FasConfig& cfg) {
    check_port(p, cfg);
    return (p.n1 - 1) * cfg.n2 + p.n2;
}

double port_correlation(PortIndex p, PortIndex q, const FasConfig& cfg) {
    check_port(p, cfg);
    check_port(q, cfg);
    // A dimension with a single port never has differing indices, so the N - 1
    // denominators are only formed when nonzero.
    const double d1 = p.n1 == q.n1 ? 0.0 : (p.n1 - q.n1) * cfg.w1 / (cfg.n1 - 1);
    const double d2 = p.n2 == q.n2 ? 0.0 : (p.n2 - q.n2) * cfg.w2 / (cfg.n2 - 1);
    return kernel_value(2.0 * std::numbers::pi * std::hypot(d1, d2), cfg.kernel);
}

Eigen::MatrixXd raw_correlation_matrix(const FasConfig& cfg) {
    const int n = cfg.ports();
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i) {
        const PortIndex p = port_index_to_2d(i + 1, cfg);
        for (int j = i + 1; j < n; ++j) {
            const double v = port_correlation(p, port_index_to_2d(j + 1, cfg), cfg);
            r(i, j) = v;
            r(j, i) = v;
        }
    }
    return r;
}

Eigen::MatrixXd correlation_matrix(const FasConfig& cfg) {
    Eigen::MatrixXd r = raw_correlation_matrix(cfg);
    if (r.rows() == 1)
        return r;
    const double lambda_min = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(r, Eigen::EigenvaluesOnly)
                                  .eigenvalues()
                                  .minCoeff();
    if (lambda_min >= -kPsdTolerance)
        return r;
    const double shift = -lambda_min;
    r.diagonal().array() += shift;
    r /= 1.0 + shift;
    r.diagonal().setOnes();
    return r;
}

double effective_theta(const FasConfig& cfg) {
    if (cfg.theta_override)
        return *cfg.theta_override;
    const int n = cfg.ports();
    if (n == 1)
        return 1.0;
    const Eigen::MatrixXd r = correlation_matrix(cfg);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j)
            sum += cfg.theta_rule == ThetaRule::mean_gain_correlation ? r(i, j) * r(i, j) : r(i, j);
    }
    const double mean = sum / (0.5 * n * (n - 1));
    return std::clamp(mean, -1.0 / (n - 1) + 1e-9, 1.0);
}

double gamma_gain_cdf(double g, const FadingParams& f) {
    if (!(g >= 0.0))
        throw std::domain_error("gamma_gain_cdf: gain must be nonnegative");
    if (std::isinf(g))
        return 1.0;
    return specfun::reg_lower_inc_gamma(f.m, f.m * g / f.omega);
}

double gamma_gain_cdf_asymptotic(double g, const FadingParams& f) {
    if (!(g >= 0.0))
        throw std::domain_error("gamma_gain_cdf_asymptotic: gain must be nonnegative");
    if (g == 0.0)
        return 0.0;
    return std::exp(f.m * std::log(f.m * g / f.omega) - std::log(f.m) - specfun::ln_gamma(f.m));
}

double gamma_gain_quantile(double u, const FadingParams& f) {
    return specfun::inverse_reg_lower_inc_gamma(f.m, u) * f.omega / f.m;
}

double fas_copula_transform(double u, const FasConfig& cfg) {
    if (u <= 0.0)
        return 0.0;
    if (u >= 1.0)
        return 1.0;
    const int n = cfg.ports();
    if (n == 1)
        return u;
    const double x = specfun::student_t_quantile(u, cfg.dof);
    return specfun::equicorr_mvt_cdf_common(x, {n, cfg.dof, effective_theta(cfg)});
}

double fas_gain_cdf(double g, const FadingParams& f, const FasConfig& cfg) {
    return fas_copula_transform(gamma_gain_cdf(g, f), cfg);
}

double fas_gain_sf(double g, const FadingParams& f, const FasConfig& cfg) {
    if (!(g >= 0.0))
        throw std::domain_error("fas_gain_sf: gain must be nonnegative");
    if (std::isinf(g))
        return 0.0;
    const double q = specfun::reg_upper_inc_gamma(f.m, f.m * g / f.omega);
    const int n = cfg.ports();
    if (n == 1 || q <= 0.0 || q >= 1.0)
        return q;
    const double x = q < 0.5 ? -specfun::student_t_quantile(q, cfg.dof) : specfun::student_t_quantile(1.0 - q, cfg.dof);
    return specfun::equicorr_mvt_max_sf(x, {n, cfg.dof, effective_theta(cfg)});
}

double fas_gain_cdf_asymptotic(double g, const FadingParams& f, const FasConfig& cfg) {
    return fas_copula_transform(std::min(gamma_gain_cdf_asymptotic(g, f), 1.0), cfg);
}

}  // namespace fasop::channel
