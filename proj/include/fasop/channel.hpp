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

#ifndef FASOP_CHANNEL_HPP
#define FASOP_CHANNEL_HPP

#include <optional>

#include <Eigen/Dense>

namespace fasop::channel {

/// Nakagami-m fading; the channel gain is Gamma distributed with shape m and mean omega.
struct FadingParams {
    double m = 2.0;
    double omega = 1.0;

    void validate() const;
};

enum class CorrelationKernel {
    bessel_j0,  // cylindrical J0, 2D rich scattering
    sinc,       // spherical j0(x) = sin(x)/x
};

/// How the scalar copula parameter is extracted from the port correlation matrix.
enum class ThetaRule {
    mean_gain_correlation,   // mean of squared field correlations (correlation of the gains)
    mean_field_correlation,  // mean of the field correlations themselves
};

/// Fluid-antenna grid of one ground user. Apertures are in wavelengths per dimension.
struct FasConfig {
    int n1 = 2;
    int n2 = 2;
    double w1 = 1.0;
    double w2 = 1.0;
    double dof = 25.0;
    std::optional<double> theta_override;
    CorrelationKernel kernel = CorrelationKernel::bessel_j0;
    ThetaRule theta_rule = ThetaRule::mean_gain_correlation;

    int ports() const { return n1 * n2; }
    void validate() const;
};

/// One-based 2D port coordinates.
struct PortIndex {
    int n1 = 1;
    int n2 = 1;

    friend bool operator==(const PortIndex&, const PortIndex&) = default;
};

/// Row-major mapping n = (n1 - 1) * N2 + n2, one-based. std::out_of_range when outside the grid.
PortIndex port_index_to_2d(int n, const FasConfig& cfg);
int port_index_to_1d(PortIndex p, const FasConfig& cfg);

/// Spatial correlation between two ports. std::out_of_range for indices outside the grid.
double port_correlation(PortIndex p, PortIndex q, const FasConfig& cfg);

/// Pairwise port correlations without any regularization.
Eigen::MatrixXd raw_correlation_matrix(const FasConfig& cfg);

/// Pairwise port correlations. When the smallest eigenvalue is below -1e-12 the
/// diagonal is shifted just enough to restore PSD and the result rescaled to unit diagonal.
Eigen::MatrixXd correlation_matrix(const FasConfig& cfg);

/// Scalar equicorrelation used by the copula. Returns the override when present, 1 for a
/// single port, and otherwise the rule's mean over distinct port pairs clamped into
/// (-1/(N-1) + 1e-9, 1].
double effective_theta(const FasConfig& cfg);

/// Gamma gain CDF: P(m, m g / omega).
double gamma_gain_cdf(double g, const FadingParams& f);

/// Leading small-argument term (m g / omega)^m / (m Gamma(m)). Not clamped.
double gamma_gain_cdf_asymptotic(double g, const FadingParams& f);

/// Inverse of gamma_gain_cdf. Returns +inf at u = 1.
double gamma_gain_quantile(double u, const FadingParams& f);

/// CDF of the best-port gain under the equicorrelated t-copula.
double fas_gain_cdf(double g, const FadingParams& f, const FasConfig& cfg);

/// 1 - fas_gain_cdf, with relative accuracy kept when it is far below machine epsilon.
double fas_gain_sf(double g, const FadingParams& f, const FasConfig& cfg);

/// As fas_gain_cdf with the marginal replaced by its leading term (clamped to [0, 1]).
double fas_gain_cdf_asymptotic(double g, const FadingParams& f, const FasConfig& cfg);

/// Copula step shared by the two CDFs: maps a marginal probability u to the best-port CDF.
double fas_copula_transform(double u, const FasConfig& cfg);

}  // namespace fasop::channel

#endif  // FASOP_CHANNEL_HPP
