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

#ifndef FASOP_SPECFUN_HPP
#define FASOP_SPECFUN_HPP

#include <cstdint>
#include <span>
#include <stdexcept>

#include <Eigen/Dense>

namespace fasop::specfun {

/// Correlation matrix has an off-diagonal value outside the positive-definite range,
/// or is not positive semi-definite.
class InvalidCorrelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Multivariate Student-t with an equicorrelated (compound-symmetric) scale matrix.
struct EquicorrMvt {
    int dim = 1;
    double dof = 1.0;
    double rho = 0.0;

    /// Throws std::domain_error for dim < 1 or dof <= 0 and InvalidCorrelation when
    /// rho <= -1/(dim-1) or rho > 1.
    void validate() const;
};

struct QmcEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples_used = 0;
};

// Scalar kernels. All throw std::domain_error on arguments outside their domain.

double ln_gamma(double a);

/// P(a, x) = γ(a, x) / Γ(a). Series below x = a + 1, continued fraction above.
double reg_lower_inc_gamma(double a, double x);

/// Q(a, x) = 1 - P(a, x), computed without cancellation in the upper tail.
double reg_upper_inc_gamma(double a, double x);

/// Inverse of P(a, ·): the x with P(a, x) = p. Returns 0 at p = 0 and +inf at p = 1.
double inverse_reg_lower_inc_gamma(double a, double p);

/// I_x(a, b), the regularized incomplete beta function.
double reg_inc_beta(double a, double b, double x);

double normal_cdf(double x);
double normal_quantile(double p);

double student_t_cdf(double x, double dof);
double student_t_pdf(double x, double dof);

/// Quantile of the univariate t. Exact p = 0 or p = 1 is a domain error unless
/// `allow_infinite` is set, in which case -inf / +inf are returned.
double student_t_quantile(double p, double dof, bool allow_infinite = false);

/// P(X_1 <= x, ..., X_dim <= x) for the equicorrelated multivariate t.
///
/// For rho in [0, 1] the probability is a two-dimensional integral over the common
/// Gaussian factor and the chi-square mixing variable, evaluated by deterministic
/// composite quadrature in log space (absolute error below 1e-9 in both tails). Negative
/// rho has no real common-factor representation and is delegated to mvt_cdf_qmc.
double equicorr_mvt_cdf_common(double x, const EquicorrMvt& spec);

/// P(max_i X_i > x) = 1 - equicorr_mvt_cdf_common(x, spec), with relative accuracy
/// retained when the probability is far below machine epsilon (x > 0, rho in [0, 1]).
double equicorr_mvt_max_sf(double x, const EquicorrMvt& spec);

/// Randomized quasi-Monte Carlo estimate of P(X <= upper) for a multivariate t with
/// unit-diagonal scale matrix `corr`. Uses the sequential conditioning transform with
/// randomly shifted Kronecker lattices; the estimate is refined until its standard
/// error falls below `target_se` or the sample budget is exhausted.
QmcEstimate mvt_cdf_qmc(std::span<const double> upper, const Eigen::MatrixXd& corr, double dof,
                        double target_se, std::uint64_t seed);

/// Equicorrelated correlation matrix of the given size.
Eigen::MatrixXd equicorrelated(int dim, double rho);

}  // namespace fasop::specfun

#endif  // FASOP_SPECFUN_HPP
