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

// Multivariate Student-t lower-orthant probabilities.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fasop/specfun.hpp"
#include "quadrature.hpp"

namespace fasop::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp_probability(double p) {
    assert(p > -1e-9 && p < 1.0 + 1e-9);
    return std::clamp(p, 0.0, 1.0);
}

// log P(Z > a) for a standard normal Z, finite for any finite a.
double log_normal_sf(double a) {
    if (a < 5.0)
        return std::log(normal_cdf(-a));
    // Mills ratio by its continued fraction, evaluated backwards.
    double r = a;
    for (int k = 60; k >= 1; --k)
        r = a + k / r;
    return -0.5 * a * a - 0.5 * std::log(2.0 * std::numbers::pi) - std::log(r);
}

// log(1 - (1 - q)^n) from log q.
double log_any_exceeds(double log_q, int n) {
    if (log_q < -700.0)
        return std::log(static_cast<double>(n)) + log_q;
    return std::log(-std::expm1(n * std::log1p(-std::exp(log_q))));
}

class LogSum {
public:
    void add(double log_term) {
        if (log_term == -kInf)
            return;
        if (log_term > max_) {
            sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
            max_ = log_term;
        } else {
            sum_ += std::exp(log_term - max_);
        }
    }
    double value() const { return sum_ == 0.0 ? -kInf : max_ + std::log(sum_); }

private:
    double max_ = -kInf;
    double sum_ = 0.0;
};

// Orthant events of equicorrelated standard normals Y_i = sqrt(rho) y + sqrt(1 - rho) e_i.
// Given the common factor y, each port is an independent normal with mean s*y on the
// scale c' = c / sqrt(1 - rho), s = sqrt(rho / (1 - rho)).
enum class Event {
    all_below,   // max Y <= -c
    any_above,   // max Y > c
};

// log P(event) at level c >= 0, integrating the common factor on Gauss-Legendre panels
// that resolve the conditional step at y = +-c'/s and the Laplace peak.
double log_normal_orthant(Event event, double c, int n, double rho, const quadrature::Rule& rule) {
    const double cp = c / std::sqrt(1.0 - rho);
    // Work with the mirrored common factor for the lower event so both cases read
    // "port i fails when e_i > c' - s*y".
    auto log_given = [&](double y) {
        const double log_q = log_normal_sf(cp - (rho == 0.0 ? 0.0 : std::sqrt(rho / (1.0 - rho))) * y);
        if (event == Event::any_above)
            return log_any_exceeds(log_q, n);
        return n * log_q;
    };
    if (rho == 0.0)
        return log_given(0.0);
    if (rho == 1.0)
        return log_normal_sf(c);

    const double s = std::sqrt(rho / (1.0 - rho));
    const double k = event == Event::any_above ? 1.0 : static_cast<double>(n);
    const double peak = k * s * cp / (1.0 + k * s * s);
    const double peak_sd = 1.0 / std::sqrt(1.0 + k * s * s);
    const double half_width = std::max(10.0, std::abs(peak) + 10.0 * peak_sd);
    const double step = cp / s;
    const double width = 8.0 / s;
    std::vector<double> cuts{-half_width, half_width};
    for (double v : {step - width, step, step + width, peak - 4.0 * peak_sd, peak, peak + 4.0 * peak_sd}) {
        if (v > -half_width && v < half_width)
            cuts.push_back(v);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    LogSum total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        const double rad = 0.5 * (cuts[i + 1] - cuts[i]);
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            const double y = mid + rad * rule.nodes[j];
            total.add(std::log(rad * rule.weights[j]) - 0.5 * y * y + log_given(y));
        }
    }
    return total.value() - 0.5 * std::log(2.0 * std::numbers::pi);
}

// log P(event) for the multivariate t at |x| > 0, where the normal level is c = |x| W and
// W = sqrt(S/dof) has density proportional to w^(dof-1) exp(-dof w^2 / 2). In c the
// integrand is A c^(dof-1) exp(-dof c^2 / (2 x^2)) P_normal(c). Panels of about two
// standard deviations march out from the peak until they stop contributing; a panel
// touching c = 0 uses a Gauss-Jacobi rule that absorbs c^(dof-1).
double log_t_orthant(Event event, double ax, const EquicorrMvt& spec, int order) {
    const double dof = spec.dof;
    const auto legendre = quadrature::gauss_legendre(order);
    const auto inner = quadrature::gauss_legendre(order);
    const auto jacobi = quadrature::gauss_jacobi(order, 0.0, dof - 1.0);
    const double log_a =
        std::log(2.0) + 0.5 * dof * std::log(0.5 * dof) - ln_gamma(0.5 * dof) - dof * std::log(ax);
    auto log_f = [&](double c) {
        return (dof - 1.0) * std::log(c) - 0.5 * dof * c * c / (ax * ax) +
               log_normal_orthant(event, c, spec.dim, spec.rho, *inner);
    };
    auto panel = [&](double lo, double hi) {
        LogSum sum;
        const double mid = 0.5 * (lo + hi);
        const double rad = 0.5 * (hi - lo);
        if (lo == 0.0) {
            // c^(dof-1) dc = rad^dof (1 + u)^(dof-1) du
            for (std::size_t j = 0; j < jacobi->nodes.size(); ++j) {
                const double c = mid + rad * jacobi->nodes[j];
                sum.add(std::log(jacobi->weights[j]) + dof * std::log(rad) + log_f(c) - (dof - 1.0) * std::log(c));
            }
        } else {
            for (std::size_t j = 0; j < legendre->nodes.size(); ++j)
                sum.add(std::log(rad * legendre->weights[j]) + log_f(mid + rad * legendre->nodes[j]));
        }
        return sum.value();
    };

    // Gaussian curvature of the normal event in c, used only to place panels.
    const double kappa =
        event == Event::any_above ? 1.0 : spec.dim / (1.0 + (spec.dim - 1) * std::max(spec.rho, 0.0));
    const double precision = dof / (ax * ax) + kappa;
    const double centre = std::sqrt(std::max(dof - 1.0, 0.0) / precision);
    const double h = 2.0 / std::sqrt(2.0 * precision);
    constexpr double kNegligible = 40.0;  // e-folds below the running total
    constexpr int kMaxPanels = 400;

    LogSum total;
    double lo = std::max(centre - 0.5 * h, 0.0);
    double hi = centre + 0.5 * h;
    if (lo < h)
        lo = 0.0;
    total.add(panel(lo, hi));
    for (int i = 0; i < kMaxPanels && lo > 0.0; ++i) {
        const double next = lo - h < h ? 0.0 : lo - h;
        const double part = panel(next, lo);
        total.add(part);
        lo = next;
        if (part < total.value() - kNegligible)
            break;
    }
    for (int i = 0; i < kMaxPanels; ++i) {
        const double part = panel(hi, hi + h);
        total.add(part);
        hi += h;
        if (part < total.value() - kNegligible)
            break;
    }
    return log_a + total.value();
}

// log P(event) with the order doubled until the log changes by less than 1e-11.
double log_t_orthant_converged(Event event, double ax, const EquicorrMvt& spec) {
    double previous = log_t_orthant(event, ax, spec, 16);
    double current = previous;
    for (int order = 32; order <= 256; order *= 2) {
        current = log_t_orthant(event, ax, spec, order);
        if (std::abs(current - previous) < 1e-11 || current == -kInf)
            break;
        previous = current;
    }
    return current;
}

std::vector<double> first_primes(std::size_t count) {
    std::vector<double> primes;
    for (long candidate = 2; primes.size() < count; ++candidate) {
        bool prime = true;
        for (long d = 2; d * d <= candidate; ++d) {
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(static_cast<double>(candidate));
    }
    return primes;
}

}  // namespace

Eigen::MatrixXd equicorrelated(int dim, double rho) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(dim, dim, rho);
    m.diagonal().setOnes();
    return m;
}

double equicorr_mvt_cdf_common(double x, const EquicorrMvt& spec) {
    spec.validate();
    if (std::isnan(x))
        throw std::domain_error("equicorr_mvt_cdf_common: argument is NaN");
    if (x == -kInf)
        return 0.0;
    if (x == kInf)
        return 1.0;
    if (spec.dim == 1 || spec.rho == 1.0)
        return student_t_cdf(x, spec.dof);
    if (spec.rho < 0.0) {
        const std::vector<double> upper(spec.dim, x);
        return clamp_probability(
            mvt_cdf_qmc(upper, equicorrelated(spec.dim, spec.rho), spec.dof, 1e-5, 0x6571636f7272ULL).value);
    }
    if (x == 0.0) {
        const auto rule = quadrature::gauss_legendre(64);
        return clamp_probability(std::exp(log_normal_orthant(Event::all_below, 0.0, spec.dim, spec.rho, *rule)));
    }
    if (x < 0.0)
        return clamp_probability(std::exp(log_t_orthant_converged(Event::all_below, -x, spec)));
    return clamp_probability(-std::expm1(log_t_orthant_converged(Event::any_above, x, spec)));
}

double equicorr_mvt_max_sf(double x, const EquicorrMvt& spec) {
    spec.validate();
    if (std::isnan(x))
        throw std::domain_error("equicorr_mvt_max_sf: argument is NaN");
    if (x == -kInf)
        return 1.0;
    if (x == kInf)
        return 0.0;
    if (spec.dim == 1 || spec.rho == 1.0)
        return student_t_cdf(-x, spec.dof);
    if (x <= 0.0 || spec.rho < 0.0)
        return 1.0 - equicorr_mvt_cdf_common(x, spec);
    return clamp_probability(std::exp(log_t_orthant_converged(Event::any_above, x, spec)));
}

QmcEstimate mvt_cdf_qmc(std::span<const double> upper, const Eigen::MatrixXd& corr, double dof,
                        double target_se, std::uint64_t seed) {
    const auto dim = static_cast<Eigen::Index>(upper.size());
    if (dim < 1)
        throw std::invalid_argument("mvt_cdf_qmc: empty limit vector");
    if (corr.rows() != dim || corr.cols() != dim)
        throw std::invalid_argument("mvt_cdf_qmc: dimension mismatch between limits (" + std::to_string(dim) +
                                    ") and correlation matrix (" + std::to_string(corr.rows()) + "x" +
                                    std::to_string(corr.cols()) + ")");
    if (!(dof > 0.0))
        throw std::domain_error("mvt_cdf_qmc: degrees of freedom must be positive");
    if (!(target_se > 0.0))
        throw std::domain_error("mvt_cdf_qmc: target standard error must be positive");
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (std::abs(corr(i, i) - 1.0) > 1e-12)
            throw InvalidCorrelation("mvt_cdf_qmc: correlation matrix must have unit diagonal");
        for (Eigen::Index j = 0; j < i; ++j) {
            if (std::abs(corr(i, j) - corr(j, i)) > 1e-12)
                throw InvalidCorrelation("mvt_cdf_qmc: correlation matrix must be symmetric");
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(corr, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10)
        throw InvalidCorrelation("mvt_cdf_qmc: correlation matrix is not positive semi-definite");
    for (double b : upper) {
        if (std::isnan(b))
            throw std::domain_error("mvt_cdf_qmc: limit is NaN");
        if (b == -kInf)
            return {0.0, 0.0, 0};
    }

    // Cholesky factor tolerant of zero pivots (semi-definite input).
    Eigen::MatrixXd chol = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        double d = corr(j, j) - chol.row(j).head(j).squaredNorm();
        if (d <= 1e-12) {
            continue;
        }
        d = std::sqrt(d);
        chol(j, j) = d;
        for (Eigen::Index i = j + 1; i < dim; ++i)
            chol(i, j) = (corr(i, j) - chol.row(i).head(j).dot(chol.row(j).head(j))) / d;
    }

    // Kronecker lattice generators sqrt(prime) mod 1; coordinate 0 drives the
    // chi-square mixing variable, coordinates 1..dim-1 the conditional normals.
    const auto primes = first_primes(static_cast<std::size_t>(dim));
    std::vector<double> generator(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double r = std::sqrt(primes[i]);
        generator[i] = r - std::floor(r);
    }

    constexpr int kShifts = 32;
    constexpr std::uint64_t kMaxSamples = std::uint64_t{1} << 25;
    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> shifts(kShifts, std::vector<double>(dim));
    for (auto& shift : shifts)
        for (double& v : shift)
            v = unit(engine);

    std::vector<double> y(dim);
    auto integrand = [&](const std::vector<double>& w) {
        const double u0 = std::clamp(w[0], 1e-300, 1.0 - 1e-16);
        const double r = std::sqrt(2.0 * inverse_reg_lower_inc_gamma(0.5 * dof, u0) / dof);
        double prob = 1.0;
        for (Eigen::Index i = 0; i < dim; ++i) {
            double partial = 0.0;
            for (Eigen::Index j = 0; j < i; ++j)
                partial += chol(i, j) * y[j];
            const double limit = upper[i] * r - partial;
            if (chol(i, i) == 0.0) {
                if (limit < 0.0)
                    return 0.0;
                y[i] = 0.0;
                continue;
            }
            const double e = (upper[i] == kInf) ? 1.0 : normal_cdf(limit / chol(i, i));
            prob *= e;
            if (prob == 0.0)
                return 0.0;
            if (i + 1 < dim)
                y[i] = normal_quantile(std::clamp(w[i + 1] * e, 1e-300, 1.0 - 1e-16));
        }
        return prob;
    };

    // The shift-to-shift spread underestimates the error when every shift misses a
    // thin feature of the integrand, so the target must hold on two consecutive
    // refinements before the estimate is accepted.
    QmcEstimate est;
    std::vector<double> point(dim);
    int rounds_on_target = 0;
    for (std::uint64_t n = 1024;; n *= 2) {
        std::vector<double> means(kShifts, 0.0);
        for (int s = 0; s < kShifts; ++s) {
            double sum = 0.0;
            for (std::uint64_t k = 1; k <= n; ++k) {
                for (Eigen::Index i = 0; i < dim; ++i) {
                    double v = static_cast<double>(k) * generator[i] + shifts[s][i];
                    v -= std::floor(v);
                    point[i] = 1.0 - std::abs(2.0 * v - 1.0);  // baker's transform
                }
                sum += integrand(point);
            }
            means[s] = sum / static_cast<double>(n);
        }
        double mean = 0.0;
        for (double m : means)
            mean += m;
        mean /= kShifts;
        double var = 0.0;
        for (double m : means)
            var += (m - mean) * (m - mean);
        var /= (kShifts - 1);
        est.value = std::clamp(mean, 0.0, 1.0);
        est.std_error = std::sqrt(var / kShifts);
        est.samples_used = n * kShifts;
        rounds_on_target = (est.std_error <= target_se) ? rounds_on_target + 1 : 0;
        if (rounds_on_target == 2 || est.samples_used >= kMaxSamples)
            break;
    }
    return est;
}

}  // namespace fasop::specfun
