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

#include <array>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fasop/specfun.hpp"
#include "support.hpp"

using namespace fasop::specfun;

namespace {

double phi_cdf(double x) {
    return 0.5 * boost::math::erfc(-x / std::numbers::sqrt2);
}

// Equicorrelated normal orthant P(all Z_i <= x) by integration over the common factor.
double normal_orthant(double x, int dim, double rho) {
    const auto f = [&](double z) {
        const double inner = phi_cdf((x - std::sqrt(rho) * z) / std::sqrt(1.0 - rho));
        return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi) * std::pow(inner, dim);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -12.0, 12.0, 15, 1e-14);
}

// P(T1 <= x, T2 <= x) for a bivariate t with identity scale, integrating over the
// chi-square mixing variable.
double bivariate_t_identity(double x, double nu) {
    const boost::math::chi_squared_distribution<double> chi(nu);
    const auto f = [&](double s) {
        const double p = phi_cdf(x * std::sqrt(s / nu));
        return boost::math::pdf(chi, s) * p * p;
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-13);
}

}  // namespace

TEST_SUITE("mvt") {

TEST_CASE("one dimension and comonotone limits reduce to the marginal") {
    for (double rho : {-0.5, 0.0, 0.3, 0.9}) {
        CHECK(equicorr_mvt_cdf_common(0.7, {1, 25.0, rho}) == doctest::Approx(student_t_cdf(0.7, 25.0)).epsilon(1e-13));
    }
    CHECK(equicorr_mvt_cdf_common(0.7, {4, 25.0, 1.0}) == doctest::Approx(student_t_cdf(0.7, 25.0)).epsilon(1e-13));
}

TEST_CASE("agrees with the frozen Monte Carlo oracle") {
    // 1e7 draws of the equicorrelated t, dim 4, nu 25, rho 0.5, at x = 1.2
    constexpr double mc = 0.7016658, se = 1.4468e-4;
    const double v = equicorr_mvt_cdf_common(1.2, {4, 25.0, 0.5});
    CHECK(std::abs(v - mc) <= 3.0 * se);
    CHECK(v == doctest::Approx(0.701718529690).epsilon(1e-10));
}

TEST_CASE("tail values against independent high-precision references") {
    CHECK(close_rel(equicorr_mvt_max_sf(2.0, {4, 1.0, 0.3}), 0.3313828599793, 1e-10));
    CHECK(close_rel(equicorr_mvt_max_sf(50.0, {4, 1.0, 0.0}), 0.01668496651618, 1e-10));
    CHECK(close_rel(equicorr_mvt_max_sf(50.0, {4, 3.0, 0.3}), 2.637718966636e-05, 1e-9));
    CHECK(equicorr_mvt_cdf_common(2.5, {2, 25.0, 0.9}) == doctest::Approx(0.9860993811152553).epsilon(1e-11));
}

TEST_CASE("survival and CDF are complementary") {
    Gen g(11);
    for (int i = 0; i < 40; ++i) {
        const EquicorrMvt s{g.integer(2, 8), g.log_uniform(1.0, 300.0), g.uniform(0.0, 0.95)};
        const double x = g.uniform(-3.0, 4.0);
        CHECK(std::abs(equicorr_mvt_cdf_common(x, s) + equicorr_mvt_max_sf(x, s) - 1.0) <= 1e-12);
    }
}

TEST_CASE("invalid correlation is rejected") {
    CHECK_THROWS_AS(equicorr_mvt_cdf_common(0.0, {4, 25.0, -1.0 / 3.0}), InvalidCorrelation);
    CHECK_THROWS_AS(equicorr_mvt_cdf_common(0.0, {4, 25.0, 1.2}), InvalidCorrelation);
    CHECK_THROWS_AS(equicorr_mvt_cdf_common(0.0, {0, 25.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(equicorr_mvt_cdf_common(0.0, {3, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("property: nondecreasing in x and rho, nonincreasing in dim") {
    Gen g(12);
    for (int trial = 0; trial < 12; ++trial) {
        const double nu = g.log_uniform(1.0, 200.0);
        const double rho = g.uniform(0.0, 0.9);
        const int dim = g.integer(2, 6);
        double prev = 0.0;
        for (double x = -4.0; x <= 6.0; x += 0.5) {
            const double v = equicorr_mvt_cdf_common(x, {dim, nu, rho});
            CHECK(v >= prev - 1e-15);
            prev = v;
        }
        const double x = g.uniform(-1.5, 3.0);
        double by_rho = 0.0;
        for (double r : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95}) {
            const double v = equicorr_mvt_cdf_common(x, {dim, nu, r});
            CHECK(v >= by_rho - 1e-15);
            by_rho = v;
        }
        double by_dim = 1.0;
        for (int d = 1; d <= 8; ++d) {
            const double v = equicorr_mvt_cdf_common(x, {d, nu, rho});
            CHECK(v <= by_dim + 1e-15);
            by_dim = v;
        }
    }
}

TEST_CASE("large dof converges to the normal orthant") {
    for (double rho : {0.0, 0.25, 0.5, 0.8}) {
        for (double x : {-1.0, 0.0, 0.8, 2.0}) {
            for (int dim : {2, 4, 9}) {
                CHECK(std::abs(equicorr_mvt_cdf_common(x, {dim, 1e6, rho}) - normal_orthant(x, dim, rho)) <= 1e-6);
            }
        }
    }
}

TEST_CASE("QMC evaluator reference points") {
    const std::array<double, 1> zero{0.0};
    const QmcEstimate a = mvt_cdf_qmc(zero, equicorrelated(1, 0.0), 25.0, 1e-4, 1);
    CHECK(std::abs(a.value - 0.5) <= 3.0 * a.std_error + 1e-12);

    const std::array<double, 4> up{1.2, 1.2, 1.2, 1.2};
    const QmcEstimate b = mvt_cdf_qmc(up, equicorrelated(4, 0.5), 25.0, 1e-4, 2);
    CHECK(b.std_error <= 1e-4);
    CHECK(std::abs(b.value - equicorr_mvt_cdf_common(1.2, {4, 25.0, 0.5})) <= 3.0 * b.std_error);

    // identity scale: the components are uncorrelated but not independent
    const std::array<double, 2> up2{0.7, 0.7};
    const QmcEstimate c = mvt_cdf_qmc(up2, equicorrelated(2, 0.0), 25.0, 1e-5, 3);
    const double oracle = bivariate_t_identity(0.7, 25.0);
    CHECK(std::abs(c.value - oracle) <= 3.0 * c.std_error);
    // the shared scale makes the components positively dependent
    CHECK(oracle > std::pow(student_t_cdf(0.7, 25.0), 2) + 1e-4);
}

TEST_CASE("negative equicorrelation is routed to QMC and agrees with an independent run") {
    const EquicorrMvt s{3, 10.0, -0.3};
    const double v = equicorr_mvt_cdf_common(0.5, s);
    const std::array<double, 3> up{0.5, 0.5, 0.5};
    const QmcEstimate q = mvt_cdf_qmc(up, equicorrelated(3, -0.3), 10.0, 2e-5, 99);
    CHECK(std::abs(v - q.value) <= 3.0 * std::hypot(q.std_error, 1e-5));
    CHECK(v > 0.0);
    CHECK(v < student_t_cdf(0.5, 10.0));
}

}  // TEST_SUITE
