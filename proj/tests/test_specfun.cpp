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

#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "fasop/specfun.hpp"
#include "support.hpp"

using namespace fasop::specfun;

TEST_SUITE("specfun") {

TEST_CASE("ln_gamma at reference points") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ln_gamma(4.0) == doctest::Approx(1.7917594692280550).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-14));
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.0), std::domain_error);
}

TEST_CASE("ln_gamma against Boost") {
    Gen g(101);
    for (int i = 0; i < 500; ++i) {
        const double a = g.log_uniform(1e-3, 1e4);
        CHECK(close_rel(ln_gamma(a), boost::math::lgamma(a), 1e-13, 1e-14));
    }
}

TEST_CASE("regularized incomplete gamma reference points") {
    CHECK(reg_lower_inc_gamma(2.0, 0.0) == 0.0);
    CHECK(reg_lower_inc_gamma(1.0, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(reg_lower_inc_gamma(2.0, 3.8897) == doctest::Approx(0.9).epsilon(1e-4));
    CHECK(reg_lower_inc_gamma(2.0, std::numeric_limits<double>::infinity()) == 1.0);
    CHECK_THROWS_AS(reg_lower_inc_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_lower_inc_gamma(1.0, -1.0), std::domain_error);
}

TEST_CASE("regularized incomplete gamma against Boost") {
    Gen g(202);
    for (int i = 0; i < 2000; ++i) {
        const double a = g.uniform(0.5, 10.0);
        const double x = g.uniform(0.0, 60.0);
        CHECK(std::abs(reg_lower_inc_gamma(a, x) - boost::math::gamma_p(a, x)) <= 1e-13);
        const double q = boost::math::gamma_q(a, x);
        CHECK(close_rel(reg_upper_inc_gamma(a, x), q, 1e-11, 1e-300));
    }
    // deep upper tail keeps relative accuracy
    CHECK(close_rel(reg_upper_inc_gamma(4.0, 200.0), boost::math::gamma_q(4.0, 200.0), 1e-11));
    CHECK(close_rel(reg_lower_inc_gamma(2.0, 1e-6), boost::math::gamma_p(2.0, 1e-6), 1e-12));
}

TEST_CASE("property: incomplete gamma is a CDF in x") {
    Gen g(303);
    for (int trial = 0; trial < 100; ++trial) {
        const double a = g.uniform(0.5, 10.0);
        CHECK(reg_lower_inc_gamma(a, 0.0) == 0.0);
        double prev = 0.0;
        for (double x = 0.0; x <= 80.0; x += g.uniform(0.01, 1.0)) {
            const double p = reg_lower_inc_gamma(a, x);
            CHECK(p >= prev);
            CHECK(p <= 1.0);
            CHECK(std::abs(p + reg_upper_inc_gamma(a, x) - 1.0) <= 1e-14);
            prev = p;
        }
        CHECK(reg_lower_inc_gamma(a, 1e3) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("inverse incomplete gamma") {
    Gen g(404);
    for (int i = 0; i < 500; ++i) {
        const double a = g.uniform(0.5, 10.0);
        const double p = g.uniform(1e-9, 1.0 - 1e-9);
        const double x = inverse_reg_lower_inc_gamma(a, p);
        CHECK(close_rel(x, boost::math::gamma_p_inv(a, p), 1e-10, 1e-300));
    }
    CHECK(inverse_reg_lower_inc_gamma(3.0, 0.0) == 0.0);
    CHECK(std::isinf(inverse_reg_lower_inc_gamma(3.0, 1.0)));
}

TEST_CASE("regularized incomplete beta against Boost") {
    Gen g(505);
    for (int i = 0; i < 1000; ++i) {
        const double a = g.log_uniform(0.05, 200.0);
        const double b = g.log_uniform(0.05, 200.0);
        const double x = g.uniform(0.0, 1.0);
        CHECK(close_rel(reg_inc_beta(a, b, x), boost::math::ibeta(a, b, x), 1e-11, 1e-15));
    }
}

TEST_CASE("normal kernels against Boost") {
    const boost::math::normal_distribution<double> n;
    Gen g(606);
    for (int i = 0; i < 500; ++i) {
        const double x = g.uniform(-30.0, 8.0);
        CHECK(close_rel(normal_cdf(x), boost::math::cdf(n, x), 1e-12, 1e-300));
        const double p = g.log_uniform(1e-300, 0.5);
        CHECK(close_rel(normal_quantile(p), boost::math::quantile(n, p), 1e-12));
        if (p > 1e-8)
            CHECK(close_rel(normal_quantile(1.0 - p), -normal_quantile(p), 1e-6, 1e-12));
    }
}

TEST_CASE("Student t CDF reference points") {
    CHECK(student_t_cdf(0.0, 25.0) == 0.5);
    CHECK(student_t_cdf(std::numeric_limits<double>::infinity(), 25.0) == 1.0);
    CHECK(student_t_cdf(1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(student_t_cdf(1.0, 0.0), std::domain_error);
}

TEST_CASE("Student t CDF and pdf against Boost") {
    Gen g(707);
    for (int i = 0; i < 2000; ++i) {
        const double nu = g.log_uniform(0.5, 1e4);
        const double x = g.uniform(-60.0, 60.0);
        const boost::math::students_t_distribution<double> t(nu);
        CHECK(close_rel(student_t_cdf(x, nu), boost::math::cdf(t, x), 1e-11, 1e-300));
        CHECK(close_rel(student_t_pdf(x, nu), boost::math::pdf(t, x), 1e-11, 1e-300));
    }
}

TEST_CASE("Student t quantile reference points") {
    CHECK(student_t_quantile(0.5, 25.0) == 0.0);
    CHECK(student_t_quantile(0.75, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(student_t_quantile(0.975, 25.0) == doctest::Approx(2.059538552753294).epsilon(1e-12));
    CHECK_THROWS_AS(student_t_quantile(0.0, 25.0), std::domain_error);
    CHECK(std::isinf(student_t_quantile(1.0, 25.0, true)));
}

TEST_CASE("Student t quantile against Boost") {
    Gen g(808);
    for (int i = 0; i < 1000; ++i) {
        const double nu = g.log_uniform(0.5, 1e4);
        const double p = g.log_uniform(1e-100, 0.5);
        const boost::math::students_t_distribution<double> t(nu);
        CHECK(close_rel(student_t_quantile(p, nu), boost::math::quantile(t, p), 1e-10));
    }
}

TEST_CASE("property: t quantile inverts the t CDF") {
    Gen g(909);
    for (double nu : {1.0, 2.0, 25.0, 200.0}) {
        for (int i = 0; i < 400; ++i) {
            const double x = g.uniform(-8.0, 8.0);
            // The upper half is checked through symmetry: a double near 1 cannot carry
            // the tail mass needed to recover x to 1e-9.
            const double back = x <= 0.0 ? student_t_quantile(student_t_cdf(x, nu), nu)
                                         : -student_t_quantile(student_t_cdf(-x, nu), nu);
            CHECK(std::abs(back - x) <= 1e-9);
        }
    }
}

}  // TEST_SUITE
