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

#include "fasop/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace fasop::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxIter = 200000;

[[noreturn]] void domain_fail(const char* fn, const std::string& what) {
    throw std::domain_error(std::string(fn) + ": " + what);
}

// Stirling series, valid for z >= 10 to full double precision.
double ln_gamma_stirling(double z) {
    static constexpr double c[] = {1.0 / 12.0,        -1.0 / 360.0,      1.0 / 1260.0,
                                   -1.0 / 1680.0,     1.0 / 1188.0,      -691.0 / 360360.0,
                                   1.0 / 156.0,       -3617.0 / 122400.0};
    const double zi = 1.0 / z;
    const double zi2 = zi * zi;
    double series = 0.0;
    double pow = zi;
    for (double coef : c) {
        series += coef * pow;
        pow *= zi2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// ln( x^a e^-x / Gamma(a) ), the common prefactor of both incomplete gamma expansions.
double gamma_prefactor_log(double a, double x) {
    return a * std::log(x) - x - ln_gamma(a);
}

double lower_gamma_series(double a, double x) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 0; n < kMaxIter; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
            break;
    }
    return sum * std::exp(gamma_prefactor_log(a, x));
}

// Modified Lentz evaluation of the continued fraction for Q(a, x).
double upper_gamma_cf(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    return std::exp(gamma_prefactor_log(a, x)) * h;
}

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m < kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            break;
    }
    return h;
}

// ln Gamma(a + b) - ln Gamma(a), without the cancellation of the plain difference
// when a is large.
double ln_gamma_ratio(double a, double b) {
    if (a < 10.0 || a + b < 10.0)
        return ln_gamma(a + b) - ln_gamma(a);
    auto tail = [](double z) { return ln_gamma_stirling(z) - ((z - 0.5) * std::log(z) - z); };
    return (a - 0.5) * std::log1p(b / a) + b * std::log(a + b) - b + (tail(a + b) - tail(a));
}

// I_x(a, b) with y = 1 - x and both logarithms supplied by the caller, so callers that
// know them exactly keep full relative precision near x = 1 and for large a.
double inc_beta_xy(double a, double b, double x, double y, double log_x, double log_y) {
    if (x <= 0.0 && log_x == -kInf)
        return 0.0;
    if (y <= 0.0)
        return 1.0;
    const double log_beta_inv = (a >= b) ? ln_gamma_ratio(a, b) - ln_gamma(b) : ln_gamma_ratio(b, a) - ln_gamma(a);
    const double log_front = log_beta_inv + a * log_x + b * log_y;
    const double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, y) / b;
}

// P(T <= t) for t <= 0, computed directly so the lower tail keeps relative accuracy.
double student_t_lower(double t, double dof) {
    if (t == -kInf)
        return 0.0;
    if (t < -1e100) {
        // t * t would overflow; x = dof / t^2 to relative 1e-200
        const double log_x = std::log(dof) - 2.0 * std::log(-t);
        return 0.5 * inc_beta_xy(0.5 * dof, 0.5, std::exp(log_x), 1.0, log_x, 0.0);
    }
    const double t2 = t * t;
    const double denom = dof + t2;
    const double x = dof / denom;
    const double y = t2 / denom;
    const double log_x = -std::log1p(t2 / dof);
    const double log_y = 2.0 * std::log(std::abs(t)) - std::log(denom);
    return 0.5 * inc_beta_xy(0.5 * dof, 0.5, x, y, log_x, log_y);
}

double log_student_t_pdf(double t, double dof) {
    const double log_core =
        std::abs(t) > 1e100 ? 2.0 * std::log(std::abs(t)) - std::log(dof) : std::log1p(t * t / dof);
    return ln_gamma_ratio(0.5 * dof, 0.5) - 0.5 * std::log(dof * std::numbers::pi) - 0.5 * (dof + 1.0) * log_core;
}

// Quantile of the t distribution for p in (0, 0.5]; result <= 0.
double student_t_lower_quantile(double p, double dof) {
    if (p == 0.5)
        return 0.0;
    if (dof == 1.0)
        return -1.0 / std::tan(std::numbers::pi * p);
    if (dof == 2.0)
        return (2.0 * p - 1.0) / std::sqrt(2.0 * p * (1.0 - p));

    // Starting point: Cornish-Fisher expansion, or the power-law tail when that is
    // further out (heavy tails at small dof).
    const double z = normal_quantile(p);
    const double z2 = z * z;
    const double g1 = (z2 + 1.0) * z / 4.0;
    const double g2 = ((5.0 * z2 + 16.0) * z2 + 3.0) * z / 96.0;
    const double g3 = (((3.0 * z2 + 19.0) * z2 + 17.0) * z2 - 15.0) * z / 384.0;
    double t = z + g1 / dof + g2 / (dof * dof) + g3 / (dof * dof * dof);
    const double log_k = ln_gamma_ratio(0.5 * dof, 0.5) -
                         0.5 * std::log(dof * std::numbers::pi) + 0.5 * (dof + 1.0) * std::log(dof);
    const double tail = -std::exp((log_k - std::log(dof * p)) / dof);
    if (std::isfinite(tail) && tail < t)
        t = tail;
    if (!std::isfinite(t) || t >= 0.0)
        t = -1.0;

    // Bracket [lo, hi] with cdf(lo) < p <= cdf(hi), hi <= 0.
    double hi = 0.0;
    double lo = t;
    while (student_t_lower(lo, dof) >= p) {
        hi = lo;
        lo *= 2.0;
        if (!std::isfinite(lo))
            return -kInf;
    }
    if (t <= lo || t >= hi)
        t = 0.5 * (lo + hi);

    // Newton on log cdf: well conditioned in the power-law tail.
    const double log_p = std::log(p);
    for (int iter = 0; iter < 200; ++iter) {
        const double cdf = student_t_lower(t, dof);
        if (cdf < p)
            lo = t;
        else
            hi = t;
        const double g = std::log(cdf) - log_p;
        const double dg = std::exp(log_student_t_pdf(t, dof) - std::log(cdf));
        double next = t - g / dg;
        if (!(next > lo && next < hi))
            next = 0.5 * (lo + hi);
        const double step = next - t;
        t = next;
        if (std::abs(step) <= 4.0 * kEps * std::max(1.0, std::abs(t)) || hi - lo <= 4.0 * kEps * std::abs(t))
            break;
    }
    return t;
}

}  // namespace

void EquicorrMvt::validate() const {
    if (dim < 1)
        domain_fail("EquicorrMvt", "dimension must be >= 1");
    if (!(dof > 0.0))
        domain_fail("EquicorrMvt", "degrees of freedom must be positive");
    if (dim > 1) {
        if (!(rho <= 1.0) || !(rho > -1.0 / (dim - 1)))
            throw InvalidCorrelation("EquicorrMvt: rho=" + std::to_string(rho) +
                                     " outside (-1/(dim-1), 1] for dim=" + std::to_string(dim));
    }
}

double ln_gamma(double a) {
    if (!(a > 0.0))
        domain_fail("ln_gamma", "argument must be positive");
    if (a == 1.0 || a == 2.0)
        return 0.0;
    if (a >= 10.0)
        return ln_gamma_stirling(a);
    double shift = 1.0;
    double z = a;
    while (z < 10.0) {
        shift *= z;
        z += 1.0;
    }
    return ln_gamma_stirling(z) - std::log(shift);
}

double reg_lower_inc_gamma(double a, double x) {
    if (!(a > 0.0))
        domain_fail("reg_lower_inc_gamma", "shape must be positive");
    if (!(x >= 0.0))
        domain_fail("reg_lower_inc_gamma", "argument must be nonnegative");
    if (x == 0.0)
        return 0.0;
    if (x == kInf)
        return 1.0;
    if (x < a + 1.0)
        return std::min(1.0, lower_gamma_series(a, x));
    return std::clamp(1.0 - upper_gamma_cf(a, x), 0.0, 1.0);
}

double reg_upper_inc_gamma(double a, double x) {
    if (!(a > 0.0))
        domain_fail("reg_upper_inc_gamma", "shape must be positive");
    if (!(x >= 0.0))
        domain_fail("reg_upper_inc_gamma", "argument must be nonnegative");
    if (x == 0.0)
        return 1.0;
    if (x == kInf)
        return 0.0;
    if (x < a + 1.0)
        return std::clamp(1.0 - lower_gamma_series(a, x), 0.0, 1.0);
    return std::min(1.0, upper_gamma_cf(a, x));
}

double inverse_reg_lower_inc_gamma(double a, double p) {
    if (!(a > 0.0))
        domain_fail("inverse_reg_lower_inc_gamma", "shape must be positive");
    if (!(p >= 0.0 && p <= 1.0))
        domain_fail("inverse_reg_lower_inc_gamma", "probability must lie in [0, 1]");
    if (p == 0.0)
        return 0.0;
    if (p == 1.0)
        return kInf;

    const double lga = ln_gamma(a);
    // Starting point: Wilson-Hilferty, replaced by the small-x series leading term
    // in the lower tail where it is more accurate.
    double x = std::exp((std::log(p) + ln_gamma(a + 1.0)) / a);
    if (!(x < 1.0)) {
        const double z = normal_quantile(p);
        const double c = 1.0 / (9.0 * a);
        const double wilson_hilferty = a * std::pow(1.0 - c + z * std::sqrt(c), 3.0);
        if (wilson_hilferty > 0.0)
            x = wilson_hilferty;
    }
    if (!(x > 0.0))
        x = kTiny;

    double lo = 0.0;
    double hi = kInf;
    for (int iter = 0; iter < 200; ++iter) {
        const double cdf = reg_lower_inc_gamma(a, x);
        const double err = cdf - p;
        if (err < 0.0)
            lo = x;
        else
            hi = x;
        if (err == 0.0)
            break;
        const double pdf = std::exp((a - 1.0) * std::log(x) - x - lga);
        double next = x;
        if (pdf > 0.0 && std::isfinite(pdf)) {
            // Halley step.
            const double u = err / pdf;
            const double corr = std::min(1.0, u * ((a - 1.0) / x - 1.0));
            next = x - u / (1.0 - 0.5 * corr);
        }
        if (!(next > lo && next < hi))
            next = std::isfinite(hi) ? 0.5 * (lo + hi) : std::max(2.0 * x, x + 1.0);
        const double step = next - x;
        x = next;
        if (std::abs(step) <= 1e-15 * x)
            break;
    }
    return x;
}

double reg_inc_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        domain_fail("reg_inc_beta", "parameters must be positive");
    if (!(x >= 0.0 && x <= 1.0))
        domain_fail("reg_inc_beta", "argument must lie in [0, 1]");
    return inc_beta_xy(a, b, x, 1.0 - x, std::log(x), std::log1p(-x));
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * std::numbers::sqrt2 / 2.0);
}

double normal_quantile(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        domain_fail("normal_quantile", "probability must lie in [0, 1]");
    if (p == 0.0)
        return -kInf;
    if (p == 1.0)
        return kInf;

    // Acklam's rational approximation followed by one Halley refinement.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    for (int i = 0; i < 2; ++i) {
        // Refine against the tail that keeps relative precision.
        const double e = (x <= 0.0) ? normal_cdf(x) - p : (1.0 - p) - normal_cdf(-x);
        const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

double student_t_cdf(double x, double dof) {
    if (!(dof > 0.0))
        domain_fail("student_t_cdf", "degrees of freedom must be positive");
    if (std::isnan(x))
        domain_fail("student_t_cdf", "argument is NaN");
    if (x <= 0.0)
        return student_t_lower(x, dof);
    return 1.0 - student_t_lower(-x, dof);
}

double student_t_pdf(double x, double dof) {
    if (!(dof > 0.0))
        domain_fail("student_t_pdf", "degrees of freedom must be positive");
    if (std::isinf(x))
        return 0.0;
    return std::exp(log_student_t_pdf(x, dof));
}

double student_t_quantile(double p, double dof, bool allow_infinite) {
    if (!(dof > 0.0))
        domain_fail("student_t_quantile", "degrees of freedom must be positive");
    if (!(p >= 0.0 && p <= 1.0))
        domain_fail("student_t_quantile", "probability must lie in (0, 1)");
    if (p == 0.0 || p == 1.0) {
        if (!allow_infinite)
            domain_fail("student_t_quantile", "probability must lie in (0, 1)");
        return p == 0.0 ? -kInf : kInf;
    }
    if (p <= 0.5)
        return student_t_lower_quantile(p, dof);
    // 1 - p is exact for p in [0.5, 1].
    return -student_t_lower_quantile(1.0 - p, dof);
}

}  // namespace fasop::specfun
