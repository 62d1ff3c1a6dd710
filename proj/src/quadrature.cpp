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

#include "quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <Eigen/Eigenvalues>

namespace fasop::quadrature {

namespace {

Rule build_legendre(int n) {
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

Rule build_jacobi(int n, double alpha, double beta) {
    // Golub-Welsch for the weight (1 - x)^alpha (1 + x)^beta on [-1, 1].
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    const double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        const double t = 2.0 * k + ab;
        diag(k) = (k == 0) ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (t * (t + 2.0));
    }
    for (int k = 1; k < n; ++k) {
        const double t = 2.0 * k + ab;
        const double num = 4.0 * k * (k + alpha) * (k + beta) * (k + ab);
        sub(k - 1) = std::sqrt(num / (t * t * (t + 1.0) * (t - 1.0)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Gauss-Jacobi eigen-decomposition failed");

    const double log_mass = (ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                            std::lgamma(ab + 2.0);
    Rule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v = solver.eigenvectors()(0, i);
        rule.weights[i] = std::exp(log_mass) * v * v;
    }
    return rule;
}

}  // namespace

std::shared_ptr<const Rule> gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("quadrature order must be positive");
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const Rule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_shared<const Rule>(build_legendre(n));
    return slot;
}

std::shared_ptr<const Rule> gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1)
        throw std::invalid_argument("quadrature order must be positive");
    if (!(alpha > -1.0 && beta > -1.0))
        throw std::invalid_argument("Jacobi exponents must exceed -1");
    static std::mutex mutex;
    static std::map<std::tuple<int, double, double>, std::shared_ptr<const Rule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{n, alpha, beta}];
    if (!slot)
        slot = std::make_shared<const Rule>(build_jacobi(n, alpha, beta));
    return slot;
}

}  // namespace fasop::quadrature
