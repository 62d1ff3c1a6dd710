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

// Gaussian quadrature rules shared by the special-function kernels. Internal header.

#ifndef FASOP_SRC_QUADRATURE_HPP
#define FASOP_SRC_QUADRATURE_HPP

#include <memory>
#include <vector>

namespace fasop::quadrature {

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]. Rules are built once and shared.
std::shared_ptr<const Rule> gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1 - x)^alpha (1 + x)^beta
/// (unnormalized: the weights sum to the integral of the weight).
std::shared_ptr<const Rule> gauss_jacobi(int n, double alpha, double beta);

}  // namespace fasop::quadrature

#endif  // FASOP_SRC_QUADRATURE_HPP
