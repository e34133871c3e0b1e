// SPDX-License-Identifier: Apache-2.0
//
// wmmse-ic: weighted MMSE transceiver design for the K-user MIMO interference channel
// Copyright (C) 2026 The wmmse-ic Authors
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

#pragma once

#include "wmmse/optimizer.hpp"
#include "wmmse/types.hpp"

namespace wmmse {

/// Unweighted MMSE transceiver: the alternating loop with W_k = I_d. The
/// loop stops on the change of its own objective (sum-MSE) and reports the
/// weighted sum rate of the final iterate under `mu`.
OptimizerResult simple_mmse_run(const ChannelSet &channels, const RateWeights &mu, const PowerConstraint &constraint,
                                const OptimizerConfig &config);

enum class GradientMode
{
    Analytic,
    FiniteDifference,
};

struct GradientConfig
{
    /// Outer iterations (I_1).
    int outer_iters = 400;
    /// Step-size trials per outer iteration (I_2).
    int max_step_trials = 30;
    /// First trial step, relative to sqrt(total power) along the unit gradient.
    double initial_step = 0.25;
    double shrink = 0.5;
    GradientMode mode = GradientMode::Analytic;
    /// Stop when an accepted step improves the WSR by less than this (bits).
    double epsilon = 1e-6;
    double fd_step = 1e-6;
    InitKind init = InitKind::RightSingular;
    std::uint64_t seed = 0;

    void validate() const;
};

struct GradientTrace
{
    std::vector<double> wsr;
    std::vector<double> power_residual;
    int iterations = 0;
    int step_trials = 0;
    bool converged = false;
};

struct GradientResult
{
    std::vector<CMatrix> precoders;
    GradientTrace trace;
    double wsr = 0.0;
};

/// Gradient of sum_k mu_k R_k (bits) with respect to each V_j, packed as
/// dRe + i dIm so that the first-order change is sum_j Re Tr(G_j^H dV_j).
std::vector<CMatrix> wsr_gradient(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                                  const RateWeights &mu);

/// Central finite-difference counterpart of wsr_gradient.
std::vector<CMatrix> wsr_gradient_fd(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                                     const RateWeights &mu, double step = 1e-6);

/// Radial rescale onto the power constraint: every V_k to P_k, or the whole
/// set to P_T. Vanishing blocks are left untouched.
std::vector<CMatrix> project_to_constraint(std::vector<CMatrix> precoders, const PowerConstraint &constraint);

/// Projected gradient ascent on the weighted sum rate with backtracking.
/// Generic stand-in for a gradient-based transceiver design; receivers are
/// implicitly MMSE.
GradientResult projected_gradient_wsr(const ChannelSet &channels, const RateWeights &mu,
                                      const PowerConstraint &constraint, const GradientConfig &config);

} // namespace wmmse
