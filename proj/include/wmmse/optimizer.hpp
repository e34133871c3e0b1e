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

#include "wmmse/robust.hpp"
#include "wmmse/types.hpp"

#include <cstdint>
#include <vector>

namespace wmmse {

enum class InitKind
{
    RightSingular,
    RandomGaussian,
};

struct OptimizerConfig
{
    /// Stop once |R_sum^(l) - R_sum^(l-1)| < epsilon (bits).
    double epsilon = 1e-4;
    int max_iters = 200;
    InitKind init = InitKind::RightSingular;
    /// Seeds RandomGaussian initialization and every restart.
    std::uint64_t seed = 0;
    /// Extra runs from random initializations; the best result is kept.
    int restarts = 0;
    /// Relative power tolerance of the per-node multiplier search.
    double bisection_tol = 1e-8;

    void validate() const;
};

struct OptimizerTrace
{
    /// Weighted sum rate after each iteration; wsr[0] is the initialization.
    std::vector<double> wsr;
    /// Unweighted sum-MSE after each iteration (sum_k Tr E_k, MMSE receivers).
    std::vector<double> sum_mse;
    /// Largest relative power-constraint violation after each iteration,
    /// ignoring per-node users clamped at lambda = 0.
    std::vector<double> power_residual;
    /// Per-node mode only: lambda_k for every user, per iteration.
    std::vector<std::vector<double>> lambdas;
    bool converged = false;
    int iterations = 0;
    int clamp_events = 0;
    /// Steps where R_sum dropped by more than 1e-6 relative.
    int monotonicity_violations = 0;
    int ridge_uses = 0;
    /// Which start (0 = configured init, r > 0 = restart r) produced the result.
    int start_index = 0;
};

struct OptimizerResult
{
    TransceiverState state;
    OptimizerTrace trace;
    /// Weighted sum rate of state.precoders on the design channels.
    double wsr = 0.0;
};

/// Initial precoders satisfying the power constraint with equality (P_T / K
/// per user in sum mode). RightSingular takes the d dominant right singular
/// vectors of H_kk, each rotated so its largest-magnitude entry is real
/// positive; RandomGaussian draws i.i.d. CN(0, 1) entries.
std::vector<CMatrix> initialize_precoders(const ChannelSet &channels, const PowerConstraint &constraint,
                                          InitKind init, std::uint64_t seed = 0);

/// sum_k mu_k R_k in bits.
double weighted_sum_rate(const ChannelSet &channels, const std::vector<CMatrix> &precoders, const RateWeights &mu);

/// Alternating receiver / MSE-weight / precoder updates until the weighted
/// sum rate settles. Returns the best iterate seen, not the last one.
OptimizerResult run_algorithm1(const ChannelSet &channels, const RateWeights &mu, const PowerConstraint &constraint,
                               const OptimizerConfig &config);

/// Same loop driven by the robust filters on ctx.estimated_channels. The
/// tracked rate is the design rate log2 det(E~_k^{-1}).
OptimizerResult run_algorithm1(const RobustContext &ctx, const RateWeights &mu, const PowerConstraint &constraint,
                               const OptimizerConfig &config);

} // namespace wmmse
