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

#include "wmmse/filters.hpp"
#include "wmmse/types.hpp"

namespace wmmse {

/// Designer's view under imperfect CSI: the estimated channels and the
/// error variance it believes (actual plus any over-estimate).
struct RobustContext
{
    ChannelSet estimated_channels;
    double sigma_delta_sq_assumed = 0.0;

    void validate() const;
};

/// Receive-side diagonal loading sigma^2 * sum_i Tr(V_i V_i^H).
double receiver_loading(const RobustContext &ctx, const std::vector<CMatrix> &precoders);

/// Transmit-side diagonal loading sigma^2 * sum_i Tr(U_i^H W_i U_i).
double transmitter_loading(const RobustContext &ctx, const std::vector<CMatrix> &receivers,
                           const std::vector<CMatrix> &weights);

/// Phi~_k: interference covariance on the estimated channels plus receiver loading.
CMatrix robust_interference_cov(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k);

CMatrix robust_receiver(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k,
                        Diagnostics *diag = nullptr);

/// d x d error matrix E~_k = (I_d + V_k^H H~_kk^H Phi~_k^{-1} H~_kk V_k)^{-1}.
CMatrix robust_error_covariance(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k,
                                Diagnostics *diag = nullptr);

/// W~_k = (mu_k / ln 2) E~_k^{-1} for every k.
std::vector<CMatrix> robust_weights(const RobustContext &ctx, const std::vector<CMatrix> &precoders,
                                    const RateWeights &mu, Diagnostics *diag = nullptr);

/// log2 det(E~_k^{-1}): the rate the robust design believes it achieves.
double robust_design_rate(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k,
                          Diagnostics *diag = nullptr);

SumPowerPrecoders robust_sum_power_precoders(const RobustContext &ctx, const std::vector<CMatrix> &receivers,
                                             const std::vector<CMatrix> &weights, double total_power,
                                             Diagnostics *diag = nullptr);

PerNodePrecoder robust_per_node_precoder(const RobustContext &ctx, const std::vector<CMatrix> &receivers,
                                         const std::vector<CMatrix> &weights, int k, double budget, double tol);

} // namespace wmmse
