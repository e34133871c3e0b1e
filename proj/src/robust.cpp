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

#include "wmmse/robust.hpp"

#include "kernels.hpp"
#include "wmmse/linalg.hpp"

#include <cmath>
#include <numbers>

namespace wmmse {

void RobustContext::validate() const
{
    if (!(sigma_delta_sq_assumed >= 0.0) || !std::isfinite(sigma_delta_sq_assumed))
        throw std::invalid_argument("assumed mismatch variance must be nonnegative");
}

// The loading terms are sums of traces of PSD matrices; the trace equals
// the sum of their singular values, so no decomposition is needed.

double receiver_loading(const RobustContext &ctx, const std::vector<CMatrix> &precoders)
{
    return ctx.sigma_delta_sq_assumed * total_power(precoders);
}

double transmitter_loading(const RobustContext &ctx, const std::vector<CMatrix> &receivers,
                           const std::vector<CMatrix> &weights)
{
    double s = 0.0;
    for (std::size_t i = 0; i < receivers.size(); ++i)
        s += (receivers[i].adjoint() * weights[i] * receivers[i]).trace().real();
    return ctx.sigma_delta_sq_assumed * s;
}

CMatrix robust_interference_cov(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k)
{
    return detail::received_cov(ctx.estimated_channels, precoders, k, receiver_loading(ctx, precoders), false);
}

CMatrix robust_receiver(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k, Diagnostics *diag)
{
    return detail::receiver(ctx.estimated_channels, precoders, k, receiver_loading(ctx, precoders), diag);
}

CMatrix robust_error_covariance(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k,
                                Diagnostics *diag)
{
    return detail::error_matrix(ctx.estimated_channels, precoders, k, receiver_loading(ctx, precoders), diag);
}

std::vector<CMatrix> robust_weights(const RobustContext &ctx, const std::vector<CMatrix> &precoders,
                                    const RateWeights &mu, Diagnostics *diag)
{
    const int K = ctx.estimated_channels.users();
    if (static_cast<int>(mu.size()) != K)
        throw std::invalid_argument("one rate weight per user is required");
    const double loading = receiver_loading(ctx, precoders);
    std::vector<CMatrix> W;
    W.reserve(static_cast<std::size_t>(K));
    for (int k = 0; k < K; ++k)
    {
        const CMatrix E = detail::error_matrix(ctx.estimated_channels, precoders, k, loading, diag);
        if (!linalg::is_hpd(E))
            throw std::invalid_argument("robust error covariance is singular");
        W.push_back(linalg::hpd_inverse(E, diag) * (mu[static_cast<std::size_t>(k)] / std::numbers::ln2));
    }
    return W;
}

double robust_design_rate(const RobustContext &ctx, const std::vector<CMatrix> &precoders, int k,
                          Diagnostics *diag)
{
    return detail::rate_bits(ctx.estimated_channels, precoders, k, receiver_loading(ctx, precoders), diag);
}

SumPowerPrecoders robust_sum_power_precoders(const RobustContext &ctx, const std::vector<CMatrix> &receivers,
                                             const std::vector<CMatrix> &weights, double total_power,
                                             Diagnostics *diag)
{
    return detail::sum_power(ctx.estimated_channels, receivers, weights, total_power,
                             transmitter_loading(ctx, receivers, weights), diag);
}

PerNodePrecoder robust_per_node_precoder(const RobustContext &ctx, const std::vector<CMatrix> &receivers,
                                         const std::vector<CMatrix> &weights, int k, double budget, double tol)
{
    return detail::per_node(ctx.estimated_channels, receivers, weights, k, budget, tol,
                            transmitter_loading(ctx, receivers, weights));
}

} // namespace wmmse
