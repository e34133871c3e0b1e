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

#include "wmmse/types.hpp"

#include <cstdint>

namespace wmmse {

// Nominal (perfect CSI) filter algebra. Noise variance is fixed at 1.

/// Phi_k = I_N + sum_{i != k} H_ki V_i V_i^H H_ki^H.
CMatrix interference_cov(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k);

/// U_k = V_k^H H_kk^H (sum_i H_ki V_i V_i^H H_ki^H + I_N)^{-1}.
CMatrix mmse_receiver(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k,
                      Diagnostics *diag = nullptr);

/// d x d MMSE error matrix E_k = (I_d + V_k^H H_kk^H Phi_k^{-1} H_kk V_k)^{-1}.
CMatrix error_covariance(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k,
                         Diagnostics *diag = nullptr);

/// E||U y_k - s_k||^2 for an arbitrary receiver U, in closed form.
double analytic_mse(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                    const CMatrix &receiver, int k);

/// Monte Carlo estimate of E||U_k y_k - s_k||^2 from simulated unit-variance
/// Gaussian symbols and noise. Deterministic in `seed`.
double empirical_mse(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                     const std::vector<CMatrix> &receivers, int k, int trials, std::uint64_t seed);

/// R_k = log2 det(I_N + Phi_k^{-1} H_kk V_k V_k^H H_kk^H), in bits.
double achievable_rate(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k,
                       Diagnostics *diag = nullptr);

/// log2 det(E^{-1}). Throws std::invalid_argument if E is not Hermitian PD.
double rate_from_error(const CMatrix &error);

/// W_k = (mu_k / ln 2) E_k^{-1}. Throws std::invalid_argument on a singular
/// or non-Hermitian E_k.
std::vector<CMatrix> mse_weights(const std::vector<CMatrix> &errors, const RateWeights &mu);

/// Psi_k = sum_i H_ik^H U_i^H W_i U_i H_ik.
CMatrix precoder_gram(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                      const std::vector<CMatrix> &weights, int k);

/// H_kk^H U_k^H W_k.
CMatrix precoder_rhs(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                     const std::vector<CMatrix> &weights, int k);

struct SumPowerPrecoders
{
    std::vector<CMatrix> precoders;
    double beta = 0.0;
};

/// Closed-form sum-power WMMSE precoders scaled by beta so that the total
/// transmit power equals total_power. Throws DegenerateInput when every
/// unscaled precoder vanishes.
SumPowerPrecoders sum_power_precoders(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                                      const std::vector<CMatrix> &weights, double total_power,
                                      Diagnostics *diag = nullptr);

/// Transmit power of V(lambda) = (Psi + lambda I)^{-1} rhs, evaluated in the
/// eigenbasis of Psi as sum_i [Q^H rhs rhs^H Q]_ii / (sigma_i + lambda)^2.
/// Returns +inf when lambda = 0 meets a null direction of Psi carrying signal.
double per_node_power(const CMatrix &psi, const CMatrix &rhs, double lambda);

struct PerNodePrecoder
{
    CMatrix precoder;
    double lambda = 0.0;
    double power = 0.0;
    /// True when even lambda = 0 falls short of the budget.
    bool clamped = false;
    int search_iterations = 0;
};

/// Per-node WMMSE precoder with lambda_k found by bracketing and bisection
/// on the (monotone) transmit power. A vanishing H_kk^H U_k^H W_k switches
/// the user off: zero precoder, clamped at lambda = 0.
PerNodePrecoder per_node_precoder(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                                  const std::vector<CMatrix> &weights, int k, double budget, double tol);

/// Bisection for lambda on a precomputed (Psi, rhs) pair. Shared by the
/// nominal and robust per-node designs.
PerNodePrecoder solve_power_multiplier(const CMatrix &psi, const CMatrix &rhs, double budget, double tol);

} // namespace wmmse
