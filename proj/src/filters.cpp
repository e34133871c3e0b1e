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

#include "wmmse/filters.hpp"

#include "kernels.hpp"
#include "wmmse/channel.hpp"
#include "wmmse/linalg.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wmmse {

namespace detail {

void check_user(const ChannelSet &channels, int k)
{
    if (k < 0 || k >= channels.users())
        throw std::out_of_range("user index out of range");
}

CMatrix received_cov(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                     bool include_self)
{
    check_user(channels, k);
    const int N = channels.dims().N;
    CMatrix C = CMatrix::Identity(N, N) * (1.0 + loading);
    for (int i = 0; i < channels.users(); ++i)
    {
        if (i == k && !include_self)
            continue;
        const CMatrix A = channels.link(k, i) * precoders[static_cast<std::size_t>(i)];
        C.noalias() += A * A.adjoint();
    }
    return linalg::hermitize(C);
}

CMatrix receiver(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                 Diagnostics *diag)
{
    const CMatrix C = received_cov(channels, precoders, k, loading, true);
    const CMatrix G = channels.link(k, k) * precoders[static_cast<std::size_t>(k)];
    // U = G^H C^{-1} = (C^{-1} G)^H since C is Hermitian.
    return linalg::hpd_solve(C, G, diag).adjoint();
}

CMatrix error_matrix(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                     Diagnostics *diag)
{
    const CMatrix phi = received_cov(channels, precoders, k, loading, false);
    const CMatrix G = channels.link(k, k) * precoders[static_cast<std::size_t>(k)];
    const int d = static_cast<int>(G.cols());
    const CMatrix info = CMatrix::Identity(d, d) + G.adjoint() * linalg::hpd_solve(phi, G, diag);
    return linalg::hpd_inverse(linalg::hermitize(info), diag);
}

double rate_bits(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                 Diagnostics *diag)
{
    const CMatrix phi = received_cov(channels, precoders, k, loading, false);
    const CMatrix C = received_cov(channels, precoders, k, loading, true);
    const double nats = linalg::hpd_logdet(C, diag) - linalg::hpd_logdet(phi, diag);
    return std::max(0.0, nats / std::numbers::ln2);
}

SumPowerPrecoders sum_power(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                            const std::vector<CMatrix> &weights, double total_power, double loading,
                            Diagnostics *diag)
{
    if (!(total_power > 0.0))
        throw std::invalid_argument("sum power budget must be positive");
    const int K = channels.users();
    double weighted_receiver_energy = 0.0;
    for (int i = 0; i < K; ++i)
    {
        const auto &U = receivers[static_cast<std::size_t>(i)];
        weighted_receiver_energy += (weights[static_cast<std::size_t>(i)] * U * U.adjoint()).trace().real();
    }
    const double shift = weighted_receiver_energy / total_power + loading;

    SumPowerPrecoders out;
    out.precoders.reserve(static_cast<std::size_t>(K));
    double unscaled_power = 0.0;
    for (int k = 0; k < K; ++k)
    {
        CMatrix A = precoder_gram(channels, receivers, weights, k);
        A.diagonal().array() += shift;
        out.precoders.push_back(linalg::hpd_solve(A, precoder_rhs(channels, receivers, weights, k), diag));
        unscaled_power += power_of(out.precoders.back());
    }
    if (!(unscaled_power > 0.0) || !std::isfinite(unscaled_power))
        throw DegenerateInput("sum-power precoders vanish; beta is undefined");
    out.beta = std::sqrt(total_power / unscaled_power);
    for (auto &V : out.precoders)
        V *= out.beta;
    return out;
}

PerNodePrecoder per_node(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                         const std::vector<CMatrix> &weights, int k, double budget, double tol, double loading)
{
    CMatrix psi = precoder_gram(channels, receivers, weights, k);
    psi.diagonal().array() += loading;
    return solve_power_multiplier(psi, precoder_rhs(channels, receivers, weights, k), budget, tol);
}

} // namespace detail

CMatrix interference_cov(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k)
{
    return detail::received_cov(channels, precoders, k, 0.0, false);
}

CMatrix mmse_receiver(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, Diagnostics *diag)
{
    return detail::receiver(channels, precoders, k, 0.0, diag);
}

CMatrix error_covariance(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k,
                         Diagnostics *diag)
{
    return detail::error_matrix(channels, precoders, k, 0.0, diag);
}

double analytic_mse(const ChannelSet &channels, const std::vector<CMatrix> &precoders, const CMatrix &receiver,
                    int k)
{
    const CMatrix C = detail::received_cov(channels, precoders, k, 0.0, true);
    const CMatrix G = channels.link(k, k) * precoders[static_cast<std::size_t>(k)];
    const double d = static_cast<double>(G.cols());
    return (receiver * C * receiver.adjoint()).trace().real() - 2.0 * (receiver * G).trace().real() + d;
}

double empirical_mse(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                     const std::vector<CMatrix> &receivers, int k, int trials, std::uint64_t seed)
{
    detail::check_user(channels, k);
    if (trials < 1)
        throw std::invalid_argument("empirical_mse needs at least one trial");
    const int K = channels.users();
    const int N = channels.dims().N;
    auto engine = make_engine(seed, Stream::Symbols, {static_cast<std::uint64_t>(k)});

    // Symbols and noise are generated in blocks; per-block order is fixed so
    // the estimate is reproducible.
    constexpr int kBlock = 4096;
    double accum = 0.0;
    for (int start = 0; start < trials; start += kBlock)
    {
        const int T = std::min(kBlock, trials - start);
        CMatrix y = complex_gaussian(engine, N, T, 1.0);
        CMatrix own;
        for (int i = 0; i < K; ++i)
        {
            const auto &V = precoders[static_cast<std::size_t>(i)];
            CMatrix s = complex_gaussian(engine, static_cast<int>(V.cols()), T, 1.0);
            y.noalias() += channels.link(k, i) * (V * s);
            if (i == k)
                own = std::move(s);
        }
        accum += (receivers[static_cast<std::size_t>(k)] * y - own).squaredNorm();
    }
    return accum / trials;
}

double achievable_rate(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k,
                       Diagnostics *diag)
{
    return detail::rate_bits(channels, precoders, k, 0.0, diag);
}

double rate_from_error(const CMatrix &error)
{
    if (!linalg::is_hpd(error))
        throw std::invalid_argument("error covariance must be Hermitian positive definite");
    return -linalg::hpd_logdet(linalg::hermitize(error)) / std::numbers::ln2;
}

std::vector<CMatrix> mse_weights(const std::vector<CMatrix> &errors, const RateWeights &mu)
{
    if (errors.size() != mu.size())
        throw std::invalid_argument("one rate weight per error matrix is required");
    std::vector<CMatrix> W;
    W.reserve(errors.size());
    for (std::size_t k = 0; k < errors.size(); ++k)
    {
        if (!linalg::is_hpd(errors[k]))
            throw std::invalid_argument("error covariance is singular or not Hermitian");
        W.push_back(linalg::hpd_inverse(linalg::hermitize(errors[k])) * (mu[k] / std::numbers::ln2));
    }
    return W;
}

CMatrix precoder_gram(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                      const std::vector<CMatrix> &weights, int k)
{
    detail::check_user(channels, k);
    const int M = channels.dims().M;
    CMatrix psi = CMatrix::Zero(M, M);
    for (int i = 0; i < channels.users(); ++i)
    {
        const CMatrix UH = receivers[static_cast<std::size_t>(i)] * channels.link(i, k);
        psi.noalias() += UH.adjoint() * weights[static_cast<std::size_t>(i)] * UH;
    }
    return linalg::hermitize(psi);
}

CMatrix precoder_rhs(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                     const std::vector<CMatrix> &weights, int k)
{
    detail::check_user(channels, k);
    const auto kk = static_cast<std::size_t>(k);
    return channels.link(k, k).adjoint() * receivers[kk].adjoint() * weights[kk];
}

SumPowerPrecoders sum_power_precoders(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                                      const std::vector<CMatrix> &weights, double total_power, Diagnostics *diag)
{
    return detail::sum_power(channels, receivers, weights, total_power, 0.0, diag);
}

namespace {

/// Eigen-decomposed (Psi, rhs) pair; power(lambda) is O(M).
struct PowerProfile
{
    CMatrix basis;      // Q
    RVector eigvals;    // sigma_i, clamped at 0
    CMatrix projected;  // Q^H rhs
    RVector signal;     // [Pi]_ii

    PowerProfile(const CMatrix &psi, const CMatrix &rhs)
    {
        if (psi.rows() != psi.cols() || psi.rows() != rhs.rows())
            throw std::invalid_argument("psi must be square and conform with rhs");
        Eigen::SelfAdjointEigenSolver<CMatrix> eig(linalg::hermitize(psi));
        if (eig.info() != Eigen::Success)
            throw NumericalError("eigendecomposition of psi failed");
        basis = eig.eigenvectors();
        eigvals = eig.eigenvalues().cwiseMax(0.0);
        projected = basis.adjoint() * rhs;
        signal = projected.rowwise().squaredNorm();
    }

    double power(double lambda) const
    {
        double p = 0.0;
        for (Eigen::Index i = 0; i < eigvals.size(); ++i)
        {
            const double denom = eigvals(i) + lambda;
            if (signal(i) == 0.0)
                continue;
            if (denom <= 0.0)
                return std::numeric_limits<double>::infinity();
            p += signal(i) / (denom * denom);
        }
        return p;
    }

    CMatrix precoder(double lambda) const
    {
        RVector scale(eigvals.size());
        for (Eigen::Index i = 0; i < eigvals.size(); ++i)
        {
            const double denom = eigvals(i) + lambda;
            scale(i) = denom > 0.0 ? 1.0 / denom : 0.0;
        }
        return basis * (scale.asDiagonal() * projected);
    }
};

} // namespace

double per_node_power(const CMatrix &psi, const CMatrix &rhs, double lambda)
{
    if (!(lambda >= 0.0))
        throw std::invalid_argument("lambda must be nonnegative");
    return PowerProfile(psi, rhs).power(lambda);
}

PerNodePrecoder solve_power_multiplier(const CMatrix &psi, const CMatrix &rhs, double budget, double tol)
{
    if (!(budget > 0.0))
        throw std::invalid_argument("per-node power budget must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("bisection tolerance must be positive");

    const PowerProfile profile(psi, rhs);
    PerNodePrecoder out;

    const double at_zero = profile.power(0.0);
    if (at_zero <= budget * (1.0 + tol))
    {
        out.lambda = 0.0;
        out.power = at_zero;
        out.clamped = at_zero < budget * (1.0 - tol);
        out.precoder = profile.precoder(0.0);
        return out;
    }

    // Power is decreasing in lambda, so doubling finds a bracket [lo, hi]
    // with power(lo) > budget > power(hi).
    double lo = 0.0;
    double hi = 1.0;
    while (profile.power(hi) >= budget)
    {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi))
            throw NumericalError("failed to bracket the power multiplier");
    }

    constexpr int kMaxIterations = 200;
    double lambda = 0.5 * (lo + hi);
    double p = profile.power(lambda);
    int it = 1;
    for (; it < kMaxIterations; ++it)
    {
        if (std::abs(p - budget) <= tol * budget || hi - lo <= 1e-15 * hi)
            break;
        if (p > budget)
            lo = lambda;
        else
            hi = lambda;
        lambda = 0.5 * (lo + hi);
        p = profile.power(lambda);
    }
    out.lambda = lambda;
    out.power = p;
    out.search_iterations = it;
    out.precoder = profile.precoder(lambda);
    return out;
}

PerNodePrecoder per_node_precoder(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                                  const std::vector<CMatrix> &weights, int k, double budget, double tol)
{
    return detail::per_node(channels, receivers, weights, k, budget, tol, 0.0);
}

} // namespace wmmse
