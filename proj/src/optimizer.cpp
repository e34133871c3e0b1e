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

#include "wmmse/optimizer.hpp"

#include "alternating.hpp"
#include "wmmse/channel.hpp"
#include "wmmse/filters.hpp"

#include <cmath>
#include <numbers>

namespace wmmse {

void OptimizerConfig::validate() const
{
    if (!(epsilon > 0.0))
        throw std::invalid_argument("epsilon must be positive");
    if (max_iters < 1)
        throw std::invalid_argument("max_iters must be at least 1");
    if (restarts < 0)
        throw std::invalid_argument("restarts must be nonnegative");
    if (!(bisection_tol > 0.0))
        throw std::invalid_argument("bisection tolerance must be positive");
}

std::vector<CMatrix> initialize_precoders(const ChannelSet &channels, const PowerConstraint &constraint,
                                          InitKind init, std::uint64_t seed)
{
    const auto &dims = channels.dims();
    validate_constraint(constraint, dims.K);
    std::vector<CMatrix> V;
    V.reserve(static_cast<std::size_t>(dims.K));
    for (int k = 0; k < dims.K; ++k)
    {
        CMatrix Vk;
        if (init == InitKind::RightSingular)
        {
            Eigen::JacobiSVD<CMatrix> svd(channels.link(k, k), Eigen::ComputeFullV);
            Vk = svd.matrixV().leftCols(dims.d);
            for (int c = 0; c < dims.d; ++c)
            {
                Eigen::Index arg = 0;
                Vk.col(c).cwiseAbs().maxCoeff(&arg);
                const cdouble pivot = Vk(arg, c);
                if (std::abs(pivot) > 0.0)
                    Vk.col(c) *= std::conj(pivot) / std::abs(pivot);
            }
        }
        else
        {
            auto engine = make_engine(seed, Stream::Init, {static_cast<std::uint64_t>(k)});
            Vk = complex_gaussian(engine, dims.M, dims.d, 1.0);
        }
        const double budget = user_budget(constraint, dims.K, k);
        Vk *= std::sqrt(budget / power_of(Vk));
        V.push_back(std::move(Vk));
    }
    return V;
}

double weighted_sum_rate(const ChannelSet &channels, const std::vector<CMatrix> &precoders, const RateWeights &mu)
{
    if (static_cast<int>(mu.size()) != channels.users())
        throw std::invalid_argument("one rate weight per user is required");
    double wsr = 0.0;
    for (int k = 0; k < channels.users(); ++k)
        wsr += mu[static_cast<std::size_t>(k)] * achievable_rate(channels, precoders, k);
    return wsr;
}

namespace detail {

namespace {

struct LoopState
{
    const RobustContext &ctx;
    const RateWeights &mu;
    const PowerConstraint &constraint;
    const OptimizerConfig &config;
    WeightRule rule;
    Diagnostics diag;

    int users() const { return ctx.estimated_channels.users(); }

    std::vector<CMatrix> receivers(const std::vector<CMatrix> &V)
    {
        std::vector<CMatrix> U;
        U.reserve(V.size());
        for (int k = 0; k < users(); ++k)
            U.push_back(robust_receiver(ctx, V, k, &diag));
        return U;
    }

    std::vector<CMatrix> weights(const std::vector<CMatrix> &V)
    {
        if (rule == WeightRule::RateMatched)
            return robust_weights(ctx, V, mu, &diag);
        const int d = ctx.estimated_channels.dims().d;
        return std::vector<CMatrix>(static_cast<std::size_t>(users()), CMatrix::Identity(d, d));
    }

    double wsr(const std::vector<CMatrix> &V)
    {
        double r = 0.0;
        for (int k = 0; k < users(); ++k)
            r += mu[static_cast<std::size_t>(k)] * robust_design_rate(ctx, V, k, &diag);
        return r;
    }

    double sum_mse(const std::vector<CMatrix> &V)
    {
        double s = 0.0;
        for (int k = 0; k < users(); ++k)
            s += robust_error_covariance(ctx, V, k, &diag).trace().real();
        return s;
    }

    /// Step 3: precoder update; records lambdas, clamps and the power residual.
    std::vector<CMatrix> precoders(const std::vector<CMatrix> &U, const std::vector<CMatrix> &W,
                                   OptimizerTrace &trace)
    {
        if (const auto *sum = std::get_if<SumPower>(&constraint))
        {
            auto out = robust_sum_power_precoders(ctx, U, W, sum->total, &diag);
            trace.power_residual.push_back(std::abs(total_power(out.precoders) - sum->total) / sum->total);
            return std::move(out.precoders);
        }
        const auto &budgets = std::get<PerNodePower>(constraint).budgets;
        std::vector<CMatrix> V;
        std::vector<double> lambdas;
        double residual = 0.0;
        for (int k = 0; k < users(); ++k)
        {
            const double budget = budgets[static_cast<std::size_t>(k)];
            auto node = robust_per_node_precoder(ctx, U, W, k, budget, config.bisection_tol);
            if (node.clamped)
                ++trace.clamp_events;
            else
                residual = std::max(residual, std::abs(power_of(node.precoder) - budget) / budget);
            lambdas.push_back(node.lambda);
            V.push_back(std::move(node.precoder));
        }
        trace.lambdas.push_back(std::move(lambdas));
        trace.power_residual.push_back(residual);
        return V;
    }
};

bool direct_links_vanish(const ChannelSet &channels)
{
    for (int k = 0; k < channels.users(); ++k)
        if (channels.link(k, k).squaredNorm() > 0.0)
            return false;
    return true;
}

OptimizerResult single_start(LoopState &loop, std::vector<CMatrix> V)
{
    OptimizerResult result;
    auto &trace = result.trace;
    const bool weighted = loop.rule == WeightRule::RateMatched;

    double rate = loop.wsr(V);
    double mse = loop.sum_mse(V);
    trace.wsr.push_back(rate);
    trace.sum_mse.push_back(mse);
    std::vector<CMatrix> best = V;
    double best_rate = rate;

    if (direct_links_vanish(loop.ctx.estimated_channels))
    {
        // No precoder can deliver signal; every rate is identically zero.
        trace.converged = true;
    }
    else
    {
        for (int l = 1; l <= loop.config.max_iters; ++l)
        {
            const auto U = loop.receivers(V);
            const auto W = loop.weights(V);
            V = loop.precoders(U, W, trace);

            const double next_rate = loop.wsr(V);
            const double next_mse = loop.sum_mse(V);
            trace.wsr.push_back(next_rate);
            trace.sum_mse.push_back(next_mse);
            trace.iterations = l;

            if (weighted && next_rate < rate - 1e-6 * std::max(1.0, std::abs(rate)))
                ++trace.monotonicity_violations;
            if (!weighted && next_mse > mse + 1e-8 * std::max(1.0, mse))
                ++trace.monotonicity_violations;

            // Rate-matched runs return the best iterate; Simple MMSE has its
            // own objective (sum-MSE) and returns the last one.
            if (!weighted || next_rate > best_rate)
            {
                best = V;
                best_rate = next_rate;
            }

            const double change = weighted ? std::abs(next_rate - rate) : std::abs(next_mse - mse);
            rate = next_rate;
            mse = next_mse;
            if (change < loop.config.epsilon)
            {
                trace.converged = true;
                break;
            }
        }
    }

    result.state.receivers = loop.receivers(best);
    result.state.weights = loop.weights(best);
    result.state.precoders = std::move(best);
    result.wsr = best_rate;
    return result;
}

} // namespace

OptimizerResult alternating_run(const ChannelSet &channels, double loading_variance, const RateWeights &mu,
                                const PowerConstraint &constraint, const OptimizerConfig &config, WeightRule rule)
{
    config.validate();
    validate_constraint(constraint, channels.users());
    if (static_cast<int>(mu.size()) != channels.users())
        throw std::invalid_argument("one rate weight per user is required");

    const RobustContext ctx{channels, loading_variance};
    ctx.validate();
    LoopState loop{ctx, mu, constraint, config, rule, {}};

    OptimizerResult best;
    for (int r = 0; r <= config.restarts; ++r)
    {
        std::vector<CMatrix> V0 =
            r == 0 ? initialize_precoders(channels, constraint, config.init, config.seed)
                   : initialize_precoders(channels, constraint, InitKind::RandomGaussian,
                                          derive_seed(config.seed, {static_cast<std::uint64_t>(r)}));
        OptimizerResult run = single_start(loop, std::move(V0));
        run.trace.start_index = r;
        if (r == 0 || run.wsr > best.wsr)
            best = std::move(run);
    }
    best.trace.ridge_uses = loop.diag.ridge_uses;
    return best;
}

} // namespace detail

OptimizerResult run_algorithm1(const ChannelSet &channels, const RateWeights &mu, const PowerConstraint &constraint,
                               const OptimizerConfig &config)
{
    return detail::alternating_run(channels, 0.0, mu, constraint, config, detail::WeightRule::RateMatched);
}

OptimizerResult run_algorithm1(const RobustContext &ctx, const RateWeights &mu, const PowerConstraint &constraint,
                               const OptimizerConfig &config)
{
    return detail::alternating_run(ctx.estimated_channels, ctx.sigma_delta_sq_assumed, mu, constraint, config,
                                   detail::WeightRule::RateMatched);
}

} // namespace wmmse
