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

#include "wmmse/baselines.hpp"

#include "alternating.hpp"
#include "wmmse/filters.hpp"
#include "wmmse/linalg.hpp"

#include <cmath>
#include <numbers>

namespace wmmse {

OptimizerResult simple_mmse_run(const ChannelSet &channels, const RateWeights &mu, const PowerConstraint &constraint,
                                const OptimizerConfig &config)
{
    OptimizerResult result =
        detail::alternating_run(channels, 0.0, mu, constraint, config, detail::WeightRule::Identity);
    // The loop tracks mu-weighted rates already; keep the final value explicit.
    result.wsr = weighted_sum_rate(channels, result.state.precoders, mu);
    return result;
}

void GradientConfig::validate() const
{
    if (outer_iters < 1 || max_step_trials < 1)
        throw std::invalid_argument("gradient iteration counts must be positive");
    if (!(initial_step > 0.0) || !(epsilon > 0.0) || !(fd_step > 0.0))
        throw std::invalid_argument("gradient step sizes must be positive");
    if (!(shrink > 0.0 && shrink < 1.0))
        throw std::invalid_argument("backtracking shrink factor must lie in (0, 1)");
}

std::vector<CMatrix> wsr_gradient(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                                  const RateWeights &mu)
{
    const int K = channels.users();
    std::vector<CMatrix> grad;
    grad.reserve(static_cast<std::size_t>(K));
    for (int j = 0; j < K; ++j)
        grad.push_back(CMatrix::Zero(precoders[static_cast<std::size_t>(j)].rows(),
                                     precoders[static_cast<std::size_t>(j)].cols()));

    // d ln det C = Tr(C^{-1} dC); each user k contributes through its total
    // covariance C_k and its interference covariance Phi_k.
    for (int k = 0; k < K; ++k)
    {
        const double scale = 2.0 * mu[static_cast<std::size_t>(k)] / std::numbers::ln2;
        const CMatrix phi = interference_cov(channels, precoders, k);
        CMatrix C = phi;
        {
            const CMatrix G = channels.link(k, k) * precoders[static_cast<std::size_t>(k)];
            C.noalias() += G * G.adjoint();
        }
        for (int j = 0; j < K; ++j)
        {
            const CMatrix &H = channels.link(k, j);
            const CMatrix HV = H * precoders[static_cast<std::size_t>(j)];
            CMatrix term = H.adjoint() * linalg::hpd_solve(C, HV);
            if (j != k)
                term -= H.adjoint() * linalg::hpd_solve(phi, HV);
            grad[static_cast<std::size_t>(j)] += scale * term;
        }
    }
    for (const auto &g : grad)
        if (!g.allFinite())
            throw NumericalError("non-finite weighted sum rate gradient");
    return grad;
}

std::vector<CMatrix> wsr_gradient_fd(const ChannelSet &channels, const std::vector<CMatrix> &precoders,
                                     const RateWeights &mu, double step)
{
    std::vector<CMatrix> grad;
    std::vector<CMatrix> probe = precoders;
    for (std::size_t j = 0; j < precoders.size(); ++j)
    {
        CMatrix g(precoders[j].rows(), precoders[j].cols());
        for (Eigen::Index c = 0; c < g.cols(); ++c)
            for (Eigen::Index r = 0; r < g.rows(); ++r)
            {
                double part[2];
                for (int p = 0; p < 2; ++p)
                {
                    const cdouble delta = p == 0 ? cdouble(step, 0.0) : cdouble(0.0, step);
                    probe[j](r, c) = precoders[j](r, c) + delta;
                    const double up = weighted_sum_rate(channels, probe, mu);
                    probe[j](r, c) = precoders[j](r, c) - delta;
                    const double down = weighted_sum_rate(channels, probe, mu);
                    probe[j](r, c) = precoders[j](r, c);
                    part[p] = (up - down) / (2.0 * step);
                }
                g(r, c) = cdouble(part[0], part[1]);
            }
        grad.push_back(std::move(g));
    }
    return grad;
}

std::vector<CMatrix> project_to_constraint(std::vector<CMatrix> precoders, const PowerConstraint &constraint)
{
    if (const auto *sum = std::get_if<SumPower>(&constraint))
    {
        const double p = total_power(precoders);
        if (p > 0.0)
            for (auto &V : precoders)
                V *= std::sqrt(sum->total / p);
        return precoders;
    }
    const auto &budgets = std::get<PerNodePower>(constraint).budgets;
    for (std::size_t k = 0; k < precoders.size(); ++k)
    {
        const double p = power_of(precoders[k]);
        if (p > 0.0)
            precoders[k] *= std::sqrt(budgets[k] / p);
    }
    return precoders;
}

namespace {

double residual(const std::vector<CMatrix> &V, const PowerConstraint &constraint)
{
    if (const auto *sum = std::get_if<SumPower>(&constraint))
        return std::abs(total_power(V) - sum->total) / sum->total;
    const auto &budgets = std::get<PerNodePower>(constraint).budgets;
    double r = 0.0;
    for (std::size_t k = 0; k < V.size(); ++k)
        r = std::max(r, std::abs(power_of(V[k]) - budgets[k]) / budgets[k]);
    return r;
}

double budget_total(const PowerConstraint &constraint)
{
    if (const auto *sum = std::get_if<SumPower>(&constraint))
        return sum->total;
    double s = 0.0;
    for (double p : std::get<PerNodePower>(constraint).budgets)
        s += p;
    return s;
}

} // namespace

GradientResult projected_gradient_wsr(const ChannelSet &channels, const RateWeights &mu,
                                      const PowerConstraint &constraint, const GradientConfig &config)
{
    config.validate();
    validate_constraint(constraint, channels.users());

    GradientResult out;
    auto &trace = out.trace;
    std::vector<CMatrix> V = initialize_precoders(channels, constraint, config.init, config.seed);
    double rate = weighted_sum_rate(channels, V, mu);
    trace.wsr.push_back(rate);
    trace.power_residual.push_back(residual(V, constraint));

    const double radius = std::sqrt(budget_total(constraint));
    double step = config.initial_step;
    for (int it = 1; it <= config.outer_iters; ++it)
    {
        const auto grad = config.mode == GradientMode::Analytic ? wsr_gradient(channels, V, mu)
                                                                : wsr_gradient_fd(channels, V, mu, config.fd_step);
        double gnorm = 0.0;
        for (const auto &g : grad)
            gnorm += g.squaredNorm();
        gnorm = std::sqrt(gnorm);
        trace.iterations = it;
        if (!(gnorm > 0.0))
        {
            trace.converged = true;
            break;
        }

        // Backtracking: shrink until the projected step improves the WSR.
        bool accepted = false;
        double next_rate = rate;
        std::vector<CMatrix> candidate;
        for (int trial = 0; trial < config.max_step_trials; ++trial)
        {
            ++trace.step_trials;
            candidate = V;
            const double scale = step * radius / gnorm;
            for (std::size_t j = 0; j < V.size(); ++j)
                candidate[j] += scale * grad[j];
            candidate = project_to_constraint(std::move(candidate), constraint);
            next_rate = weighted_sum_rate(channels, candidate, mu);
            if (next_rate > rate)
            {
                accepted = true;
                break;
            }
            step *= config.shrink;
        }
        if (!accepted)
        {
            trace.converged = true;
            break;
        }
        const double gain = next_rate - rate;
        V = std::move(candidate);
        rate = next_rate;
        trace.wsr.push_back(rate);
        trace.power_residual.push_back(residual(V, constraint));
        step = std::min(step / config.shrink, 1.0);
        if (gain < config.epsilon)
        {
            trace.converged = true;
            break;
        }
    }
    out.precoders = std::move(V);
    out.wsr = rate;
    return out;
}

} // namespace wmmse
