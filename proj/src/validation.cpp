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

#include "wmmse/validation.hpp"

#include "wmmse/baselines.hpp"
#include "wmmse/channel.hpp"
#include "wmmse/complexity.hpp"
#include "wmmse/filters.hpp"
#include "wmmse/optimizer.hpp"
#include "wmmse/robust.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace wmmse {

namespace {

std::string fmt(const char *format, double a, double b = 0.0)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, format, a, b);
    return buf;
}

NetworkDims random_dims(std::mt19937_64 &rng, int max_users, int max_antennas)
{
    std::uniform_int_distribution<int> users(1, max_users);
    std::uniform_int_distribution<int> antennas(1, max_antennas);
    NetworkDims dims{users(rng), antennas(rng), antennas(rng), 1};
    dims.d = std::uniform_int_distribution<int>(1, std::min(dims.M, dims.N))(rng);
    return dims;
}

std::vector<CMatrix> random_precoders(std::mt19937_64 &rng, const NetworkDims &dims, double variance)
{
    std::vector<CMatrix> V;
    for (int k = 0; k < dims.K; ++k)
        V.push_back(complex_gaussian(rng, dims.M, dims.d, variance));
    return V;
}

CheckResult check_duality(const ValidationOptions &opt)
{
    auto rng = make_engine(opt.seed, Stream::Trial, {1});
    double worst = 0.0;
    for (int n = 0; n < opt.instances; ++n)
    {
        const auto dims = random_dims(rng, 4, 4);
        const auto H = generate_channels(dims, 1.0, rng());
        const auto V = random_precoders(rng, dims, 1.0);
        for (int k = 0; k < dims.K; ++k)
            worst = std::max(worst, std::abs(achievable_rate(H, V, k) - rate_from_error(error_covariance(H, V, k))));
    }
    return {"rate/error duality", worst < 1e-9, fmt("max |R - log2 det E^-1| = %.3g", worst)};
}

CheckResult check_power_monotone(const ValidationOptions &opt)
{
    auto rng = make_engine(opt.seed, Stream::Trial, {2});
    int violations = 0;
    double worst_residual = 0.0;
    for (int n = 0; n < opt.instances; ++n)
    {
        const int M = 1 + static_cast<int>(rng() % 5);
        const CMatrix A = complex_gaussian(rng, M, 1 + static_cast<int>(rng() % 4), 1.0);
        const CMatrix psi = A * A.adjoint();
        const CMatrix rhs = complex_gaussian(rng, M, 1 + static_cast<int>(rng() % 2), 1.0);
        double prev = INFINITY;
        for (int i = 0; i < 50; ++i)
        {
            const double p = per_node_power(psi, rhs, std::pow(10.0, -3.0 + 6.0 * i / 49.0));
            if (!(p < prev))
                ++violations;
            prev = p;
        }
        const double budget = std::exp(std::uniform_real_distribution<double>(-2.0, 2.0)(rng));
        const auto sol = solve_power_multiplier(psi, rhs, budget, 1e-8);
        if (!sol.clamped)
            worst_residual = std::max(worst_residual, std::abs(sol.power - budget) / budget);
    }
    return {"power monotone in lambda", violations == 0 && worst_residual <= 1e-6,
            fmt("%g monotonicity violations, worst bisection residual %.3g", violations, worst_residual)};
}

CheckResult check_algorithm(const ValidationOptions &opt)
{
    double worst_sum = 0.0;
    double worst_node = 0.0;
    int dips = 0;
    const int runs = std::max(1, opt.instances / 5);
    for (int n = 0; n < runs; ++n)
    {
        const NetworkDims dims{3, 3, 3, 1};
        const auto H = generate_channels(dims, 10.0, derive_seed(opt.seed, {3, static_cast<std::uint64_t>(n)}));
        const auto mu = RateWeights::equal(3);
        OptimizerConfig cfg;
        const auto sum = run_algorithm1(H, mu, SumPower{3.0}, cfg);
        const auto node = run_algorithm1(H, mu, PerNodePower{{1.0, 1.0, 1.0}}, cfg);
        for (double r : sum.trace.power_residual)
            worst_sum = std::max(worst_sum, r);
        for (double r : node.trace.power_residual)
            worst_node = std::max(worst_node, r);
        dips += sum.trace.monotonicity_violations + node.trace.monotonicity_violations;
    }
    const bool ok = worst_sum < 1e-9 && worst_node <= 1e-8 * (1 + 1e-9) && dips == 0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "sum residual %.3g, per-node residual %.3g, %d rate dips", worst_sum, worst_node,
                  dips);
    return {"alternating loop feasibility and monotonicity", ok, buf};
}

CheckResult check_reduction(const ValidationOptions &opt)
{
    auto rng = make_engine(opt.seed, Stream::Trial, {4});
    double worst = 0.0;
    for (int n = 0; n < opt.instances; ++n)
    {
        const auto dims = random_dims(rng, 3, 3);
        const auto H = generate_channels(dims, 1.0, rng());
        const auto V = random_precoders(rng, dims, 1.0);
        const auto mu = RateWeights::equal(dims.K);
        const RobustContext ctx{H, 0.0};
        std::vector<CMatrix> U;
        std::vector<CMatrix> E;
        for (int k = 0; k < dims.K; ++k)
        {
            U.push_back(mmse_receiver(H, V, k));
            E.push_back(error_covariance(H, V, k));
            worst = std::max(worst, (robust_receiver(ctx, V, k) - U.back()).cwiseAbs().maxCoeff());
        }
        const auto W = mse_weights(E, mu);
        const auto Wr = robust_weights(ctx, V, mu);
        for (int k = 0; k < dims.K; ++k)
            worst = std::max(worst, (Wr[k] - W[k]).cwiseAbs().maxCoeff());
        const auto a = sum_power_precoders(H, U, W, dims.K);
        const auto b = robust_sum_power_precoders(ctx, U, W, dims.K);
        for (int k = 0; k < dims.K; ++k)
        {
            worst = std::max(worst, (a.precoders[k] - b.precoders[k]).cwiseAbs().maxCoeff());
            const auto c = per_node_precoder(H, U, W, k, 1.0, 1e-10);
            const auto e = robust_per_node_precoder(ctx, U, W, k, 1.0, 1e-10);
            worst = std::max(worst, (c.precoder - e.precoder).cwiseAbs().maxCoeff());
        }
    }
    return {"robust reduces to nominal at zero mismatch", worst <= 1e-12, fmt("max deviation %.3g", worst)};
}

CheckResult check_gradient(const ValidationOptions &opt)
{
    double worst = 0.0;
    const int runs = std::max(1, opt.instances / 5);
    auto rng = make_engine(opt.seed, Stream::Trial, {5});
    for (int n = 0; n < runs; ++n)
    {
        const NetworkDims dims{2, 2, 2, 1};
        const auto H = generate_channels(dims, 1.0, rng());
        const auto V = random_precoders(rng, dims, 1.0);
        const auto mu = RateWeights({1.0, 0.5});
        const auto ga = wsr_gradient(H, V, mu);
        const auto gf = wsr_gradient_fd(H, V, mu, 1e-5);
        double num = 0.0;
        double den = 0.0;
        for (std::size_t j = 0; j < ga.size(); ++j)
        {
            num += (ga[j] - gf[j]).squaredNorm();
            den += gf[j].squaredNorm();
        }
        worst = std::max(worst, std::sqrt(num / den));
    }
    return {"analytic gradient matches finite differences", worst < 1e-5, fmt("worst relative error %.3g", worst)};
}

CheckResult check_complexity()
{
    const ComplexityParams p{4, 5, 5, 2, 10, 10, 10};
    const auto f = feedback_amounts(p);
    bool ok = f.gradient.total() == 700.0 && f.proposed_ind.total() == 660.0 && f.proposed_sum.total() == 670.0;
    for (int K = 2; K <= 8; ++K)
    {
        const ComplexityParams q{K, 5, 5, 2, 10, 10, 10};
        ok = ok && flops_proposed_sum(q).total < flops_proposed_ind(q).total &&
             flops_proposed_ind(q).total < flops_gradient(q).total;
    }
    return {"complexity and feedback model", ok,
            fmt("feedback at K=4: gradient %g, proposed-ind %g", f.gradient.total(), f.proposed_ind.total())};
}

} // namespace

std::vector<CheckResult> run_validation(const ValidationOptions &options)
{
    return {
        check_duality(options),   check_power_monotone(options), check_algorithm(options),
        check_reduction(options), check_gradient(options),       check_complexity(),
    };
}

} // namespace wmmse
