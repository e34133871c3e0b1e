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
// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "wmmse/baselines.hpp"
#include "wmmse/channel.hpp"
#include "wmmse/complexity.hpp"
#include "wmmse/experiment.hpp"
#include "wmmse/filters.hpp"
#include "wmmse/linalg.hpp"
#include "wmmse/optimizer.hpp"
#include "wmmse/robust.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace wmmse;

namespace {

struct Verdict
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<CMatrix> mmse_receivers(const ChannelSet &h, const std::vector<CMatrix> &v)
{
    std::vector<CMatrix> u;
    for (int k = 0; k < h.users(); ++k)
        u.push_back(mmse_receiver(h, v, k));
    return u;
}

std::vector<CMatrix> nominal_weights(const ChannelSet &h, const std::vector<CMatrix> &v, const RateWeights &mu)
{
    std::vector<CMatrix> e;
    for (int k = 0; k < h.users(); ++k)
        e.push_back(error_covariance(h, v, k));
    return mse_weights(e, mu);
}

Verdict duality()
{
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> K(1, 4), MN(1, 4);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n)
    {
        NetworkDims dims{K(rng), MN(rng), MN(rng), 1};
        dims.d = std::uniform_int_distribution<int>(1, std::min(dims.M, dims.N))(rng);
        auto h = testutil::random_channels(rng, dims);
        auto v = testutil::random_precoders(rng, dims);
        for (int k = 0; k < dims.K; ++k)
        {
            double r = testutil::rate_oracle(h, v, k);
            worst = std::max(worst, std::abs(r - rate_from_error(error_covariance(h, v, k))));
            worst = std::max(worst, std::abs(r - achievable_rate(h, v, k)));
        }
    }
    return {worst < 1e-9, fmt("max |R_k - log2 det E_k^-1| = %.2e over 1000 instances", worst)};
}

Verdict empirical_mse_check()
{
    std::mt19937_64 rng(202);
    double worst = 0.0;
    for (int n = 0; n < 20; ++n)
    {
        NetworkDims dims{3, 3, 3, 1 + n % 2};
        auto h = testutil::random_channels(rng, dims);
        auto v = testutil::random_precoders(rng, dims);
        auto u = mmse_receivers(h, v);
        for (int k = 0; k < dims.K; ++k)
        {
            double tr = error_covariance(h, v, k).trace().real();
            double sim = empirical_mse(h, v, u, k, 100000, derive_seed(202, {std::uint64_t(n), std::uint64_t(k)}));
            worst = std::max(worst, std::abs(sim - tr) / tr);
        }
    }
    return {worst <= 0.03, fmt("max relative deviation %.4f over 20 instances x 1e5 draws", worst)};
}

Verdict lemma_one()
{
    std::mt19937_64 rng(303);
    int monotone_breaks = 0, misses = 0, clamps = 0;
    double worst = 0.0;
    for (int n = 0; n < 100; ++n)
    {
        int m = 1 + n % 6;
        CMatrix psi = testutil::random_psd(rng, m, 1 + (n / 6) % m);
        CMatrix rhs = testutil::random_matrix(rng, m, 1 + n % 2);
        std::vector<double> grid(50);
        std::uniform_real_distribution<double> u(0.0, 10.0);
        for (auto &x : grid)
            x = u(rng);
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        double prev = per_node_power(psi, rhs, grid[0]);
        for (std::size_t i = 1; i < grid.size(); ++i)
        {
            double p = per_node_power(psi, rhs, grid[i]);
            if (!(p < prev))
                ++monotone_breaks;
            prev = p;
        }
        // budgets from tiny to far beyond anything reachable
        double budget = std::pow(10.0, -2.0 + 6.0 * (n % 10) / 9.0);
        auto r = solve_power_multiplier(psi, rhs, budget, OptimizerConfig{}.bisection_tol);
        if (r.clamped)
        {
            ++clamps;
            if (!(r.lambda == 0.0 && r.power <= budget))
                ++misses;
            continue;
        }
        double rel = std::abs(power_of(r.precoder) - budget) / budget;
        worst = std::max(worst, rel);
        if (rel > 1e-6)
            ++misses;
    }
    return {monotone_breaks == 0 && misses == 0,
            fmt("%d monotonicity breaks, %d budget misses, max relative error %.1e, %d clamps", monotone_breaks,
                misses, worst, clamps)};
}

Verdict power_feasibility()
{
    double worst_sum = 0.0, worst_node = 0.0;
    const double tol = OptimizerConfig{}.bisection_tol;
    for (std::uint64_t s = 0; s < 30; ++s)
    {
        auto h = generate_channels({4, 5, 5, 2}, snr_to_sigma_h(10.0 * (s % 3)), derive_seed(404, {s}));
        auto a = run_algorithm1(h, RateWeights::equal(4), SumPower{4.0}, OptimizerConfig{});
        for (double r : a.trace.power_residual)
            worst_sum = std::max(worst_sum, r);
        worst_sum = std::max(worst_sum, std::abs(total_power(a.state.precoders) - 4.0) / 4.0);
        auto b = run_algorithm1(h, RateWeights::favor_first(4), PerNodePower{{1, 1, 1, 1}}, OptimizerConfig{});
        for (double r : b.trace.power_residual)
            worst_node = std::max(worst_node, r);
        for (const auto &v : b.state.precoders)
            worst_node = std::max(worst_node, power_of(v) - 1.0);
    }
    return {worst_sum <= 1e-9 && worst_node <= tol,
            fmt("sum-power residual %.1e, per-node residual %.1e (tolerance %.0e)", worst_sum, worst_node, tol)};
}

Verdict monotone_convergence()
{
    const OptimizerConfig cfg;
    int violations = 0, converged = 0, runs = 0;
    std::vector<int> iters;
    for (std::uint64_t s = 0; s < 200; ++s)
    {
        auto h = generate_channels({3, 3, 3, 1}, snr_to_sigma_h(10.0), derive_seed(505, {s}));
        for (PowerConstraint pc : {PowerConstraint{SumPower{3.0}}, PowerConstraint{PerNodePower{{1, 1, 1}}}})
        {
            auto r = run_algorithm1(h, RateWeights::equal(3), pc, cfg);
            const auto &w = r.trace.wsr;
            for (std::size_t i = 1; i < w.size(); ++i)
                if (w[i] < w[i - 1] - 1e-6 * std::abs(w[i - 1]))
                    ++violations;
            ++runs;
            if (r.trace.converged && r.trace.iterations < 200)
                ++converged;
            iters.push_back(r.trace.iterations);
        }
    }
    std::sort(iters.begin(), iters.end());
    const double median = 0.5 * (iters[iters.size() / 2 - 1] + iters[iters.size() / 2]);
    const double share = double(converged) / runs;
    return {violations == 0 && share >= 0.99 && median <= 30,
            fmt("%d dips, %.1f%% converged before 200 iterations, median %.1f iterations (epsilon %.0e)", violations,
                100 * share, median, cfg.epsilon)};
}

Verdict gradient_alignment()
{
    std::mt19937_64 rng(606);
    NetworkDims dims{2, 2, 2, 1};
    const double step = 1e-5;
    double worst = 0.0;
    for (int n = 0; n < 50; ++n)
    {
        auto h = testutil::random_channels(rng, dims);
        auto v = testutil::random_precoders(rng, dims);
        RateWeights mu({1.0, 0.5 + 0.1 * (n % 10)});
        auto u = mmse_receivers(h, v);
        auto w = nominal_weights(h, v, mu);
        // receivers and weights stay frozen; d = 1 so W_k is a scalar
        auto wmse = [&](const std::vector<CMatrix> &x) {
            double s = 0.0;
            for (int k = 0; k < 2; ++k)
                s += w[k](0, 0).real() * analytic_mse(h, x, u[k], k);
            return s;
        };
        auto neg_wsr = [&](const std::vector<CMatrix> &x) { return -testutil::wsr_oracle(h, x, mu.mu); };
        std::vector<double> ga, gb;
        for (int j = 0; j < 2; ++j)
            for (Eigen::Index i = 0; i < v[j].size(); ++i)
                for (cdouble dir : {cdouble(1, 0), cdouble(0, 1)})
                {
                    auto vp = v, vm = v;
                    vp[j](i) += step * dir;
                    vm[j](i) -= step * dir;
                    ga.push_back((wmse(vp) - wmse(vm)) / (2 * step));
                    gb.push_back((neg_wsr(vp) - neg_wsr(vm)) / (2 * step));
                }
        Eigen::Map<Eigen::VectorXd> a(ga.data(), ga.size()), b(gb.data(), gb.size());
        worst = std::max(worst, (a - b).norm() / b.norm());
    }
    return {worst <= 1e-4, fmt("max relative gradient mismatch %.2e over 50 instances", worst)};
}

Verdict brute_force()
{
    OptimizerConfig cfg;
    cfg.epsilon = 1e-9;
    cfg.max_iters = 5000;
    cfg.bisection_tol = 1e-12;
    double worst = 0.0;
    int misses = 0;
    for (std::uint64_t s = 0; s < 20; ++s)
    {
        auto h = generate_channels({2, 1, 1, 1}, 1.0, derive_seed(707, {s}));
        double g[2][2];
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 2; ++i)
                g[j][i] = std::norm(h.link(j, i)(0, 0));
        double best = 0.0;
        for (int a = 0; a < 400; ++a)
            for (int b = 0; b < 400; ++b)
            {
                double p1 = std::pow(a / 399.0, 2), p2 = std::pow(b / 399.0, 2);
                best = std::max(best, std::log2(1 + g[0][0] * p1 / (1 + g[0][1] * p2)) +
                                          std::log2(1 + g[1][1] * p2 / (1 + g[1][0] * p1)));
            }
        auto r = run_algorithm1(h, RateWeights::equal(2), PerNodePower{{1, 1}}, cfg);
        double gap = best - r.wsr;
        worst = std::max(worst, gap);
        if (gap > 1e-3)
            ++misses;
    }
    return {misses == 0, fmt("%d of 20 instances more than 1e-3 bits below the grid optimum (worst %.3g bits)",
                             misses, worst)};
}

ExperimentSpec paper_setup()
{
    ExperimentSpec s;
    s.dims = {4, 5, 5, 2};
    s.snr_db = {0.0, 10.0, 20.0};
    s.trials = 100;
    s.master_seed = 1;
    s.constraints = {ConstraintMode::Sum, ConstraintMode::PerNode};
    return s;
}

double mean_of(const ResultTable &t, double snr, Method m, ConstraintMode c, bool robust = false)
{
    const auto *r = t.find(snr, m, c, robust);
    if (!r)
        throw std::runtime_error("missing result row");
    if (r->failed_trials)
        throw std::runtime_error("failed trials in result row");
    return r->mean_wsr;
}

struct EqualWeightRuns
{
    ResultTable table;
    bool done = false;
};

EqualWeightRuns &equal_weight_runs()
{
    static EqualWeightRuns runs;
    if (!runs.done)
    {
        auto s = paper_setup();
        s.methods = {Method::Wmmse, Method::SimpleMmse, Method::Gradient};
        runs.table = run_experiment(s);
        runs.done = true;
    }
    return runs;
}

Verdict equal_weight_parity()
{
    const auto &t = equal_weight_runs().table;
    double worst = 0.0;
    std::string detail;
    for (double snr : {0.0, 10.0, 20.0})
    {
        std::vector<double> m{mean_of(t, snr, Method::Wmmse, ConstraintMode::Sum),
                              mean_of(t, snr, Method::Wmmse, ConstraintMode::PerNode),
                              mean_of(t, snr, Method::Gradient, ConstraintMode::PerNode),
                              mean_of(t, snr, Method::Gradient, ConstraintMode::Sum)};
        auto [lo, hi] = std::minmax_element(m.begin(), m.end());
        double spread = (*hi - *lo) / *hi;
        worst = std::max(worst, spread);
        detail += fmt(" %gdB:%.2f/%.2f/%.2f/%.2f", snr, m[0], m[1], m[2], m[3]);
    }
    return {worst <= 0.02, fmt("max pairwise spread %.2f%%;", 100 * worst) + detail};
}

Verdict unequal_ordering()
{
    auto s = paper_setup();
    s.weight_profile = ExperimentSpec::WeightProfile::FavorFirst;
    auto t = run_experiment(s);
    bool ok = true;
    std::string detail;
    for (double snr : {0.0, 10.0, 20.0})
    {
        const auto *a = t.find(snr, Method::Wmmse, ConstraintMode::Sum);
        const auto *b = t.find(snr, Method::Wmmse, ConstraintMode::PerNode);
        ok = ok && a->mean_wsr >= b->mean_wsr && a->failed_trials == 0 && b->failed_trials == 0;
        detail += fmt(" %gdB:%.2f vs %.2f", snr, a->mean_wsr, b->mean_wsr);
        if (snr == 20.0)
        {
            double se = std::hypot(a->std_error, b->std_error);
            ok = ok && a->mean_wsr - b->mean_wsr >= se;
            detail += fmt(" (gap %.2f, se %.2f)", a->mean_wsr - b->mean_wsr, se);
        }
    }
    return {ok, "sum vs per-node:" + detail};
}

Verdict simple_mmse_gap()
{
    const auto &t = equal_weight_runs().table;
    bool ok = true;
    std::string detail;
    for (auto c : {ConstraintMode::Sum, ConstraintMode::PerNode})
    {
        double g0 = mean_of(t, 0.0, Method::Wmmse, c) - mean_of(t, 0.0, Method::SimpleMmse, c);
        double g20 = mean_of(t, 20.0, Method::Wmmse, c) - mean_of(t, 20.0, Method::SimpleMmse, c);
        ok = ok && g20 > g0;
        detail += fmt(" %s: %.2f -> %.2f bits", to_string(c).c_str(), g0, g20);
    }
    return {ok, "gap at 0 dB -> 20 dB;" + detail};
}

Verdict robust_benefit()
{
    auto s = paper_setup();
    s.snr_db = {5.0, 15.0, 25.0};
    s.robust.enabled = true;
    s.robust.sigma_delta_frac = 0.1;
    auto t = run_experiment(s);
    bool ok = true;
    std::string detail;
    for (auto c : {ConstraintMode::Sum, ConstraintMode::PerNode})
        for (bool robust : {false, true})
        {
            double r5 = mean_of(t, 5.0, Method::Wmmse, c, robust), r15 = mean_of(t, 15.0, Method::Wmmse, c, robust),
                   r25 = mean_of(t, 25.0, Method::Wmmse, c, robust);
            ok = ok && r25 - r15 < r15 - r5;
            if (robust)
                for (double snr : s.snr_db)
                    ok = ok && mean_of(t, snr, Method::Wmmse, c, true) >= mean_of(t, snr, Method::Wmmse, c, false);
            detail += fmt(" %s/%s:%.2f,%.2f,%.2f", to_string(c).c_str(), robust ? "robust" : "naive", r5, r15, r25);
        }
    return {ok, "realized WSR at 5/15/25 dB;" + detail};
}

Verdict overestimate()
{
    auto s = paper_setup();
    s.snr_db = {15.0};
    s.robust.enabled = true;
    s.robust.sigma_delta_frac = 0.1;
    auto exact = run_experiment(s);
    s.robust.sigma_eps_frac = 0.1;
    auto over = run_experiment(s);
    double worst = 0.0;
    std::string detail;
    for (auto c : {ConstraintMode::Sum, ConstraintMode::PerNode})
    {
        double a = mean_of(exact, 15.0, Method::Wmmse, c, true), b = mean_of(over, 15.0, Method::Wmmse, c, true);
        worst = std::max(worst, (a - b) / a);
        detail += fmt(" %s: %.3f -> %.3f", to_string(c).c_str(), a, b);
    }
    return {worst <= 0.05, fmt("max loss %.2f%%;", 100 * worst) + detail};
}

Verdict complexity_model()
{
    auto f = feedback_amounts(ComplexityParams{});
    bool feedback = f.gradient.total() == 700 && f.proposed_ind.total() == 660 && f.proposed_sum.total() == 670;
    bool order = true, growth = true;
    for (int K = 2; K <= 8; ++K)
    {
        ComplexityParams p;
        p.K = K;
        order = order && flops_proposed_sum(p).total < flops_proposed_ind(p).total &&
                flops_proposed_ind(p).total < flops_gradient(p).total;
        ComplexityParams lo = p, hi = p;
        lo.K = K - 1;
        hi.K = K + 1;
        double g2 = feedback_amounts(hi).gradient.csi - 2 * feedback_amounts(p).gradient.csi +
                    feedback_amounts(lo).gradient.csi;
        double p1 = feedback_amounts(p).proposed_sum.csi - feedback_amounts(lo).proposed_sum.csi;
        double p2 = feedback_amounts(hi).proposed_sum.csi - 2 * feedback_amounts(p).proposed_sum.csi +
                    feedback_amounts(lo).proposed_sum.csi;
        growth = growth && g2 > 0 && p1 > 0 && p2 == 0;
    }
    return {feedback && order && growth,
            fmt("feedback %g/%g/%g, flop ordering %s, CSI growth %s", f.gradient.total(), f.proposed_ind.total(),
                f.proposed_sum.total(), order ? "ok" : "violated", growth ? "ok" : "violated")};
}

Verdict robust_reduction()
{
    double worst = 0.0;
    auto track = [&](const CMatrix &a, const CMatrix &b) { worst = std::max(worst, testutil::max_abs_diff(a, b)); };
    for (std::uint64_t s = 0; s < 100; ++s)
    {
        std::mt19937_64 rng(derive_seed(1414, {s}));
        NetworkDims dims{1 + int(s % 4), 1 + int(s % 3), 1 + int((s / 3) % 4), 1};
        dims.d = 1 + int(s / 12) % std::min(dims.M, dims.N);
        auto h = testutil::random_channels(rng, dims);
        auto v = testutil::random_precoders(rng, dims);
        auto mu = RateWeights::favor_first(dims.K);
        RobustContext ctx{h, 0.0};
        auto u = mmse_receivers(h, v);
        auto w = nominal_weights(h, v, mu);
        auto rw = robust_weights(ctx, v, mu);
        for (int k = 0; k < dims.K; ++k)
        {
            track(robust_interference_cov(ctx, v, k), interference_cov(h, v, k));
            track(robust_receiver(ctx, v, k), u[k]);
            track(robust_error_covariance(ctx, v, k), error_covariance(h, v, k));
            track(rw[k], w[k]);
            worst = std::max(worst, std::abs(robust_design_rate(ctx, v, k) - achievable_rate(h, v, k)));
            track(robust_per_node_precoder(ctx, u, w, k, 1.0, 1e-8).precoder,
                  per_node_precoder(h, u, w, k, 1.0, 1e-8).precoder);
        }
        auto a = robust_sum_power_precoders(ctx, u, w, dims.K);
        auto b = sum_power_precoders(h, u, w, dims.K);
        for (int k = 0; k < dims.K; ++k)
            track(a.precoders[k], b.precoders[k]);
        worst = std::max(worst, receiver_loading(ctx, v) + transmitter_loading(ctx, u, w));
    }
    return {worst <= 1e-12, fmt("max element-wise deviation %.2e over 100 instances", worst)};
}

Verdict reproducibility()
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / fmt("wmmse_acceptance_%lld", (long long)std::chrono::steady_clock::now().time_since_epoch().count());
    fs::create_directories(dir);
    {
        std::ofstream spec(dir / "sweep.cfg");
        spec << "# reproducibility sweep\nK = 3\nM = 3\nN = 3\nd = 1\nsnr_db = 0, 15\nmu = unequal\n"
                "constraint = both\nmethods = wmmse,simple_mmse,gradient\nrobust = on\ntrials = 16\nseed = 77\n";
    }
    auto run = [&](const std::string &name, int threads) {
        std::string cmd = std::string("\"") + WMMSE_SIM_PATH + "\" run --spec \"" + (dir / "sweep.cfg").string() +
                          "\" --threads " + std::to_string(threads) + " --out \"" + (dir / name).string() +
                          "\" 2>/dev/null";
        return std::system(cmd.c_str());
    };
    auto slurp = [&](const std::string &name) {
        std::ifstream in(dir / name, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    int rc1 = run("a.csv", 1), rc2 = run("b.csv", 3);
    std::string a = slurp("a.csv"), b = slurp("b.csv");
    fs::remove_all(dir);
    bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    return {ok, fmt("exit codes %d/%d, %zu vs %zu bytes, %s", rc1, rc2, a.size(), b.size(),
                    a == b ? "identical" : "different")};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"rate/error duality", duality},
        {"empirical MSE oracle", empirical_mse_check},
        {"power monotone in the multiplier", lemma_one},
        {"power feasibility", power_feasibility},
        {"monotone convergence", monotone_convergence},
        {"gradient alignment of the MSE weights", gradient_alignment},
        {"scalar brute-force optimality", brute_force},
        {"equal-weight parity", equal_weight_parity},
        {"unequal-weight ordering", unequal_ordering},
        {"simple MMSE gap growth", simple_mmse_gap},
        {"robust benefit and saturation", robust_benefit},
        {"over-estimation sensitivity", overestimate},
        {"complexity and feedback model", complexity_model},
        {"robust-to-nominal reduction", robust_reduction},
        {"reproducibility", reproducibility},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try
        {
            v = criteria[i].second();
        }
        catch (const std::exception &e)
        {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!v.pass)
            ++failures;
        std::printf("%s %2zu %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
