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
#include "wmmse/complexity.hpp"
#include "wmmse/experiment.hpp"

#include <catch_amalgamated.hpp>
#include <cmath>
#include <random>
#include <sstream>

using namespace wmmse;
using Catch::Approx;

namespace {

// Second transcription of the cost table, typed in independently, row by
// row, with the primitives spelled out inline.
double inv(double n) { return 2.0 * n * n * n / 3.0; }
double svd(double n, double m) { return 7.0 * n * m * m + 4.0 * m * m * m; }
double chol(double n) { return n * n * n / 3.0; }

struct Reference
{
    double gradient, ind, sum;
};

Reference reference_totals(const ComplexityParams &p)
{
    const double K = p.K, M = p.M, N = p.N, d = p.d, I1 = p.I1, I2 = p.I2, I3 = p.I3;
    const double MNd = M * N * d, N2d = N * N * d, M2d = M * M * d, Md2 = M * d * d;
    const double rates = K * (M2d + 1) + K * (K - 1) * (1 + 2 * MNd + N2d) + K * (2 + 2 * MNd + N2d + std::pow(N, 3) + inv(N));

    double a1 = rates;
    double a2 = I1 * (K * (2 * K - 1) * (1 + 2 * MNd + N2d) +
                      K * (2 * K - 1) * (9 + 2 * inv(N) + 2 * M * N * N + 2 * M * M * N + 2 * M2d + Md2));
    double a3 = I1 * (K * I2 * (I2 + 1) / 2 +
                      K * I2 * (2 * K * (K - 1) * (1 + 2 * MNd + N2d) + 2 * K * (2 + 2 * MNd + N2d + std::pow(N, 3) + inv(N)) +
                                K * (M2d + 1) + 2 + Md2));
    double a4 = I1 * rates;
    double a5 = K * (1 + 2 * M * d + 2 * M2d + svd(M, d)) + K * (K - 1) * (2 * MNd + N2d) +
                K * (2 * MNd + 2 * N2d + 4 * N * d * d + Md2 + std::pow(d, 3) + inv(N) + chol(d) + svd(d, d) + svd(d, d));

    double b1 = rates;
    double b2 = I1 * K * (K - 1) * (1 + 2 * MNd + N2d);
    double b3 = I1 * K * (3 * MNd + 2 * N2d + inv(N));
    double b4 = I1 * K * (2 * MNd + N2d + N * d * d + inv(N) + inv(d));
    double b5 = I1 * K * inv(d);
    double b61 = I1 * (K * (K - 1) * (2 * MNd + Md2 + M2d) + K * (N * d * d + std::pow(d, 3)) +
                       K * (3 * MNd + 2 * Md2 + M2d + 1 + inv(M)) + K * (M2d + M * d));
    double b62 = I1 * (K * (K - 1) * (2 * MNd + Md2 + M2d) + I3 * K * M2d + (I3 + 1) * K * (3 * MNd + 2 * Md2 + M2d + 1 + inv(M)));
    double b7 = I1 * rates;

    double common = b1 + b2 + b3 + b4 + b5 + b7;
    return {a1 + a2 + a3 + a4 + a5, common + b62, common + b61};
}

double stage(const ComplexityReport &r, const std::string &index)
{
    for (const auto &s : r.stages)
        if (s.index == index)
            return s.count;
    FAIL("missing stage " << index);
    return 0.0;
}

} // namespace

TEST_CASE("primitive costs")
{
    auto c3 = primitive_costs(3, 1);
    REQUIRE(c3.inversion == Approx(18.0));
    REQUIRE(c3.cholesky == Approx(9.0));
    REQUIRE(primitive_costs(1, 1).svd == Approx(11.0));
    REQUIRE(primitive_costs(5, 5).svd == Approx(1375.0));
    REQUIRE_THROWS_AS(primitive_costs(0, 1), std::invalid_argument);
}

TEST_CASE("initialization stage at the reference point")
{
    ComplexityParams p;
    REQUIRE(stage(flops_proposed_sum(p), "b.1") == Approx(3457.33).epsilon(1e-6));
    REQUIRE(stage(flops_gradient(p), "a.1") == stage(flops_proposed_ind(p), "b.1"));
}

TEST_CASE("stage lists")
{
    ComplexityParams p;
    auto g = flops_gradient(p);
    REQUIRE(g.stages.size() == 5);
    REQUIRE(g.method == "gradient");
    auto s = flops_proposed_sum(p);
    auto i = flops_proposed_ind(p);
    REQUIRE(s.stages.size() == 7);
    REQUIRE(i.stages.size() == 7);
    REQUIRE(s.stages[5].index == "b.6-1");
    REQUIRE(i.stages[5].index == "b.6-2");
    double sum = 0.0;
    for (const auto &st : s.stages)
        sum += st.count;
    REQUIRE(s.total == Approx(sum));
}

TEST_CASE("feedback amounts at the reference point")
{
    auto f = feedback_amounts(ComplexityParams{});
    REQUIRE(f.gradient.total() == 700.0);
    REQUIRE(f.proposed_ind.total() == 660.0);
    REQUIRE(f.proposed_sum.total() == 670.0);
    REQUIRE(flops_gradient(ComplexityParams{}).feedback.total() == 700.0);
}

TEST_CASE("sum-power design is cheapest and the gradient method the most expensive")
{
    for (int K = 2; K <= 8; ++K)
    {
        ComplexityParams p;
        p.K = K;
        double s = flops_proposed_sum(p).total, i = flops_proposed_ind(p).total, g = flops_gradient(p).total;
        REQUIRE(s < i);
        REQUIRE(i < g);
    }
}

TEST_CASE("global CSI grows quadratically, local CSI linearly")
{
    auto csi = [](int K, bool gradient) {
        ComplexityParams p;
        p.K = K;
        auto f = feedback_amounts(p);
        return gradient ? f.gradient.csi : f.proposed_sum.csi;
    };
    for (int K = 2; K <= 7; ++K)
    {
        double second_g = csi(K + 1, true) - 2 * csi(K, true) + csi(K - 1, true);
        double second_p = csi(K + 1, false) - 2 * csi(K, false) + csi(K - 1, false);
        REQUIRE(second_g == Approx(2.0 * 5 * 5));
        REQUIRE(second_p == 0.0);
    }
}

TEST_CASE("gradient feedback overtakes the proposed feedback at four users")
{
    for (int K = 1; K <= 8; ++K)
    {
        ComplexityParams p;
        p.K = K;
        auto f = feedback_amounts(p);
        if (K < 4)
        {
            REQUIRE(f.gradient.total() < f.proposed_ind.total());
            REQUIRE(f.gradient.total() < f.proposed_sum.total());
        }
        else
        {
            REQUIRE(f.gradient.total() > f.proposed_ind.total());
            REQUIRE(f.gradient.total() > f.proposed_sum.total());
        }
    }
}

TEST_CASE("totals are affine in the outer iteration count")
{
    ComplexityParams p;
    auto total = [&](int i1, int which) {
        p.I1 = i1;
        return which == 0 ? flops_gradient(p).total : which == 1 ? flops_proposed_ind(p).total : flops_proposed_sum(p).total;
    };
    for (int which = 0; which < 3; ++which)
    {
        double step = total(2, which) - total(1, which);
        REQUIRE(step > 0.0);
        REQUIRE(total(11, which) - total(10, which) == Approx(step));
        REQUIRE(total(30, which) == Approx(total(1, which) + 29 * step));
    }
}

TEST_CASE("implementation agrees with an independent transcription")
{
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> small(1, 8), iters(1, 30);
    for (int n = 0; n < 1000; ++n)
    {
        ComplexityParams p{small(rng), small(rng), small(rng), small(rng), iters(rng), iters(rng), iters(rng)};
        auto ref = reference_totals(p);
        REQUIRE(flops_gradient(p).total == Approx(ref.gradient).epsilon(1e-9));
        REQUIRE(flops_proposed_ind(p).total == Approx(ref.ind).epsilon(1e-9));
        REQUIRE(flops_proposed_sum(p).total == Approx(ref.sum).epsilon(1e-9));
    }
}

TEST_CASE("curve export")
{
    ComplexitySweep sweep;
    std::istringstream in(complexity_curves_csv(sweep));
    std::string line;
    std::getline(in, line);
    REQUIRE(line == "K,method,total_flops,total_feedback");
    int rows = 0;
    bool saw_reference = false;
    while (std::getline(in, line))
    {
        ++rows;
        if (line.rfind("4,gradient,", 0) == 0)
        {
            saw_reference = true;
            REQUIRE(line.substr(line.rfind(',') + 1) == "700");
        }
    }
    REQUIRE(rows == 3 * 7);
    REQUIRE(saw_reference);
}

TEST_CASE("invalid parameters are rejected")
{
    ComplexityParams p;
    p.I3 = 0;
    REQUIRE_THROWS_AS(flops_proposed_ind(p), std::invalid_argument);
    p = {};
    p.K = 0;
    REQUIRE_THROWS_AS(feedback_amounts(p), std::invalid_argument);
}
