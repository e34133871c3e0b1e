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

#include <stdexcept>

namespace wmmse {

void ComplexityParams::validate() const
{
    if (K < 1 || M < 1 || N < 1 || d < 1 || I1 < 1 || I2 < 1 || I3 < 1)
        throw std::invalid_argument("complexity parameters must be positive");
}

PrimitiveCosts primitive_costs(int n, int m)
{
    if (n < 1 || m < 1)
        throw std::invalid_argument("primitive cost dimensions must be positive");
    const double N = n;
    const double M = m;
    return {2.0 / 3.0 * N * N * N, 7.0 * N * M * M + 4.0 * M * M * M, N * N * N / 3.0};
}

namespace {

// Row-by-row transcription of the cost table. Symbols keep the table's
// names: cN1 = inversion(N), cM1 = inversion(M), cd1 = inversion(d),
// cMd2 = svd(M, d), cdd2 = svd(d, d), cd3 = cholesky(d).
struct Terms
{
    double K, M, N, d, I1, I2, I3;
    double cN1, cM1, cd1, cMd2, cdd2, cd3;

    explicit Terms(const ComplexityParams &p)
        : K(p.K), M(p.M), N(p.N), d(p.d), I1(p.I1), I2(p.I2), I3(p.I3), cN1(primitive_costs(p.N, 1).inversion),
          cM1(primitive_costs(p.M, 1).inversion), cd1(primitive_costs(p.d, 1).inversion),
          cMd2(primitive_costs(p.M, p.d).svd), cdd2(primitive_costs(p.d, p.d).svd),
          cd3(primitive_costs(p.d, 1).cholesky)
    {
    }

    // Shared by a.1, a.4, b.1 and b.7: evaluating the rates once.
    double rate_eval() const
    {
        return K * (M * M * d + 1) + K * (K - 1) * (1 + 2 * M * N * d + N * N * d) +
               K * (2 + 2 * M * N * d + N * N * d + N * N * N + cN1);
    }

    double a1() const { return rate_eval(); }
    double a2() const
    {
        return I1 * (K * (2 * K - 1) * (1 + 2 * M * N * d + N * N * d) +
                     K * (2 * K - 1) * (9 + 2 * cN1 + 2 * M * N * N + 2 * M * M * N + 2 * M * M * d + M * d * d));
    }
    double a3() const
    {
        return I1 * (K * I2 * (I2 + 1) / 2 +
                     K * I2 *
                         (2 * K * (K - 1) * (1 + 2 * M * N * d + N * N * d) +
                          2 * K * (2 + 2 * M * N * d + N * N * d + N * N * N + cN1) + K * (M * M * d + 1) + 2 +
                          M * d * d));
    }
    double a4() const { return I1 * rate_eval(); }
    double a5() const
    {
        // The table writes both c_d^2 and c_dd^2; both are the d x d SVD.
        return K * (1 + 2 * M * d + 2 * M * M * d + cMd2) + K * (K - 1) * (2 * M * N * d + N * N * d) +
               K * (2 * M * N * d + 2 * N * N * d + 4 * N * d * d + M * d * d + d * d * d + cN1 + cd3 + cdd2 + cdd2);
    }

    double b1() const { return rate_eval(); }
    double b2() const { return I1 * K * (K - 1) * (1 + 2 * M * N * d + N * N * d); }
    double b3() const { return I1 * K * (3 * M * N * d + 2 * N * N * d + cN1); }
    double b4() const { return I1 * K * (2 * M * N * d + N * N * d + N * d * d + cN1 + cd1); }
    double b5() const { return I1 * K * cd1; }
    double b6_sum() const
    {
        return I1 * (K * (K - 1) * (2 * N * M * d + M * d * d + M * M * d) + K * (N * d * d + d * d * d) +
                     K * (3 * M * N * d + 2 * M * d * d + M * M * d + 1 + cM1) + K * (M * M * d + M * d));
    }
    double b6_ind() const
    {
        return I1 * (K * (K - 1) * (2 * N * M * d + M * d * d + M * M * d) + I3 * K * M * M * d +
                     (I3 + 1) * K * (3 * M * N * d + 2 * M * d * d + M * M * d + 1 + cM1));
    }
    double b7() const { return I1 * rate_eval(); }
};

ComplexityReport make_report(std::string method, std::vector<StageCount> stages, FeedbackAmount feedback)
{
    ComplexityReport r{std::move(method), std::move(stages), 0.0, feedback};
    for (const auto &s : r.stages)
        r.total += s.count;
    return r;
}

std::vector<StageCount> proposed_common(const Terms &t)
{
    return {
        {"b.1", "initialization", t.b1()},
        {"b.2", "noise and interference covariance", t.b2()},
        {"b.3", "receive filter", t.b3()},
        {"b.4", "error covariance", t.b4()},
        {"b.5", "MSE weights", t.b5()},
    };
}

} // namespace

ComplexityReport flops_gradient(const ComplexityParams &p)
{
    p.validate();
    const Terms t(p);
    return make_report("gradient",
                       {
                           {"a.1", "initialization", t.a1()},
                           {"a.2", "gradient", t.a2()},
                           {"a.3", "step size search", t.a3()},
                           {"a.4", "sum rate", t.a4()},
                           {"a.5", "final precoders and decoders", t.a5()},
                       },
                       feedback_amounts(p).gradient);
}

ComplexityReport flops_proposed_sum(const ComplexityParams &p)
{
    p.validate();
    const Terms t(p);
    auto stages = proposed_common(t);
    stages.push_back({"b.6-1", "transmit filter (sum power)", t.b6_sum()});
    stages.push_back({"b.7", "sum rate", t.b7()});
    return make_report("proposed_sum", std::move(stages), feedback_amounts(p).proposed_sum);
}

ComplexityReport flops_proposed_ind(const ComplexityParams &p)
{
    p.validate();
    const Terms t(p);
    auto stages = proposed_common(t);
    stages.push_back({"b.6-2", "transmit filter with multiplier search", t.b6_ind()});
    stages.push_back({"b.7", "sum rate", t.b7()});
    return make_report("proposed_ind", std::move(stages), feedback_amounts(p).proposed_ind);
}

FeedbackAmounts feedback_amounts(const ComplexityParams &p)
{
    p.validate();
    const double K = p.K, M = p.M, N = p.N, d = p.d, I1 = p.I1;
    FeedbackAmounts f;
    // Global CSI plus the other users' precoders.
    f.gradient = {M * N * K * K, M * d * (K - 1) * I1};
    // Local CSI plus receivers and weights of every destination.
    f.proposed_ind = {M * N * K, (M * d + d * d) * K * I1};
    // As above plus one scalar power term per iteration.
    f.proposed_sum = {M * N * K, ((M * d + d * d) * K + 1) * I1};
    return f;
}

} // namespace wmmse
