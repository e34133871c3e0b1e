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

#include <string>
#include <vector>

namespace wmmse {

/// Dimensions and iteration counts for the closed-form cost model. I1 counts
/// outer (sum-rate) iterations, I2 step-size trials of the gradient method,
/// I3 multiplier-search iterations of the per-node design.
struct ComplexityParams
{
    int K = 4;
    int M = 5;
    int N = 5;
    int d = 2;
    int I1 = 10;
    int I2 = 10;
    int I3 = 10;

    void validate() const;
};

/// Complex-multiplication cost of an n x n inversion, an n x m SVD and an
/// n x n Cholesky factorization.
struct PrimitiveCosts
{
    double inversion = 0.0;
    double svd = 0.0;
    double cholesky = 0.0;
};

PrimitiveCosts primitive_costs(int n, int m);

struct StageCount
{
    std::string index;
    std::string description;
    double count = 0.0;
};

struct FeedbackAmount
{
    /// Channel coefficients fed back once per slot.
    double csi = 0.0;
    /// Filter coefficients fed back on every outer iteration.
    double coefficients = 0.0;

    double total() const { return csi + coefficients; }
};

struct ComplexityReport
{
    std::string method;
    std::vector<StageCount> stages;
    double total = 0.0;
    FeedbackAmount feedback;
};

ComplexityReport flops_gradient(const ComplexityParams &p);
ComplexityReport flops_proposed_sum(const ComplexityParams &p);
ComplexityReport flops_proposed_ind(const ComplexityParams &p);

struct FeedbackAmounts
{
    FeedbackAmount gradient;
    FeedbackAmount proposed_ind;
    FeedbackAmount proposed_sum;
};

FeedbackAmounts feedback_amounts(const ComplexityParams &p);

} // namespace wmmse
