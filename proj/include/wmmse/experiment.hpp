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

#include "wmmse/baselines.hpp"
#include "wmmse/complexity.hpp"
#include "wmmse/optimizer.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wmmse {

enum class Method
{
    Wmmse,
    SimpleMmse,
    Gradient,
};

enum class ConstraintMode
{
    Sum,
    PerNode,
};

std::string to_string(Method m);
std::string to_string(ConstraintMode c);
Method parse_method(std::string_view name);
ConstraintMode parse_constraint_mode(std::string_view name);

/// Power normalization used throughout the experiments: P_T = K in sum
/// mode, P_k = 1 in per-node mode, so that the SNR equals sigma_h^2 in both.
PowerConstraint standard_constraint(ConstraintMode mode, int K);

struct RobustSettings
{
    bool enabled = false;
    /// Actual mismatch variance as a fraction of sigma_h^2.
    double sigma_delta_frac = 0.1;
    /// Over-estimate as a fraction of the actual mismatch variance.
    double sigma_eps_frac = 0.0;
};

struct ExperimentSpec
{
    NetworkDims dims{4, 5, 5, 2};
    std::vector<double> snr_db{0.0, 10.0, 20.0};
    enum class WeightProfile
    {
        Equal,
        /// mu_1 = 2, mu_k = 0.25 otherwise.
        FavorFirst,
        Explicit,
    };
    WeightProfile weight_profile = WeightProfile::Equal;
    /// Used when weight_profile is Explicit.
    std::vector<double> mu;
    std::vector<ConstraintMode> constraints{ConstraintMode::PerNode};
    std::vector<Method> methods{Method::Wmmse};
    RobustSettings robust;
    int trials = 100;
    std::uint64_t master_seed = 1;
    OptimizerConfig optimizer;
    GradientConfig gradient;
    /// Worker threads; 0 picks the hardware concurrency.
    int threads = 0;
    std::string output;

    RateWeights rate_weights() const;
    void validate() const;
};

/// Applies one `key = value` setting. Throws std::invalid_argument for an
/// unknown key or a malformed value.
void apply_setting(ExperimentSpec &spec, std::string_view key, std::string_view value);

/// Parses a flat key/value configuration on top of `base`. Blank lines and
/// lines starting with '#' are ignored.
ExperimentSpec parse_spec(std::string_view text, ExperimentSpec base = {});
ExperimentSpec load_spec_file(const std::string &path, ExperimentSpec base = {});

/// Degrees-of-freedom heuristic M + N >= (K + 1) d for a symmetric network.
bool dof_feasible(const NetworkDims &dims);

struct ResultRow
{
    double snr_db = 0.0;
    Method method = Method::Wmmse;
    ConstraintMode constraint = ConstraintMode::PerNode;
    bool robust = false;
    double mean_wsr = 0.0;
    double std_error = 0.0;
    double mean_iterations = 0.0;
    long clamp_count = 0;
    int failed_trials = 0;
};

struct ResultTable
{
    std::vector<ResultRow> rows;

    const ResultRow *find(double snr_db, Method method, ConstraintMode constraint, bool robust = false) const;
};

/// Seeded Monte Carlo sweep. Every trial derives its channels, mismatch and
/// initializations from (master_seed, trial index) alone, so the table is
/// identical for any thread count and execution order.
ResultTable run_experiment(const ExperimentSpec &spec);

std::string format_csv(const ResultTable &table);
void emit_csv(const ResultTable &table, const std::string &path);
ResultTable parse_csv(std::string_view text);

std::string format_summary(const ResultTable &table);

struct ComplexitySweep
{
    int k_min = 2;
    int k_max = 8;
    int M = 5;
    int N = 5;
    int d = 2;
    int I1 = 10;
    int I2 = 10;
    int I3 = 10;
};

/// Rows of (K, method, total_flops, total_feedback) for each K in the sweep.
std::string complexity_curves_csv(const ComplexitySweep &sweep);
void emit_complexity_curves(const ComplexitySweep &sweep, const std::string &path);

/// Writes text to path, throwing std::runtime_error with the path on failure.
void write_text_file(const std::string &path, const std::string &text);

} // namespace wmmse
