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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wmmse {

using cdouble = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Raised when an input admits no meaningful filter (e.g. an all-zero
/// precoder set that cannot be normalized).
class DegenerateInput : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a factorization fails even after ridge regularization.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Network dimensions: K user pairs, M transmit and N receive antennas, d streams.
struct NetworkDims
{
    int K = 1;
    int M = 1;
    int N = 1;
    int d = 1;

    void validate() const;
    bool operator==(const NetworkDims &) const = default;
};

/// K x K grid of N x M channel matrices. link(j, i) is the channel from
/// source i to destination j.
class ChannelSet
{
  public:
    ChannelSet() = default;
    ChannelSet(NetworkDims dims, double sigma_h_sq);

    const NetworkDims &dims() const { return dims_; }
    int users() const { return dims_.K; }
    double sigma_h_sq() const { return sigma_h_sq_; }

    CMatrix &link(int dest, int source);
    const CMatrix &link(int dest, int source) const;

    std::vector<CMatrix> &links() { return links_; }
    const std::vector<CMatrix> &links() const { return links_; }

    bool operator==(const ChannelSet &other) const;

  private:
    NetworkDims dims_{};
    double sigma_h_sq_ = 0.0;
    std::vector<CMatrix> links_;
};

/// Per-user filter set: precoders V_k (M x d), receivers U_k (d x N),
/// MSE weights W_k (d x d).
struct TransceiverState
{
    std::vector<CMatrix> precoders;
    std::vector<CMatrix> receivers;
    std::vector<CMatrix> weights;
};

/// Positive rate weights mu_k.
struct RateWeights
{
    std::vector<double> mu;

    RateWeights() = default;
    explicit RateWeights(std::vector<double> values);

    static RateWeights equal(int K);
    /// mu_1 = first, mu_k = rest for k > 1.
    static RateWeights favor_first(int K, double first = 2.0, double rest = 0.25);

    std::size_t size() const { return mu.size(); }
    double operator[](std::size_t k) const { return mu[k]; }
};

struct SumPower
{
    double total = 1.0;
};

struct PerNodePower
{
    std::vector<double> budgets;
};

using PowerConstraint = std::variant<SumPower, PerNodePower>;

/// Throws std::invalid_argument unless every budget is positive and the
/// per-node vector has exactly K entries.
void validate_constraint(const PowerConstraint &constraint, int K);

/// Budget available to user k when every user starts from an equal split.
double user_budget(const PowerConstraint &constraint, int K, int k);

std::string constraint_name(const PowerConstraint &constraint);

/// Counters for numerical fallbacks taken inside the filter algebra.
struct Diagnostics
{
    int ridge_uses = 0;
};

/// Tr(X X^H) = squared Frobenius norm.
inline double power_of(const CMatrix &X) { return X.squaredNorm(); }

double total_power(const std::vector<CMatrix> &precoders);

} // namespace wmmse
