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

#include "wmmse/types.hpp"

#include <algorithm>
#include <cmath>

namespace wmmse {

void NetworkDims::validate() const
{
    if (K < 1 || M < 1 || N < 1 || d < 1)
        throw std::invalid_argument("network dimensions must be positive");
    if (d > std::min(M, N))
        throw std::invalid_argument("stream count d must not exceed min(M, N)");
}

ChannelSet::ChannelSet(NetworkDims dims, double sigma_h_sq) : dims_(dims), sigma_h_sq_(sigma_h_sq)
{
    dims_.validate();
    if (!(sigma_h_sq >= 0.0))
        throw std::invalid_argument("channel variance must be nonnegative");
    links_.assign(static_cast<std::size_t>(dims.K * dims.K), CMatrix::Zero(dims.N, dims.M));
}

CMatrix &ChannelSet::link(int dest, int source)
{
    if (dest < 0 || dest >= dims_.K || source < 0 || source >= dims_.K)
        throw std::out_of_range("link index out of range");
    return links_[static_cast<std::size_t>(dest * dims_.K + source)];
}

const CMatrix &ChannelSet::link(int dest, int source) const
{
    if (dest < 0 || dest >= dims_.K || source < 0 || source >= dims_.K)
        throw std::out_of_range("link index out of range");
    return links_[static_cast<std::size_t>(dest * dims_.K + source)];
}

bool ChannelSet::operator==(const ChannelSet &other) const
{
    if (!(dims_ == other.dims_) || sigma_h_sq_ != other.sigma_h_sq_ || links_.size() != other.links_.size())
        return false;
    for (std::size_t n = 0; n < links_.size(); ++n)
        if (links_[n] != other.links_[n])
            return false;
    return true;
}

RateWeights::RateWeights(std::vector<double> values) : mu(std::move(values))
{
    if (mu.empty())
        throw std::invalid_argument("rate weights must not be empty");
    for (double m : mu)
        if (!(m > 0.0) || !std::isfinite(m))
            throw std::invalid_argument("rate weights must be strictly positive");
}

RateWeights RateWeights::equal(int K) { return RateWeights(std::vector<double>(static_cast<std::size_t>(K), 1.0)); }

RateWeights RateWeights::favor_first(int K, double first, double rest)
{
    std::vector<double> mu(static_cast<std::size_t>(K), rest);
    mu[0] = first;
    return RateWeights(std::move(mu));
}

void validate_constraint(const PowerConstraint &constraint, int K)
{
    if (const auto *sum = std::get_if<SumPower>(&constraint))
    {
        if (!(sum->total > 0.0) || !std::isfinite(sum->total))
            throw std::invalid_argument("sum power budget must be positive");
        return;
    }
    const auto &node = std::get<PerNodePower>(constraint);
    if (static_cast<int>(node.budgets.size()) != K)
        throw std::invalid_argument("per-node budget count must equal K");
    for (double p : node.budgets)
        if (!(p > 0.0) || !std::isfinite(p))
            throw std::invalid_argument("per-node power budgets must be positive");
}

double user_budget(const PowerConstraint &constraint, int K, int k)
{
    if (const auto *sum = std::get_if<SumPower>(&constraint))
        return sum->total / K;
    return std::get<PerNodePower>(constraint).budgets.at(static_cast<std::size_t>(k));
}

std::string constraint_name(const PowerConstraint &constraint)
{
    return std::holds_alternative<SumPower>(constraint) ? "sum" : "pernode";
}

double total_power(const std::vector<CMatrix> &precoders)
{
    double p = 0.0;
    for (const auto &V : precoders)
        p += power_of(V);
    return p;
}

} // namespace wmmse
