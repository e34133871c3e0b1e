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

#include "wmmse/channel.hpp"

#include <cmath>

namespace wmmse {

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t h = mix64(seed);
    for (std::uint64_t p : path)
        h = mix64(h ^ mix64(p + 0x632be59bd9b4e019ULL));
    return h;
}

std::mt19937_64 make_engine(std::uint64_t seed, Stream tag, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t h = derive_seed(seed, {static_cast<std::uint64_t>(tag)});
    for (std::uint64_t p : path)
        h = derive_seed(h, {p});
    return std::mt19937_64(h);
}

CMatrix complex_gaussian(std::mt19937_64 &engine, int rows, int cols, double variance)
{
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = std::sqrt(variance / 2.0);
    CMatrix X(rows, cols);
    // Column-major fill order is part of the reproducibility contract.
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
        {
            const double re = normal(engine);
            const double im = normal(engine);
            X(r, c) = cdouble(scale * re, scale * im);
        }
    return X;
}

ChannelSet generate_channels(const NetworkDims &dims, double sigma_h_sq, std::uint64_t seed)
{
    ChannelSet channels(dims, sigma_h_sq);
    for (int j = 0; j < dims.K; ++j)
        for (int i = 0; i < dims.K; ++i)
        {
            auto engine = make_engine(seed, Stream::Channel, {static_cast<std::uint64_t>(j * dims.K + i)});
            channels.link(j, i) = complex_gaussian(engine, dims.N, dims.M, sigma_h_sq);
        }
    return channels;
}

MismatchedChannels apply_mismatch(const ChannelSet &channels, double sigma_delta_sq, std::uint64_t seed)
{
    if (!(sigma_delta_sq >= 0.0))
        throw std::invalid_argument("mismatch variance must be nonnegative");
    MismatchedChannels out{channels, channels, sigma_delta_sq};
    if (sigma_delta_sq == 0.0)
        return out;
    const auto &dims = channels.dims();
    for (int j = 0; j < dims.K; ++j)
        for (int i = 0; i < dims.K; ++i)
        {
            auto engine = make_engine(seed, Stream::Mismatch, {static_cast<std::uint64_t>(j * dims.K + i)});
            out.estimated_channels.link(j, i) += complex_gaussian(engine, dims.N, dims.M, sigma_delta_sq);
        }
    return out;
}

double snr_to_sigma_h(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

} // namespace wmmse
