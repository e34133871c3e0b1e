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

#include "wmmse/types.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>

namespace wmmse {

/// Stream tags used when deriving generator seeds. Every consumer of
/// randomness keys its engine on (seed, tag, index...) so results do not
/// depend on the order in which trials or links are processed.
enum class Stream : std::uint64_t
{
    Channel = 1,
    Mismatch = 2,
    Symbols = 3,
    Init = 4,
    Trial = 5,
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Hashes a seed together with a path of indices into a new seed.
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Engine seeded from derive_seed(seed, {tag, path...}).
std::mt19937_64 make_engine(std::uint64_t seed, Stream tag, std::initializer_list<std::uint64_t> path = {});

/// Fills a rows x cols matrix with circularly-symmetric complex Gaussian
/// entries of total variance `variance` (variance/2 per real component).
CMatrix complex_gaussian(std::mt19937_64 &engine, int rows, int cols, double variance);

/// Estimated channels alongside the truth they were derived from.
struct MismatchedChannels
{
    ChannelSet true_channels;
    ChannelSet estimated_channels;
    double sigma_delta_sq = 0.0;
};

/// i.i.d. CN(0, sigma_h_sq) channels. Each link draws from its own stream,
/// so a link's realization only depends on (seed, link index), and scaling
/// sigma_h_sq scales every draw by the same factor.
ChannelSet generate_channels(const NetworkDims &dims, double sigma_h_sq, std::uint64_t seed);

/// estimated = true + Delta, Delta i.i.d. CN(0, sigma_delta_sq), drawn from
/// the Mismatch stream so it is independent of the channel draws even when
/// both use the same seed.
MismatchedChannels apply_mismatch(const ChannelSet &channels, double sigma_delta_sq, std::uint64_t seed);

/// sigma_h^2 = 10^(snr_db / 10); with unit noise, P_T = K and P_k = 1 this
/// is the per-link SNR for both power constraint modes.
double snr_to_sigma_h(double snr_db);

} // namespace wmmse
