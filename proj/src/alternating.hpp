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

#include "wmmse/optimizer.hpp"

namespace wmmse::detail {

enum class WeightRule
{
    /// W_k = (mu_k / ln 2) E_k^{-1}
    RateMatched,
    /// W_k = I_d
    Identity,
};

/// One alternating-optimization run (with restarts) over either the nominal
/// or the loaded (robust) filter model. `loading_variance` is zero for the
/// nominal model.
OptimizerResult alternating_run(const ChannelSet &channels, double loading_variance, const RateWeights &mu,
                                const PowerConstraint &constraint, const OptimizerConfig &config, WeightRule rule);

} // namespace wmmse::detail
