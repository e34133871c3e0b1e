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

// Shared kernels for the nominal and robust filter algebra. The nominal
// operations are the robust ones with zero diagonal loading.

#include "wmmse/filters.hpp"

namespace wmmse::detail {

/// (1 + loading) I_N + sum_i H_ki V_i V_i^H H_ki^H, skipping i == k unless include_self.
CMatrix received_cov(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                     bool include_self);

CMatrix receiver(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                 Diagnostics *diag);

CMatrix error_matrix(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                     Diagnostics *diag);

/// log2 det(C_k) - log2 det(Phi_k) with the given receive loading.
double rate_bits(const ChannelSet &channels, const std::vector<CMatrix> &precoders, int k, double loading,
                 Diagnostics *diag);

SumPowerPrecoders sum_power(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                            const std::vector<CMatrix> &weights, double total_power, double loading,
                            Diagnostics *diag);

PerNodePrecoder per_node(const ChannelSet &channels, const std::vector<CMatrix> &receivers,
                         const std::vector<CMatrix> &weights, int k, double budget, double tol, double loading);

void check_user(const ChannelSet &channels, int k);

} // namespace wmmse::detail
