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

#include <cstdint>
#include <string>
#include <vector>

namespace wmmse {

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationOptions
{
    int instances = 50;
    std::uint64_t seed = 2024;
};

/// Fast invariant checks over random instances: rate/error duality, power
/// monotonicity in the multiplier, constraint feasibility, alternating-loop
/// monotonicity, robust-to-nominal reduction, gradient consistency and the
/// feedback model.
std::vector<CheckResult> run_validation(const ValidationOptions &options = {});

} // namespace wmmse
