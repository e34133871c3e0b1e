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

namespace wmmse::linalg {

/// Returns (A + A^H) / 2.
CMatrix hermitize(const CMatrix &A);

/// Largest element-wise |A - A^H|.
double hermitian_asymmetry(const CMatrix &A);

/// Solves A X = B for Hermitian positive definite A. Falls back to a
/// 1e-12 ridge when the Cholesky factorization fails; each fallback bumps
/// diag->ridge_uses. Throws NumericalError if the ridged matrix still fails.
CMatrix hpd_solve(const CMatrix &A, const CMatrix &B, Diagnostics *diag = nullptr);

CMatrix hpd_inverse(const CMatrix &A, Diagnostics *diag = nullptr);

/// Natural log-determinant of a Hermitian positive definite matrix.
double hpd_logdet(const CMatrix &A, Diagnostics *diag = nullptr);

/// True if A is Hermitian within tol and admits a Cholesky factorization.
bool is_hpd(const CMatrix &A, double tol = 1e-10);

} // namespace wmmse::linalg
