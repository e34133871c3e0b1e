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

#include "wmmse/linalg.hpp"

#include <cmath>

namespace wmmse::linalg {

namespace {

constexpr double kRidge = 1e-12;

Eigen::LLT<CMatrix> factor(const CMatrix &A, Diagnostics *diag)
{
    Eigen::LLT<CMatrix> llt(A);
    if (llt.info() == Eigen::Success)
        return llt;
    if (diag)
        ++diag->ridge_uses;
    CMatrix ridged = A;
    ridged.diagonal().array() += kRidge;
    llt.compute(ridged);
    if (llt.info() != Eigen::Success)
        throw NumericalError("Cholesky factorization failed after ridge regularization");
    return llt;
}

} // namespace

CMatrix hermitize(const CMatrix &A) { return (A + A.adjoint()) * 0.5; }

double hermitian_asymmetry(const CMatrix &A)
{
    if (A.rows() != A.cols())
        return INFINITY;
    return (A - A.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix hpd_solve(const CMatrix &A, const CMatrix &B, Diagnostics *diag) { return factor(A, diag).solve(B); }

CMatrix hpd_inverse(const CMatrix &A, Diagnostics *diag)
{
    return hermitize(factor(A, diag).solve(CMatrix::Identity(A.rows(), A.cols())));
}

double hpd_logdet(const CMatrix &A, Diagnostics *diag)
{
    const auto llt = factor(A, diag);
    const CMatrix &L = llt.matrixLLT();
    double s = 0.0;
    for (Eigen::Index i = 0; i < L.rows(); ++i)
        s += std::log(L(i, i).real());
    return 2.0 * s;
}

bool is_hpd(const CMatrix &A, double tol)
{
    if (A.rows() != A.cols() || A.rows() == 0)
        return false;
    if (!A.allFinite() || hermitian_asymmetry(A) > tol)
        return false;
    Eigen::LLT<CMatrix> llt(hermitize(A));
    return llt.info() == Eigen::Success;
}

} // namespace wmmse::linalg
