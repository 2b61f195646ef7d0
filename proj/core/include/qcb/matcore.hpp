// Copyright 2026 The qcb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCB_MATCORE_HPP
#define QCB_MATCORE_HPP

#include <complex>

#include <Eigen/Dense>

#include "qcb/errors.hpp"

namespace qcb {

/// Dense complex matrix, the working representation for Hamiltonians,
/// propagators, density matrices and observables. Sized for N up to ~16.
using ComplexMatrix = Eigen::MatrixXcd;

/// Default tolerance for Hermiticity checks (max-entry norm of H - H^dag).
inline constexpr double kDefaultHermitianTol = 1e-10;

/// Default tolerance for unitarity checks (max-entry norm of U^dag U - I).
/// Looser than the Hermiticity default so that long step products pass.
inline constexpr double kDefaultUnitaryTol = 1e-9;

/// Eigendecomposition of a Hermitian matrix. `values` are sorted
/// non-increasing; column k of `vectors` is the unit eigenvector for
/// values[k]. Within a degenerate eigenvalue group the columns are
/// phase-fixed (largest-modulus entry real positive) and sorted
/// lexicographically so the output is reproducible.
struct EigDecomposition {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

/// Max absolute entry of M.
double max_abs(const ComplexMatrix& M);

/// Max-entry norm of H - H^dag.
double hermiticity_defect(const ComplexMatrix& H);

bool is_hermitian(const ComplexMatrix& H, double tol = kDefaultHermitianTol);
bool is_unitary(const ComplexMatrix& U, double tol = kDefaultUnitaryTol);

/// Throws NotHermitian if the defect of H exceeds tol, DimensionMismatch if
/// H is not square or is empty.
void require_hermitian(const ComplexMatrix& H, double tol,
                       const std::string& what);

/// Eigendecomposition of a Hermitian matrix with deterministic ordering.
EigDecomposition hermitian_eig(const ComplexMatrix& H,
                               double tol = kDefaultHermitianTol);

/// exp(-i H dt), computed exactly through the eigendecomposition of H
/// (hbar = 1). Always unitary up to round-off.
ComplexMatrix expm_unitary(const ComplexMatrix& H, double dt,
                           double tol = kDefaultHermitianTol);

/// AB - BA.
ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B);

/// Hilbert-Schmidt inner product trace(A^dag B).
std::complex<double> hs_inner(const ComplexMatrix& A, const ComplexMatrix& B);

}  // namespace qcb

#endif  // QCB_MATCORE_HPP
