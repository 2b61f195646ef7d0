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

#ifndef QCB_STATES_HPP
#define QCB_STATES_HPP

#include <vector>

#include "qcb/matcore.hpp"

namespace qcb {

/// Tolerance on |trace(rho) - 1|. Smaller deviations are renormalized away,
/// larger ones reject the state.
inline constexpr double kTraceTol = 1e-10;

/// Eigenvalues of a density matrix may undershoot zero by round-off up to
/// this amount; anything more negative rejects the state.
inline constexpr double kPsdTol = 1e-10;

/// Relative gap under which two observable eigenvalues belong to the same
/// degenerate eigenspace.
inline constexpr double kDegeneracyTol = 1e-8;

/// Hermitian, positive semidefinite, unit-trace matrix. Validated on
/// construction; a trace deviation below kTraceTol is renormalized.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix matrix,
                         double hermitian_tol = kDefaultHermitianTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
};

/// Hermitian operator with cached eigenstructure: full spectrum plus
/// eigenspace projectors grouped by the degeneracy tolerance.
class Observable {
 public:
  struct Eigenspace {
    double value;             // representative eigenvalue a_i (group mean)
    int multiplicity;         // d(i)
    ComplexMatrix projector;  // Hermitian idempotent onto E(a_i)
  };

  explicit Observable(ComplexMatrix matrix,
                      double hermitian_tol = kDefaultHermitianTol,
                      double degeneracy_tol = kDegeneracyTol);

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  /// Eigenvalues non-increasing, counted with multiplicity.
  const EigDecomposition& eig() const { return eig_; }
  /// Distinct eigenvalues with multiplicities and projectors, value-descending.
  const std::vector<Eigenspace>& eigenspaces() const { return eigenspaces_; }

 private:
  ComplexMatrix matrix_;
  EigDecomposition eig_;
  std::vector<Eigenspace> eigenspaces_;
};

/// Weights non-increasing and clamped to [0, 1]; column k of `states` is the
/// eigenstate carrying weights[k].
struct EnsembleDecomposition {
  Eigen::VectorXd weights;
  ComplexMatrix states;
};

EnsembleDecomposition ensemble_decomposition(const DensityMatrix& rho);

/// trace(A rho), checked real to within tol before the imaginary part is
/// discarded.
double expectation(const Observable& A, const DensityMatrix& rho,
                   double tol = kDefaultHermitianTol);

/// U rho U^dag. Throws NotUnitary if U fails the unitarity check.
DensityMatrix evolve_state(const DensityMatrix& rho0, const ComplexMatrix& U,
                           double unitary_tol = kDefaultUnitaryTol);

}  // namespace qcb

#endif  // QCB_STATES_HPP
