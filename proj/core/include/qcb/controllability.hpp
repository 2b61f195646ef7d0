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

#ifndef QCB_CONTROLLABILITY_HPP
#define QCB_CONTROLLABILITY_HPP

#include <utility>
#include <vector>

#include "qcb/bounds.hpp"
#include "qcb/dynamics.hpp"

namespace qcb {

/// Residual threshold, relative to the Frobenius norm of a candidate
/// bracket, above which the candidate counts as a new direction. Rank
/// decisions in floating point hinge on this value, so every public entry
/// point takes it as an explicit parameter.
inline constexpr double kDefaultClosureTol = 1e-8;

/// Basis and dimension of the Lie algebra generated by the skew-Hermitian
/// forms -i H_m of the supplied Hamiltonians.
struct LieClosureReport {
  int dimension = 0;
  /// Hilbert-Schmidt-orthonormal skew-Hermitian matrices spanning the closure.
  std::vector<ComplexMatrix> basis;
  /// Bracket rounds until no new direction appeared.
  int generations = 0;
  /// dimension == N^2.
  bool controllable = false;
};

/// Breadth-first bracket closure. Deterministic given the generator order.
LieClosureReport lie_closure(const std::vector<ComplexMatrix>& generators,
                             double tol = kDefaultClosureTol);

/// Rank test on the closure of {H0, H1..HM}: controllable iff the generated
/// algebra has dimension N^2.
std::pair<bool, LieClosureReport> is_completely_controllable(
    const ControlModel& model, double tol = kDefaultClosureTol);

/// Dimension of the ideal generated by the interaction Hamiltonians
/// {H1..HM} inside the closure of {H0..HM}. Complete controllability is
/// equivalent to this ideal having dimension N^2 - 1.
int control_ideal_dimension(const ControlModel& model,
                            double tol = kDefaultClosureTol);

/// Connected components of the coupling graph: an edge joins basis indices
/// i != j whenever any of H0, H1..HM has |entry(i,j)| > tol. Requires H0
/// diagonal in the model basis (throws BasisNotAdapted otherwise). Block
/// probabilities are filled from rho0 when supplied.
SubspacePartition detect_decoupling(const ControlModel& model, double tol,
                                    const DensityMatrix* rho0 = nullptr);

}  // namespace qcb

#endif  // QCB_CONTROLLABILITY_HPP
