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

#ifndef QCB_BOUNDS_HPP
#define QCB_BOUNDS_HPP

#include <utility>
#include <vector>

#include "qcb/states.hpp"

namespace qcb {

/// Extremal values of trace(A U rho U^dag) over all unitaries U.
///
/// pairing_max/pairing_min record which observable eigenvector slot each
/// ensemble state (weights non-increasing) must be mapped onto to attain the
/// bound; (k, j) sends ensemble state k onto eigenvector j of A, both
/// 0-based with eigenvalues non-increasing.
struct KinematicalBounds {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<std::pair<int, int>> pairing_max;
  std::vector<std::pair<int, int>> pairing_min;
};

enum class Direction { Max, Min };

enum class Attainment { AtUpper, AtLower, Interior };

/// Classification of an expectation value against the kinematical bounds.
/// Gaps are reported in units of the observable and clamped at zero.
struct AttainmentResult {
  Attainment kind = Attainment::Interior;
  double gap_to_upper = 0.0;
  double gap_to_lower = 0.0;
};

/// Disjoint index blocks covering 0..N-1 plus the probability carried by
/// each block. Used for systems whose Hamiltonians are block-diagonal.
struct SubspacePartition {
  std::vector<std::vector<int>> blocks;
  std::vector<double> block_probabilities;  // empty when no state was supplied

  /// Throws ValidationError unless blocks are disjoint, nonempty and cover
  /// 0..dim-1.
  void validate(Eigen::Index dim) const;
};

/// Bounds from sorted-spectrum pairing: upper pairs the k-th largest weight
/// with the k-th largest eigenvalue, lower with the k-th smallest.
KinematicalBounds kinematical_bounds(const Observable& A, const DensityMatrix& rho0);

/// Unitary realizing the requested bound: maps the k-th ensemble state onto
/// the k-th observable eigenvector (descending for Max, ascending for Min).
ComplexMatrix optimal_unitary(const Observable& A, const DensityMatrix& rho0,
                              Direction direction);

/// Classifies expectation(A, rho) against kinematical_bounds(A, rho) within
/// tol. When the bounds collapse, AtUpper takes precedence.
AttainmentResult check_attainment(const Observable& A, const DensityMatrix& rho,
                                  double tol);

/// Tighter bounds for a system that never mixes the given blocks: per-block
/// sorted-spectrum pairing of the restricted observable P_i A P_i against
/// the block weights of rho0. Any number of blocks is supported.
///
/// Throws NotBlockDiagonal if rho0 has an off-block entry above tol.
KinematicalBounds decoupled_bounds(const Observable& A, const DensityMatrix& rho0,
                                   const SubspacePartition& partition,
                                   double tol = kDefaultHermitianTol);

const char* to_string(Attainment a);

}  // namespace qcb

#endif  // QCB_BOUNDS_HPP
