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

#include "qcb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qcb {

void SubspacePartition::validate(Eigen::Index dim) const {
  std::vector<char> seen(static_cast<size_t>(dim), 0);
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw ValidationError("SubspacePartition: empty block");
    }
    for (int idx : block) {
      if (idx < 0 || idx >= dim) {
        throw ValidationError("SubspacePartition: index " + std::to_string(idx) +
                              " outside 0.." + std::to_string(dim - 1));
      }
      if (seen[static_cast<size_t>(idx)]) {
        throw ValidationError("SubspacePartition: index " + std::to_string(idx) +
                              " appears in two blocks");
      }
      seen[static_cast<size_t>(idx)] = 1;
    }
  }
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (!seen[static_cast<size_t>(i)]) {
      throw ValidationError("SubspacePartition: index " + std::to_string(i) +
                            " not covered by any block");
    }
  }
}

KinematicalBounds kinematical_bounds(const Observable& A, const DensityMatrix& rho0) {
  if (A.dim() != rho0.dim()) {
    throw DimensionMismatch("kinematical_bounds: observable dim " +
                            std::to_string(A.dim()) + " vs state dim " +
                            std::to_string(rho0.dim()));
  }
  const Eigen::Index n = A.dim();
  const Eigen::VectorXd& lambda = A.eig().values;            // non-increasing
  const Eigen::VectorXd w = ensemble_decomposition(rho0).weights;  // non-increasing

  KinematicalBounds kb;
  for (Eigen::Index k = 0; k < n; ++k) {
    kb.upper += lambda(k) * w(k);
    kb.lower += lambda(n - 1 - k) * w(k);
    kb.pairing_max.emplace_back(static_cast<int>(k), static_cast<int>(k));
    kb.pairing_min.emplace_back(static_cast<int>(k), static_cast<int>(n - 1 - k));
  }
  return kb;
}

ComplexMatrix optimal_unitary(const Observable& A, const DensityMatrix& rho0,
                              Direction direction) {
  if (A.dim() != rho0.dim()) {
    throw DimensionMismatch("optimal_unitary: observable dim " +
                            std::to_string(A.dim()) + " vs state dim " +
                            std::to_string(rho0.dim()));
  }
  const Eigen::Index n = A.dim();
  const EnsembleDecomposition ens = ensemble_decomposition(rho0);
  const ComplexMatrix& target = A.eig().vectors;

  ComplexMatrix U = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index slot = direction == Direction::Max ? k : n - 1 - k;
    U += target.col(slot) * ens.states.col(k).adjoint();
  }
  return U;
}

AttainmentResult check_attainment(const Observable& A, const DensityMatrix& rho,
                                  double tol) {
  const KinematicalBounds kb = kinematical_bounds(A, rho);
  const double value = expectation(A, rho);

  AttainmentResult result;
  result.gap_to_upper = std::max(0.0, kb.upper - value);
  result.gap_to_lower = std::max(0.0, value - kb.lower);
  if (kb.upper - value <= tol) {
    result.kind = Attainment::AtUpper;
  } else if (value - kb.lower <= tol) {
    result.kind = Attainment::AtLower;
  } else {
    result.kind = Attainment::Interior;
  }
  return result;
}

KinematicalBounds decoupled_bounds(const Observable& A, const DensityMatrix& rho0,
                                   const SubspacePartition& partition, double tol) {
  if (A.dim() != rho0.dim()) {
    throw DimensionMismatch("decoupled_bounds: observable dim " +
                            std::to_string(A.dim()) + " vs state dim " +
                            std::to_string(rho0.dim()));
  }
  const Eigen::Index n = A.dim();
  partition.validate(n);

  // Block membership map, then reject off-block population in rho0.
  std::vector<int> block_of(static_cast<size_t>(n), -1);
  for (size_t b = 0; b < partition.blocks.size(); ++b) {
    for (int idx : partition.blocks[b]) block_of[static_cast<size_t>(idx)] = static_cast<int>(b);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (block_of[static_cast<size_t>(i)] != block_of[static_cast<size_t>(j)] &&
          std::abs(rho0.matrix()(i, j)) > tol) {
        throw NotBlockDiagonal("decoupled_bounds: rho0 entry (" + std::to_string(i) +
                               "," + std::to_string(j) + ") crosses blocks");
      }
    }
  }

  KinematicalBounds kb;
  int global_state_slot = 0;
  int global_eig_base = 0;
  for (const auto& block : partition.blocks) {
    const Eigen::Index nb = static_cast<Eigen::Index>(block.size());
    ComplexMatrix a_block(nb, nb);
    ComplexMatrix rho_block(nb, nb);
    for (Eigen::Index r = 0; r < nb; ++r) {
      for (Eigen::Index c = 0; c < nb; ++c) {
        a_block(r, c) = A.matrix()(block[static_cast<size_t>(r)], block[static_cast<size_t>(c)]);
        rho_block(r, c) = rho0.matrix()(block[static_cast<size_t>(r)], block[static_cast<size_t>(c)]);
      }
    }
    // Block weights are eigenvalues of the rho block; they sum to the block
    // probability, not to one, so Theorem-style sums can be taken directly.
    Eigen::VectorXd lambda = hermitian_eig(a_block, tol).values;
    Eigen::VectorXd w = hermitian_eig(rho_block, tol).values.cwiseMax(0.0);

    for (Eigen::Index k = 0; k < nb; ++k) {
      kb.upper += lambda(k) * w(k);
      kb.lower += lambda(nb - 1 - k) * w(k);
      kb.pairing_max.emplace_back(global_state_slot + static_cast<int>(k),
                                  global_eig_base + static_cast<int>(k));
      kb.pairing_min.emplace_back(global_state_slot + static_cast<int>(k),
                                  global_eig_base + static_cast<int>(nb - 1 - k));
    }
    global_state_slot += static_cast<int>(nb);
    global_eig_base += static_cast<int>(nb);
  }
  return kb;
}

const char* to_string(Attainment a) {
  switch (a) {
    case Attainment::AtUpper:
      return "AtUpper";
    case Attainment::AtLower:
      return "AtLower";
    case Attainment::Interior:
      return "Interior";
  }
  return "Interior";
}

}  // namespace qcb
