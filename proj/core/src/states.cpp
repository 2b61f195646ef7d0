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

#include "qcb/states.hpp"

#include <algorithm>
#include <cmath>

namespace qcb {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double hermitian_tol)
    : matrix_(std::move(matrix)) {
  try {
    require_hermitian(matrix_, hermitian_tol, "DensityMatrix");
  } catch (const NotHermitian& e) {
    throw InvalidState(e.what());
  }
  const double tr = matrix_.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw InvalidState("DensityMatrix: trace " + std::to_string(tr) +
                       " deviates from 1 by more than " + std::to_string(kTraceTol));
  }
  if (tr != 1.0) matrix_ /= tr;

  const EigDecomposition eig = hermitian_eig(matrix_, hermitian_tol);
  if (eig.values.minCoeff() < -kPsdTol) {
    throw InvalidState("DensityMatrix: negative eigenvalue " +
                       std::to_string(eig.values.minCoeff()));
  }
}

Observable::Observable(ComplexMatrix matrix, double hermitian_tol,
                       double degeneracy_tol)
    : matrix_(std::move(matrix)) {
  require_hermitian(matrix_, hermitian_tol, "Observable");
  eig_ = hermitian_eig(matrix_, hermitian_tol);

  const Eigen::Index n = matrix_.rows();
  const double gap = degeneracy_tol * std::max(1.0, max_abs(matrix_));
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n && eig_.values(hi - 1) - eig_.values(hi) < gap) ++hi;
    Eigenspace space;
    space.multiplicity = static_cast<int>(hi - lo);
    space.value = eig_.values.segment(lo, hi - lo).mean();
    const auto block = eig_.vectors.middleCols(lo, hi - lo);
    space.projector = block * block.adjoint();
    eigenspaces_.push_back(std::move(space));
    lo = hi;
  }
}

EnsembleDecomposition ensemble_decomposition(const DensityMatrix& rho) {
  EigDecomposition eig = hermitian_eig(rho.matrix());
  EnsembleDecomposition out;
  out.weights = eig.values.cwiseMax(0.0).cwiseMin(1.0);
  out.states = std::move(eig.vectors);
  return out;
}

double expectation(const Observable& A, const DensityMatrix& rho, double tol) {
  if (A.dim() != rho.dim()) {
    throw DimensionMismatch("expectation: observable dim " + std::to_string(A.dim()) +
                            " vs state dim " + std::to_string(rho.dim()));
  }
  const std::complex<double> tr = (A.matrix() * rho.matrix()).trace();
  if (std::abs(tr.imag()) > tol) {
    throw NonRealExpectation("expectation: imaginary part " +
                             std::to_string(tr.imag()) + " exceeds tol");
  }
  return tr.real();
}

DensityMatrix evolve_state(const DensityMatrix& rho0, const ComplexMatrix& U,
                           double unitary_tol) {
  if (U.rows() != rho0.dim() || U.cols() != rho0.dim()) {
    throw DimensionMismatch("evolve_state: propagator dim mismatch");
  }
  if (!is_unitary(U, unitary_tol)) {
    throw NotUnitary("evolve_state: matrix fails the unitarity check");
  }
  return DensityMatrix(U * rho0.matrix() * U.adjoint());
}

}  // namespace qcb
