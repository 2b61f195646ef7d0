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

#include "qcb/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qcb {

namespace {

// Relative gap below which two eigenvalues count as one degenerate group
// for the purpose of deterministic intra-group ordering.
constexpr double kTieGroupTol = 1e-10;

void require_square(const ComplexMatrix& M, const std::string& what) {
  if (M.rows() < 1 || M.rows() != M.cols()) {
    throw DimensionMismatch(what + ": expected a square matrix of dim >= 1, got " +
                            std::to_string(M.rows()) + "x" +
                            std::to_string(M.cols()));
  }
}

// Multiplies each column by a unit phase so its largest-modulus entry
// (first such index on ties) becomes real positive.
void fix_column_phases(ComplexMatrix& V) {
  for (Eigen::Index c = 0; c < V.cols(); ++c) {
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < V.rows(); ++r) {
      const double m = std::abs(V(r, c));
      if (m > best) {
        best = m;
        pivot = r;
      }
    }
    if (best > 0.0) {
      const std::complex<double> phase = std::conj(V(pivot, c)) / best;
      V.col(c) *= phase;
    }
  }
}

bool column_lex_less(const ComplexMatrix& V, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index r = 0; r < V.rows(); ++r) {
    const auto& x = V(r, a);
    const auto& y = V(r, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

double max_abs(const ComplexMatrix& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& H) {
  return max_abs(ComplexMatrix(H - H.adjoint()));
}

bool is_hermitian(const ComplexMatrix& H, double tol) {
  return H.rows() == H.cols() && hermiticity_defect(H) <= tol;
}

bool is_unitary(const ComplexMatrix& U, double tol) {
  if (U.rows() != U.cols()) return false;
  const ComplexMatrix D = U.adjoint() * U - ComplexMatrix::Identity(U.rows(), U.cols());
  return max_abs(D) <= tol;
}

void require_hermitian(const ComplexMatrix& H, double tol, const std::string& what) {
  require_square(H, what);
  const double defect = hermiticity_defect(H);
  if (defect > tol) {
    throw NotHermitian(what + ": matrix is not Hermitian (defect " +
                       std::to_string(defect) + " > tol " + std::to_string(tol) + ")");
  }
}

EigDecomposition hermitian_eig(const ComplexMatrix& H, double tol) {
  require_hermitian(H, tol, "hermitian_eig");
  const Eigen::Index n = H.rows();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ComplexMatrix(0.5 * (H + H.adjoint())));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver failed to converge");
  }

  // Eigen returns ascending order; flip to non-increasing.
  EigDecomposition eig;
  eig.values = solver.eigenvalues().reverse();
  eig.vectors = solver.eigenvectors().rowwise().reverse();

  fix_column_phases(eig.vectors);

  // Deterministic order inside each degenerate group.
  const double scale = std::max(1.0, max_abs(H));
  Eigen::Index lo = 0;
  while (lo < n) {
    Eigen::Index hi = lo + 1;
    while (hi < n && eig.values(hi - 1) - eig.values(hi) < kTieGroupTol * scale) ++hi;
    if (hi - lo > 1) {
      std::vector<Eigen::Index> order(static_cast<size_t>(hi - lo));
      std::iota(order.begin(), order.end(), lo);
      std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return column_lex_less(eig.vectors, a, b);
      });
      ComplexMatrix block(n, hi - lo);
      Eigen::VectorXd vals(hi - lo);
      for (Eigen::Index k = 0; k < hi - lo; ++k) {
        block.col(k) = eig.vectors.col(order[static_cast<size_t>(k)]);
        vals(k) = eig.values(order[static_cast<size_t>(k)]);
      }
      eig.vectors.middleCols(lo, hi - lo) = block;
      eig.values.segment(lo, hi - lo) = vals;
    }
    lo = hi;
  }
  return eig;
}

ComplexMatrix expm_unitary(const ComplexMatrix& H, double dt, double tol) {
  const EigDecomposition eig = hermitian_eig(H, tol);
  const Eigen::Index n = H.rows();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::exp(std::complex<double>(0.0, -eig.values(k) * dt));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix commutator(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != A.cols()) {
    throw DimensionMismatch("commutator: operands must be square and of equal dimension");
  }
  return A * B - B * A;
}

std::complex<double> hs_inner(const ComplexMatrix& A, const ComplexMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw DimensionMismatch("hs_inner: operands must have equal dimensions");
  }
  return (A.adjoint() * B).trace();
}

}  // namespace qcb
