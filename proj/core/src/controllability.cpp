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

#include "qcb/controllability.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <string>

namespace qcb {

namespace {

// Candidates below these Frobenius norms are treated as numerically zero:
// raw generators against the first, brackets of unit-norm basis elements
// against the second.
constexpr double kGeneratorFloor = 1e-15;
constexpr double kBracketFloor = 1e-13;

ComplexMatrix skew_part(const ComplexMatrix& M) {
  return 0.5 * (M - M.adjoint());
}

// Projects the candidate out of span(basis) over the reals and appends the
// unit residual when it exceeds tol relative to the candidate's norm.
bool try_add_direction(std::vector<ComplexMatrix>& basis, ComplexMatrix candidate,
                       double tol, double floor) {
  const double scale = candidate.norm();
  if (scale < floor) return false;
  // Two Gram-Schmidt passes; u(N) is a real vector space, so coefficients
  // are the real parts of the Hilbert-Schmidt products.
  for (int pass = 0; pass < 2; ++pass) {
    for (const ComplexMatrix& b : basis) {
      candidate -= hs_inner(b, candidate).real() * b;
    }
  }
  if (candidate.norm() <= tol * scale) return false;
  candidate = skew_part(candidate);
  candidate /= candidate.norm();
  basis.push_back(std::move(candidate));
  return true;
}

std::vector<ComplexMatrix> skew_generators(const std::vector<ComplexMatrix>& hams,
                                           const std::string& what) {
  if (hams.empty()) {
    throw ValidationError(what + ": at least one generator required");
  }
  const Eigen::Index n = hams[0].rows();
  std::vector<ComplexMatrix> out;
  out.reserve(hams.size());
  const std::complex<double> minus_i(0.0, -1.0);
  for (size_t k = 0; k < hams.size(); ++k) {
    require_hermitian(hams[k], kDefaultHermitianTol,
                      what + " generator " + std::to_string(k));
    if (hams[k].rows() != n) {
      throw DimensionMismatch(what + ": generator " + std::to_string(k) +
                              " has dim " + std::to_string(hams[k].rows()) +
                              ", expected " + std::to_string(n));
    }
    out.push_back(minus_i * hams[k]);
  }
  return out;
}

}  // namespace

LieClosureReport lie_closure(const std::vector<ComplexMatrix>& generators, double tol) {
  const std::vector<ComplexMatrix> gens = skew_generators(generators, "lie_closure");
  const Eigen::Index n = generators[0].rows();
  const int full_dim = static_cast<int>(n * n);

  LieClosureReport report;
  for (const ComplexMatrix& g : gens) {
    try_add_direction(report.basis, g, tol, kGeneratorFloor);
  }

  size_t frontier_begin = 0;
  size_t frontier_end = report.basis.size();
  while (frontier_begin < frontier_end &&
         static_cast<int>(report.basis.size()) < full_dim) {
    for (size_t i = frontier_begin;
         i < frontier_end && static_cast<int>(report.basis.size()) < full_dim; ++i) {
      for (size_t j = 0; j < i && static_cast<int>(report.basis.size()) < full_dim;
           ++j) {
        try_add_direction(report.basis,
                          commutator(report.basis[i], report.basis[j]), tol,
                          kBracketFloor);
      }
    }
    if (report.basis.size() > frontier_end) ++report.generations;
    frontier_begin = frontier_end;
    frontier_end = report.basis.size();
  }

  report.dimension = static_cast<int>(report.basis.size());
  report.controllable = report.dimension == full_dim;
  return report;
}

std::pair<bool, LieClosureReport> is_completely_controllable(const ControlModel& model,
                                                             double tol) {
  std::vector<ComplexMatrix> gens;
  gens.push_back(model.h0());
  gens.insert(gens.end(), model.controls().begin(), model.controls().end());
  LieClosureReport report = lie_closure(gens, tol);
  const bool verdict = report.controllable;
  return {verdict, std::move(report)};
}

int control_ideal_dimension(const ControlModel& model, double tol) {
  std::vector<ComplexMatrix> hams;
  hams.push_back(model.h0());
  hams.insert(hams.end(), model.controls().begin(), model.controls().end());
  std::vector<ComplexMatrix> gens = skew_generators(hams, "control_ideal_dimension");
  for (ComplexMatrix& g : gens) {
    const double norm = g.norm();
    if (norm > kGeneratorFloor) g /= norm;
  }
  const Eigen::Index n = model.dim();
  const int full_dim = static_cast<int>(n * n);

  // Seed with the interaction directions, then close under bracketing with
  // every generator of the parent algebra. By the Jacobi identity this
  // yields the ideal generated by H1..HM inside the closure of H0..HM.
  std::vector<ComplexMatrix> basis;
  for (size_t k = 1; k < gens.size(); ++k) {
    try_add_direction(basis, gens[k], tol, kGeneratorFloor);
  }

  size_t frontier_begin = 0;
  size_t frontier_end = basis.size();
  while (frontier_begin < frontier_end && static_cast<int>(basis.size()) < full_dim) {
    for (size_t i = frontier_begin;
         i < frontier_end && static_cast<int>(basis.size()) < full_dim; ++i) {
      for (const ComplexMatrix& g : gens) {
        try_add_direction(basis, commutator(g, basis[i]), tol, kBracketFloor);
        if (static_cast<int>(basis.size()) >= full_dim) break;
      }
    }
    frontier_begin = frontier_end;
    frontier_end = basis.size();
  }
  return static_cast<int>(basis.size());
}

SubspacePartition detect_decoupling(const ControlModel& model, double tol,
                                    const DensityMatrix* rho0) {
  const Eigen::Index n = model.dim();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && std::abs(model.h0()(i, j)) > tol) {
        throw BasisNotAdapted(
            "detect_decoupling: h0 has off-diagonal entry at (" + std::to_string(i) +
            "," + std::to_string(j) + "); change to a basis where h0 is diagonal");
      }
    }
  }
  if (rho0 && rho0->dim() != n) {
    throw DimensionMismatch("detect_decoupling: rho0 dim mismatch");
  }

  std::vector<std::vector<Eigen::Index>> adjacency(static_cast<size_t>(n));
  auto add_edges = [&](const ComplexMatrix& h) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        if (std::abs(h(i, j)) > tol || std::abs(h(j, i)) > tol) {
          adjacency[static_cast<size_t>(i)].push_back(j);
          adjacency[static_cast<size_t>(j)].push_back(i);
        }
      }
    }
  };
  add_edges(model.h0());
  for (const ComplexMatrix& hm : model.controls()) add_edges(hm);

  SubspacePartition partition;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (Eigen::Index seed = 0; seed < n; ++seed) {
    if (visited[static_cast<size_t>(seed)]) continue;
    std::vector<int> block;
    std::deque<Eigen::Index> queue{seed};
    visited[static_cast<size_t>(seed)] = 1;
    while (!queue.empty()) {
      const Eigen::Index v = queue.front();
      queue.pop_front();
      block.push_back(static_cast<int>(v));
      for (Eigen::Index w : adjacency[static_cast<size_t>(v)]) {
        if (!visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    partition.blocks.push_back(std::move(block));
  }

  if (rho0) {
    for (const auto& block : partition.blocks) {
      double p = 0.0;
      for (int idx : block) p += rho0->matrix()(idx, idx).real();
      partition.block_probabilities.push_back(p);
    }
  }
  return partition;
}

}  // namespace qcb
