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

#ifndef QCB_DYNAMICS_HPP
#define QCB_DYNAMICS_HPP

#include <string>
#include <vector>

#include "qcb/states.hpp"

namespace qcb {

/// Control-linear system H(f) = H0 + sum_m f_m H_m with hbar = 1. All
/// matrices are validated Hermitian and of equal dimension on construction.
class ControlModel {
 public:
  ControlModel(ComplexMatrix h0, std::vector<ComplexMatrix> controls,
               std::vector<std::string> labels = {},
               double hermitian_tol = kDefaultHermitianTol);

  const ComplexMatrix& h0() const { return h0_; }
  const std::vector<ComplexMatrix>& controls() const { return controls_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Eigen::Index dim() const { return h0_.rows(); }
  int num_controls() const { return static_cast<int>(controls_.size()); }

 private:
  ComplexMatrix h0_;
  std::vector<ComplexMatrix> controls_;
  std::vector<std::string> labels_;
};

/// Piecewise-constant control amplitudes on a uniform grid over [t0, tF].
/// Row s of `amplitudes` holds f_1..f_M on interval s. Amplitudes must be
/// finite and tF > t0.
class PulseSchedule {
 public:
  PulseSchedule(double t0, double tF, Eigen::MatrixXd amplitudes);

  double t0() const { return t0_; }
  double tF() const { return tF_; }
  Eigen::Index steps() const { return amplitudes_.rows(); }
  Eigen::Index num_controls() const { return amplitudes_.cols(); }
  double dt() const { return (tF_ - t0_) / static_cast<double>(steps()); }
  const Eigen::MatrixXd& amplitudes() const { return amplitudes_; }

 private:
  double t0_;
  double tF_;
  Eigen::MatrixXd amplitudes_;
};

/// Total propagator U(tF, t0): the time-ordered product of one exact
/// exponential per interval, latest interval applied leftmost.
ComplexMatrix propagate(const ControlModel& model, const PulseSchedule& pulses);

/// Expectation of A along the evolution, sampled at the S+1 grid times.
struct ExpectationSeries {
  Eigen::VectorXd times;
  Eigen::VectorXd values;
};

ExpectationSeries simulate_expectation(const ControlModel& model,
                                       const PulseSchedule& pulses,
                                       const DensityMatrix& rho0,
                                       const Observable& A);

}  // namespace qcb

#endif  // QCB_DYNAMICS_HPP
