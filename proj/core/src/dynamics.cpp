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

#include "qcb/dynamics.hpp"

#include <cmath>
#include <string>

namespace qcb {

ControlModel::ControlModel(ComplexMatrix h0, std::vector<ComplexMatrix> controls,
                           std::vector<std::string> labels, double hermitian_tol)
    : h0_(std::move(h0)), controls_(std::move(controls)), labels_(std::move(labels)) {
  require_hermitian(h0_, hermitian_tol, "ControlModel h0");
  for (size_t m = 0; m < controls_.size(); ++m) {
    require_hermitian(controls_[m], hermitian_tol,
                      "ControlModel control " + std::to_string(m + 1));
    if (controls_[m].rows() != h0_.rows()) {
      throw DimensionMismatch("ControlModel: control " + std::to_string(m + 1) +
                              " has dim " + std::to_string(controls_[m].rows()) +
                              ", h0 has dim " + std::to_string(h0_.rows()));
    }
  }
  if (!labels_.empty() && labels_.size() != controls_.size()) {
    throw ValidationError("ControlModel: labels count must match controls count");
  }
}

PulseSchedule::PulseSchedule(double t0, double tF, Eigen::MatrixXd amplitudes)
    : t0_(t0), tF_(tF), amplitudes_(std::move(amplitudes)) {
  if (!(tF_ > t0_)) {
    throw ValidationError("PulseSchedule: tF must exceed t0");
  }
  if (amplitudes_.rows() < 1) {
    throw ValidationError("PulseSchedule: at least one step required");
  }
  if (!amplitudes_.allFinite()) {
    throw NonFiniteAmplitude("PulseSchedule: non-finite amplitude");
  }
}

ComplexMatrix propagate(const ControlModel& model, const PulseSchedule& pulses) {
  if (pulses.num_controls() != model.num_controls()) {
    throw DimensionMismatch("propagate: schedule has " +
                            std::to_string(pulses.num_controls()) +
                            " controls, model has " +
                            std::to_string(model.num_controls()));
  }
  const double dt = pulses.dt();
  ComplexMatrix U = ComplexMatrix::Identity(model.dim(), model.dim());
  ComplexMatrix h(model.dim(), model.dim());
  for (Eigen::Index s = 0; s < pulses.steps(); ++s) {
    h = model.h0();
    for (int m = 0; m < model.num_controls(); ++m) {
      h += pulses.amplitudes()(s, m) * model.controls()[static_cast<size_t>(m)];
    }
    U = expm_unitary(h, dt) * U;
  }
  return U;
}

ExpectationSeries simulate_expectation(const ControlModel& model,
                                       const PulseSchedule& pulses,
                                       const DensityMatrix& rho0,
                                       const Observable& A) {
  if (pulses.num_controls() != model.num_controls()) {
    throw DimensionMismatch("simulate_expectation: schedule/model control count mismatch");
  }
  if (rho0.dim() != model.dim() || A.dim() != model.dim()) {
    throw DimensionMismatch("simulate_expectation: state/observable dim mismatch");
  }
  const Eigen::Index S = pulses.steps();
  const double dt = pulses.dt();

  ExpectationSeries series;
  series.times.resize(S + 1);
  series.values.resize(S + 1);

  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix h(model.dim(), model.dim());
  auto record = [&](Eigen::Index k) {
    const std::complex<double> tr = (A.matrix() * rho).trace();
    if (std::abs(tr.imag()) > kDefaultUnitaryTol) {
      throw NonRealExpectation("simulate_expectation: non-real expectation at step " +
                               std::to_string(k));
    }
    series.times(k) = pulses.t0() + static_cast<double>(k) * dt;
    series.values(k) = tr.real();
  };

  record(0);
  for (Eigen::Index s = 0; s < S; ++s) {
    h = model.h0();
    for (int m = 0; m < model.num_controls(); ++m) {
      h += pulses.amplitudes()(s, m) * model.controls()[static_cast<size_t>(m)];
    }
    const ComplexMatrix U = expm_unitary(h, dt);
    rho = U * rho * U.adjoint();
    record(s + 1);
  }
  return series;
}

}  // namespace qcb
