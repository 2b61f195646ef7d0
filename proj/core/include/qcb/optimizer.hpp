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

#ifndef QCB_OPTIMIZER_HPP
#define QCB_OPTIMIZER_HPP

#include <cstdint>
#include <vector>

#include "qcb/bounds.hpp"
#include "qcb/dynamics.hpp"

namespace qcb {

enum class InitialPulse { Zeros, Constant, Random };

/// Settings for the first-order pulse search. `initial_value` is the
/// constant level for InitialPulse::Constant and the half-width of the
/// seeded uniform draw for InitialPulse::Random.
struct OptimizationConfig {
  double target_time = 20.0;
  int steps = 200;
  int iterations = 200;
  double learning_rate = 1.0;
  InitialPulse initial_pulse = InitialPulse::Random;
  double initial_value = 0.1;
  std::uint64_t seed = 0;
  Direction direction = Direction::Max;
  double convergence_tol = 1e-6;

  /// Throws ValidationError on iterations < 1, learning_rate <= 0, steps < 1
  /// or non-finite fields.
  void validate() const;
};

/// Outcome of one optimization run. yield_fraction is range-normalized,
/// (final - lower) / (upper - lower); yield_vs_upper is final / upper, the
/// alternative normalization, reported alongside for comparison.
struct OptimizationReport {
  PulseSchedule best_pulses;
  double final_expectation = 0.0;
  KinematicalBounds bounds;
  double yield_fraction = 0.0;
  double yield_vs_upper = 0.0;
  /// Best expectation after each accepted iteration, starting with the
  /// initial pulse's value. Non-decreasing for Direction::Max.
  std::vector<double> trajectory;
  bool converged = false;
  std::uint64_t seed = 0;
};

/// d<A(tF)>/df_m[s] for every interval s and control m, computed through the
/// exact derivative of each interval's propagator (eigenbasis divided
/// differences), so it matches finite differences to solver precision.
Eigen::MatrixXd gradient(const ControlModel& model, const PulseSchedule& pulses,
                         const DensityMatrix& rho0, const Observable& A);

/// First-order ascent (descent for Direction::Min) with backtracking step
/// acceptance. Deterministic for a fixed config. When the kinematical bounds
/// collapse the report comes back immediately with yield 1.
OptimizationReport optimize(const ControlModel& model, const DensityMatrix& rho0,
                            const Observable& A, const OptimizationConfig& config);

/// Runs optimize with seeds config.seed .. config.seed + n_starts - 1 and
/// returns the best report; exact ties keep the lowest seed.
OptimizationReport optimize_multistart(const ControlModel& model,
                                       const DensityMatrix& rho0,
                                       const Observable& A,
                                       const OptimizationConfig& config,
                                       int n_starts);

/// (value - lower) / (upper - lower), clamped to [0, 1]. Throws
/// BoundsCollapsed when upper == lower within round-off.
double yield_fraction(double value, const KinematicalBounds& bounds);

/// value / upper, the alternative normalization. Throws BoundsCollapsed when
/// upper is zero.
double yield_vs_upper(double value, const KinematicalBounds& bounds);

}  // namespace qcb

#endif  // QCB_OPTIMIZER_HPP
