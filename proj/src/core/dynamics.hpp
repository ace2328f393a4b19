// Copyright 2026 The jcring Authors
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

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "core/model.hpp"

namespace jcring {

/// Dissipation channel for the Lindblad master equation.
struct CollapseChannel {
  OperatorMatrix op;
  double rate = 0.0;  ///< rad/s
};

/// Linear ramp of the qubit frequency omega_z(t).
struct RampSpec {
  double omega_z_start = 0.0;
  double omega_z_end = 0.0;
  double duration = 0.0;  ///< seconds
};

/// Piecewise drive description: contiguous pulse segments, optionally
/// followed by a qubit-frequency ramp.
struct Schedule {
  std::vector<PulseSegment> segments;
  std::optional<RampSpec> ramp;

  double total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    if (ramp) t += ramp->duration;
    return t;
  }
};

struct IntegratorOptions {
  double rtol = 1e-8;
  double atol = 1e-12;
  std::size_t max_steps = 50'000'000;
};

/// Dormand-Prince 5(4) adaptive step integrator for linear quantum
/// evolutions. State is an Eigen vector or matrix; Rhs computes
/// dy/dt = f(t, y) into a preallocated output.
template <class State, class Rhs>
class AdaptiveRk {
 public:
  AdaptiveRk(Rhs rhs, IntegratorOptions opts) : rhs_(rhs), opts_(opts) {}

  /// Advance y from t0 to t1 in place. Deterministic for identical inputs.
  void integrate(State& y, double t0, double t1) {
    if (t1 == t0) return;
    const double span = t1 - t0;
    if (span < 0.0) throw InvalidArgumentError("AdaptiveRk: t1 < t0");
    double t = t0;
    ensure_shapes(y);
    rhs_(t, y, k_[0]);
    double h = initial_step(y, k_[0], span);
    bool fsal_valid = true;
    std::size_t steps = 0;
    while (t < t1) {
      if (++steps > opts_.max_steps) throw NumericError("AdaptiveRk: step budget exhausted");
      if (h < 1e-15 * span) throw NumericError("AdaptiveRk: step size underflow");
      bool clamped = false;
      if (t + h >= t1) {
        h = t1 - t;
        clamped = true;
      }
      if (!fsal_valid) rhs_(t, y, k_[0]);

      // Stage evaluations.
      ytmp_ = y + h * (a21 * k_[0]);
      rhs_(t + c2 * h, ytmp_, k_[1]);
      ytmp_ = y + h * (a31 * k_[0] + a32 * k_[1]);
      rhs_(t + c3 * h, ytmp_, k_[2]);
      ytmp_ = y + h * (a41 * k_[0] + a42 * k_[1] + a43 * k_[2]);
      rhs_(t + c4 * h, ytmp_, k_[3]);
      ytmp_ = y + h * (a51 * k_[0] + a52 * k_[1] + a53 * k_[2] + a54 * k_[3]);
      rhs_(t + c5 * h, ytmp_, k_[4]);
      ytmp_ = y + h * (a61 * k_[0] + a62 * k_[1] + a63 * k_[2] + a64 * k_[3] + a65 * k_[4]);
      rhs_(t + h, ytmp_, k_[5]);
      ynew_ = y + h * (b1 * k_[0] + b3 * k_[2] + b4 * k_[3] + b5 * k_[4] + b6 * k_[5]);
      rhs_(t + h, ynew_, k_[6]);

      err_ = h * (e1 * k_[0] + e3 * k_[2] + e4 * k_[3] + e5 * k_[4] + e6 * k_[5] + e7 * k_[6]);
      const double ynorm = std::max(inf_norm(y), inf_norm(ynew_));
      const double scale = opts_.atol + opts_.rtol * ynorm;
      const double err = inf_norm(err_) / scale;

      if (err <= 1.0) {
        t = clamped ? t1 : t + h;
        y.swap(ynew_);
        k_[0].swap(k_[6]);
        fsal_valid = true;
        const double fac = std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(err, 1e-10), -0.2)));
        h *= fac;
      } else {
        fsal_valid = true;  // k_[0] still holds f(t, y)
        h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
      }
    }
  }

 private:
  static double inf_norm(const State& s) { return s.cwiseAbs().maxCoeff(); }

  void ensure_shapes(const State& y) {
    for (auto& k : k_) k = State::Zero(y.rows(), y.cols());
    ytmp_ = y;
    ynew_ = y;
    err_ = y;
  }

  double initial_step(const State& y, const State& f, double span) {
    const double fy = inf_norm(f);
    const double yy = std::max(inf_norm(y), 1e-12);
    double h = fy > 0.0 ? 0.01 * yy / fy : span * 1e-6;
    return std::min(h, span);
  }

  Rhs rhs_;
  IntegratorOptions opts_;
  std::array<State, 7> k_{};
  State ytmp_, ynew_, err_;

  // Dormand-Prince coefficients.
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
};

/// Unitary evolution under H plus an optional drive. Returns the state at
/// each of `sample_times` (which must be ascending and within [t0, t1];
/// the final time t1 is always appended when absent).
std::vector<QuantumState> evolve_schrodinger(const OperatorMatrix& h,
                                             const DriveGenerator* drive,
                                             const QuantumState& psi0, double t0, double t1,
                                             const std::vector<double>& sample_times,
                                             const IntegratorOptions& opts = {});

struct LindbladOptions {
  IntegratorOptions integ;
  bool check_positivity = true;
  double positivity_floor = -1e-6;
  double trace_tolerance = 1e-8;
};

/// Lindblad master equation evolution:
/// drho/dt = -i[H(t), rho] + sum_c rate_c (L rho L^dag - {L^dag L, rho}/2).
/// rho is symmetrized at every output sample; trace and positivity are
/// checked there and violations raise NumericError.
std::vector<DensityMatrix> evolve_lindblad(const OperatorMatrix& h, const DriveGenerator* drive,
                                           const std::vector<CollapseChannel>& channels,
                                           const DensityMatrix& rho0, double t0, double t1,
                                           const std::vector<double>& sample_times,
                                           const LindbladOptions& opts = {});

enum class Frame { Lab, Rotating };

/// Called at the start of evolution and after each completed segment with the
/// lab-frame state.
using SegmentCallback = std::function<void(int segment_done, const QuantumState&)>;
using SegmentCallbackRho = std::function<void(int segment_done, const DensityMatrix&)>;

/// Evolve a pure state through contiguous drive segments.
///
/// In the rotating frame each segment is integrated under the
/// time-independent H - w_d N + D + D^dag with exact phase bookkeeping
/// e^{-i w_d N t} applied at segment boundaries, so multi-frequency
/// protocols compose correctly; the returned state is in the lab frame.
QuantumState evolve_pulsed_state(const OperatorMatrix& h, const OperatorMatrix& n_op,
                                 const std::vector<PulseSegment>& segments,
                                 const std::vector<DriveGenerator>& drives,
                                 const QuantumState& psi0, Frame frame,
                                 const IntegratorOptions& opts = {},
                                 const SegmentCallback& on_boundary = nullptr);

/// Density-matrix version of evolve_pulsed_state.
DensityMatrix evolve_pulsed_density(const OperatorMatrix& h, const OperatorMatrix& n_op,
                                    const std::vector<PulseSegment>& segments,
                                    const std::vector<DriveGenerator>& drives,
                                    const std::vector<CollapseChannel>& channels,
                                    const DensityMatrix& rho0, Frame frame,
                                    const LindbladOptions& opts = {},
                                    const SegmentCallbackRho& on_boundary = nullptr);

struct RampResult {
  QuantumState state;
  double adiabaticity_ratio = 0.0;  ///< (d omega_z/dt) / (4 g^2)
  std::vector<std::string> warnings;
};

/// Drive-free evolution with a linearly ramped qubit frequency. The initial
/// state should be an eigenstate of the starting Hamiltonian (a warning is
/// issued when its overlap with the nearest eigenstate is below 0.99).
/// Evolution is restricted to the excitation sectors populated by psi_init.
RampResult adiabatic_ramp(const SystemParams& params, const RampSpec& ramp,
                          const QuantumState& psi_init, const IntegratorOptions& opts = {});

}  // namespace jcring
