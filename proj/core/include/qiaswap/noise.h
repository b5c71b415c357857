// Copyright 2026 The qiaswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QIASWAP_NOISE_H_
#define QIASWAP_NOISE_H_

#include <array>
#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qiaswap/bellmap.h"
#include "qiaswap/pure_state.h"

namespace qiaswap {

enum class NoiseMode { kNone, kDephasing, kRotation };

/// Collective channel noise. Dephasing: U|0> = |0>, U|1> = e^{i phi}|1>.
/// Rotation: U|0> = cos t|0> + sin t|1>, U|1> = -sin t|0> + cos t|1>.
/// Angles are radians; only the angle matching `mode` is read.
struct NoiseParams {
  NoiseMode mode = NoiseMode::kNone;
  double phi = 0.0;
  double theta = 0.0;

  static NoiseParams none() { return {}; }
  static NoiseParams dephasing(double phi) { return {NoiseMode::kDephasing, phi, 0.0}; }
  static NoiseParams rotation(double theta) { return {NoiseMode::kRotation, 0.0, theta}; }

  /// Throws std::invalid_argument for a non-finite active angle.
  Eigen::Matrix2cd unitary() const;
};

/// The same single-qubit unitary on every listed qubit.
PureState apply_collective_noise(const PureState& state, std::span<const QubitLabel> qubits,
                                 const NoiseParams& params);

/// (1 - cos 2 phi) / 4, i.e. sin^2(phi) / 2.
double dephasing_error_probability(double phi);
/// 2 sin^2(theta) cos^2(theta).
double rotation_error_probability(double theta);

/// When the channel acts relative to the authentication Paulis. Both act on
/// disjoint qubits, so the two orders agree; the option exists to make that
/// checkable.
enum class NoiseTiming { kAfterPaulis, kBeforePaulis };

using OutcomeDistribution = std::array<std::array<double, 4>, 4>;

/// Bell outcome distribution on (1,4),(2,3) for keys (k_m, k_{m+1}) with the
/// channel acting on the transmitted particles 2 and 4.
OutcomeDistribution noisy_outcome_distribution(TwoBitKey key_m, TwoBitKey key_m1,
                                               const NoiseParams& params,
                                               NoiseTiming timing = NoiseTiming::kAfterPaulis);

/// Probability mass on outcomes with bell_to_key(r14) ^ bell_to_key(r23) != key_m.
double error_mass(const OutcomeDistribution& dist, TwoBitKey key_m);

enum class NoiseFormula { kDephasing, kRotation };

struct AngleInterval {
  double low;   // radians
  double high;  // radians
};

/// Angles where the error probability equals `p_limit`, inside (0, 180 deg)
/// for dephasing and (0, 90 deg) for rotation. The channel is acceptable when
/// its angle lies outside (low, high). Requires 0 < p_limit < 1/2.
AngleInterval tolerable_region(NoiseFormula formula, double p_limit);

struct SweepRow {
  double angle_degrees;
  double analytic;
  double simulated;
};

/// `steps` evenly spaced angles over [0, 180] deg (dephasing) or [0, 90] deg
/// (rotation), endpoints included. `simulated` is the error mass of
/// noisy_outcome_distribution for the given key pair.
std::vector<SweepRow> noise_sweep(NoiseFormula formula, std::size_t steps,
                                  TwoBitKey key_m = TwoBitKey(1, 1),
                                  TwoBitKey key_m1 = TwoBitKey(0, 0));

/// angle_degrees,analytic,simulated with a header row.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace qiaswap

#endif  // QIASWAP_NOISE_H_
