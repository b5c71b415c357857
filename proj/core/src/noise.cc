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

#include "qiaswap/noise.h"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <stdexcept>

namespace qiaswap {

Eigen::Matrix2cd NoiseParams::unitary() const {
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  switch (mode) {
    case NoiseMode::kNone:
      break;
    case NoiseMode::kDephasing:
      if (!std::isfinite(phi)) throw std::invalid_argument("dephasing angle is not finite");
      u(1, 1) = std::polar(1.0, phi);
      break;
    case NoiseMode::kRotation: {
      if (!std::isfinite(theta)) throw std::invalid_argument("rotation angle is not finite");
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      // Columns are the images of |0> and |1>.
      u << c, -s, s, c;
      break;
    }
  }
  return u;
}

PureState apply_collective_noise(const PureState& state, std::span<const QubitLabel> qubits,
                                 const NoiseParams& params) {
  const Eigen::Matrix2cd u = params.unitary();
  PureState out = state;
  for (QubitLabel q : qubits) out = apply_1q(out, q, u);
  return out;
}

double dephasing_error_probability(double phi) { return (1.0 - std::cos(2.0 * phi)) / 4.0; }

double rotation_error_probability(double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return 2.0 * s * s * c * c;
}

OutcomeDistribution noisy_outcome_distribution(TwoBitKey key_m, TwoBitKey key_m1,
                                               const NoiseParams& params,
                                               NoiseTiming timing) {
  static constexpr std::array<QubitLabel, 2> kTransmitted = {2, 4};
  PureState state = prepared_composite(key_m, key_m1);
  const PauliLabel pauli = key_to_pauli(key_m);
  if (timing == NoiseTiming::kBeforePaulis) {
    state = apply_collective_noise(state, kTransmitted, params);
  }
  state = apply_pauli(apply_pauli(state, 1, pauli), 3, pauli);
  if (timing == NoiseTiming::kAfterPaulis) {
    state = apply_collective_noise(state, kTransmitted, params);
  }
  const auto coeffs = bell_coefficients(state, {1, 4}, {2, 3});
  OutcomeDistribution dist{};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) dist[a][b] = std::norm(coeffs[a][b]);
  }
  return dist;
}

double error_mass(const OutcomeDistribution& dist, TwoBitKey key_m) {
  double mass = 0.0;
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      if ((TwoBitKey::from_index(a) ^ TwoBitKey::from_index(b)) != key_m) mass += dist[a][b];
    }
  }
  return mass;
}

AngleInterval tolerable_region(NoiseFormula formula, double p_limit) {
  if (!(p_limit > 0.0 && p_limit < 0.5)) {
    throw std::invalid_argument("tolerable_region: p_limit must lie in (0, 1/2)");
  }
  // Both curves reduce to sin^2(x)/2 = p with x = phi or x = 2 theta.
  const double x = std::asin(std::sqrt(2.0 * p_limit));
  if (formula == NoiseFormula::kDephasing) {
    return {x, std::numbers::pi - x};
  }
  return {x / 2.0, std::numbers::pi / 2.0 - x / 2.0};
}

std::vector<SweepRow> noise_sweep(NoiseFormula formula, std::size_t steps, TwoBitKey key_m,
                                  TwoBitKey key_m1) {
  if (steps < 2) throw std::invalid_argument("noise_sweep: steps must be at least 2");
  const double span_deg = formula == NoiseFormula::kDephasing ? 180.0 : 90.0;
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double deg = span_deg * static_cast<double>(i) / static_cast<double>(steps - 1);
    const double rad = deg * std::numbers::pi / 180.0;
    const bool dephasing = formula == NoiseFormula::kDephasing;
    const NoiseParams params = dephasing ? NoiseParams::dephasing(rad) : NoiseParams::rotation(rad);
    const double analytic =
        dephasing ? dephasing_error_probability(rad) : rotation_error_probability(rad);
    const double simulated =
        error_mass(noisy_outcome_distribution(key_m, key_m1, params), key_m);
    rows.push_back({deg, analytic, simulated});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "angle_degrees,analytic,simulated\n";
  os << std::setprecision(17);
  for (const SweepRow& r : rows) {
    os << r.angle_degrees << "," << r.analytic << "," << r.simulated << "\n";
  }
}

}  // namespace qiaswap
