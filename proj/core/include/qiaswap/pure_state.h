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

#ifndef QIASWAP_PURE_STATE_H_
#define QIASWAP_PURE_STATE_H_

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qiaswap/labels.h"
#include "qiaswap/random.h"

namespace qiaswap {

using QubitLabel = int;
using QubitPair = std::pair<QubitLabel, QubitLabel>;
using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 6;

/// Absolute tolerance for algebraic identities (norms, unitarity, traces).
inline constexpr double kTolerance = 1e-10;

/// A normalized state vector over an ordered list of labeled qubits.
///
/// Basis convention: amplitude index i encodes the computational basis string
/// with the FIRST label as the most significant bit. For labels {1, 2}, index 1
/// is |0>_1 |1>_2. Sign checks against hand-expanded states depend on this.
///
/// A register with no qubits is valid and holds the single amplitude 1; it is
/// what remains after every qubit has been measured out.
class PureState {
 public:
  /// Throws std::invalid_argument if labels repeat, exceed kMaxQubits, the
  /// amplitude count is not 2^labels, or the norm differs from 1 by more
  /// than kTolerance.
  PureState(std::vector<QubitLabel> labels, Eigen::VectorXcd amplitudes);

  /// Same checks except normalization: the amplitudes are rescaled to unit
  /// norm. Throws if the input norm is zero.
  static PureState normalized(std::vector<QubitLabel> labels,
                              Eigen::VectorXcd amplitudes);

  /// Computational basis state; `bits` uses the MSB-first convention.
  static PureState basis_state(std::vector<QubitLabel> labels, std::size_t bits);

  /// alpha|0> + beta|1> on one qubit.
  static PureState qubit(QubitLabel label, Complex alpha, Complex beta);

  const std::vector<QubitLabel>& labels() const { return labels_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::size_t num_qubits() const { return labels_.size(); }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }

  bool contains(QubitLabel label) const;
  /// Position of `label` in the label order. Throws std::invalid_argument.
  std::size_t position(QubitLabel label) const;

  Complex amplitude(std::size_t index) const { return amplitudes_(static_cast<Eigen::Index>(index)); }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

 private:
  std::vector<QubitLabel> labels_;
  Eigen::VectorXcd amplitudes_;
};

/// One of the four Bell states on (q1, q2), q1 most significant.
PureState prepare_bell(BellLabel label, QubitLabel q1, QubitLabel q2);

/// |a>|b>; label order is a's labels followed by b's.
PureState tensor(const PureState& a, const PureState& b);

/// Applies a 2x2 unitary to qubit `q`. Throws std::invalid_argument for an
/// unknown label or a matrix that is not unitary within kTolerance.
PureState apply_1q(const PureState& state, QubitLabel q, const Eigen::Matrix2cd& u);

PureState apply_pauli(const PureState& state, QubitLabel q, PauliLabel pauli);

PureState apply_cnot(const PureState& state, QubitLabel control, QubitLabel target);

/// Reorders the register to `order`, which must be a permutation of the
/// current labels. The physical state is unchanged.
PureState reorder(const PureState& state, std::span<const QubitLabel> order);

/// Largest amplitude deviation between `a` and e^{i alpha} b, with alpha the
/// best-fit global phase. `b` is reordered to `a`'s labels first; differing
/// label sets throw std::invalid_argument.
double phase_distance(const PureState& a, const PureState& b);

inline bool equal_up_to_phase(const PureState& a, const PureState& b,
                              double tolerance = kTolerance) {
  return phase_distance(a, b) <= tolerance;
}

/// One branch of a Bell measurement on a qubit pair. `remainder` holds the
/// renormalized state of the other qubits; it is empty when the branch has
/// probability zero.
struct BellBranch {
  BellLabel label;
  double probability;
  std::optional<PureState> remainder;
};

/// All four branches of a Bell measurement on (q1, q2), without sampling.
std::array<BellBranch, 4> bell_pair_branches(const PureState& state, QubitLabel q1,
                                             QubitLabel q2);

/// Post-measurement state for a requested outcome. Throws std::logic_error if
/// that outcome has zero probability.
PureState project_bell_pair(const PureState& state, QubitLabel q1, QubitLabel q2,
                            BellLabel outcome);

struct BellMeasurement {
  BellLabel label;
  double probability;
  PureState remainder;
};

/// Samples a Bell-basis measurement of (q1, q2) with Born probabilities. The
/// measured qubits leave the register.
BellMeasurement measure_bell_pair(const PureState& state, QubitLabel q1, QubitLabel q2,
                                  Rng& rng);

struct QubitMeasurement {
  int bit;
  double probability;
  /// The register with the measured qubit collapsed to the observed
  /// eigenstate (and kept in place, as an intercept-resend relay would).
  PureState collapsed;
};

/// Projective measurement of one qubit in the Z or X basis. In the X basis,
/// bit 0 means |+> and bit 1 means |->.
QubitMeasurement measure_qubit(const PureState& state, QubitLabel q, Basis basis,
                               Rng& rng);

/// Coefficients <bell_a| <bell_b| psi> of a 4-qubit state in the double-Bell
/// basis of two disjoint pairs covering the register, indexed
/// [index_of(bell_a)][index_of(bell_b)].
using DoubleBellCoefficients = std::array<std::array<Complex, 4>, 4>;
DoubleBellCoefficients bell_coefficients(const PureState& state, QubitPair pair_a,
                                         QubitPair pair_b);

/// Generalisation to k pairs that partition the register. The result has
/// 4^k entries; the label of pair j is base-4 digit j, pair 0 most
/// significant.
std::vector<Complex> bell_expansion(const PureState& state,
                                    std::span<const QubitPair> pairs);

/// Joint outcome probabilities of Bell measurements on two disjoint pairs,
/// marginalised over every other qubit in the register.
using JointBellDistribution = std::array<std::array<double, 4>, 4>;
JointBellDistribution bell_joint_distribution(const PureState& state, QubitPair pair_a,
                                              QubitPair pair_b);

}  // namespace qiaswap

#endif  // QIASWAP_PURE_STATE_H_
