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

#include "qiaswap/pure_state.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qiaswap {
namespace {

inline std::size_t bit_at(std::size_t index, std::size_t position, std::size_t n) {
  return (index >> (n - 1 - position)) & 1U;
}

void check_labels(const std::vector<QubitLabel>& labels) {
  if (labels.size() > kMaxQubits) {
    throw std::invalid_argument("register exceeds " + std::to_string(kMaxQubits) +
                                " qubits");
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (labels[i] == labels[j]) {
        throw std::invalid_argument("duplicate qubit label " + std::to_string(labels[i]));
      }
    }
  }
}

// Applies an arbitrary 2x2 operator to one qubit; callers enforce unitarity
// or renormalize.
Eigen::VectorXcd act_on_qubit(const PureState& state, std::size_t pos,
                              const Eigen::Matrix2cd& m) {
  const std::size_t n = state.num_qubits();
  const std::size_t stride = std::size_t{1} << (n - 1 - pos);
  const Eigen::VectorXcd& in = state.amplitudes();
  Eigen::VectorXcd out(in.size());
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if (i & stride) continue;
    const std::size_t j = i | stride;
    const Complex a0 = in(static_cast<Eigen::Index>(i));
    const Complex a1 = in(static_cast<Eigen::Index>(j));
    out(static_cast<Eigen::Index>(i)) = m(0, 0) * a0 + m(0, 1) * a1;
    out(static_cast<Eigen::Index>(j)) = m(1, 0) * a0 + m(1, 1) * a1;
  }
  return out;
}

std::vector<QubitLabel> labels_without(const PureState& state, std::size_t p1,
                                       std::size_t p2) {
  std::vector<QubitLabel> rest;
  for (std::size_t k = 0; k < state.num_qubits(); ++k) {
    if (k != p1 && k != p2) rest.push_back(state.labels()[k]);
  }
  return rest;
}

std::pair<std::size_t, std::size_t> pair_positions(const PureState& state, QubitLabel q1,
                                                   QubitLabel q2) {
  if (q1 == q2) {
    throw std::invalid_argument("Bell pair needs two distinct qubits");
  }
  return {state.position(q1), state.position(q2)};
}

// Unnormalized remainders <bell|_{q1 q2} |psi> for all four Bell labels.
std::array<Eigen::VectorXcd, 4> bell_projections(const PureState& state, std::size_t p1,
                                                  std::size_t p2) {
  const std::size_t n = state.num_qubits();
  const std::size_t rest_dim = std::size_t{1} << (n - 2);
  std::array<Eigen::VectorXcd, 4> out;
  std::array<Eigen::Vector4cd, 4> bras;
  for (BellLabel b : kAllBellLabels) {
    out[index_of(b)] = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(rest_dim));
    bras[index_of(b)] = bell_vector(b).conjugate();
  }
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    const Complex amp = state.amplitude(i);
    if (amp == Complex{}) continue;
    const std::size_t pair_index = 2 * bit_at(i, p1, n) + bit_at(i, p2, n);
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == p1 || k == p2) continue;
      r = (r << 1) | bit_at(i, k, n);
    }
    for (std::size_t b = 0; b < 4; ++b) {
      out[b](static_cast<Eigen::Index>(r)) += bras[b](static_cast<Eigen::Index>(pair_index)) * amp;
    }
  }
  return out;
}

}  // namespace

PureState::PureState(std::vector<QubitLabel> labels, Eigen::VectorXcd amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
  check_labels(labels_);
  if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << labels_.size())) {
    throw std::invalid_argument("amplitude count must be 2^(number of labels)");
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > kTolerance) {
    throw std::invalid_argument("state is not normalized");
  }
}

PureState PureState::normalized(std::vector<QubitLabel> labels,
                                Eigen::VectorXcd amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) {
    throw std::invalid_argument("cannot normalize a zero vector");
  }
  amplitudes /= norm;
  return PureState(std::move(labels), std::move(amplitudes));
}

PureState PureState::basis_state(std::vector<QubitLabel> labels, std::size_t bits) {
  const std::size_t dim = std::size_t{1} << labels.size();
  if (bits >= dim) {
    throw std::invalid_argument("basis index out of range");
  }
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  amps(static_cast<Eigen::Index>(bits)) = 1.0;
  return PureState(std::move(labels), std::move(amps));
}

PureState PureState::qubit(QubitLabel label, Complex alpha, Complex beta) {
  Eigen::VectorXcd amps(2);
  amps << alpha, beta;
  return PureState({label}, std::move(amps));
}

bool PureState::contains(QubitLabel label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t PureState::position(QubitLabel label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::invalid_argument("unknown qubit label " + std::to_string(label));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

PureState prepare_bell(BellLabel label, QubitLabel q1, QubitLabel q2) {
  if (q1 == q2) {
    throw std::invalid_argument("prepare_bell: labels must differ");
  }
  return PureState({q1, q2}, bell_vector(label));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<QubitLabel> labels = a.labels();
  for (QubitLabel l : b.labels()) {
    if (a.contains(l)) {
      throw std::invalid_argument("tensor: overlapping label " + std::to_string(l));
    }
    labels.push_back(l);
  }
  check_labels(labels);
  Eigen::VectorXcd amps(static_cast<Eigen::Index>(a.dimension() * b.dimension()));
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < b.dimension(); ++j) {
      amps(static_cast<Eigen::Index>(i * b.dimension() + j)) = a.amplitude(i) * b.amplitude(j);
    }
  }
  return PureState::normalized(std::move(labels), std::move(amps));
}

PureState apply_1q(const PureState& state, QubitLabel q, const Eigen::Matrix2cd& u) {
  const std::size_t pos = state.position(q);
  if (((u.adjoint() * u) - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > kTolerance) {
    throw std::invalid_argument("apply_1q: matrix is not unitary");
  }
  return PureState(state.labels(), act_on_qubit(state, pos, u));
}

PureState apply_pauli(const PureState& state, QubitLabel q, PauliLabel pauli) {
  return apply_1q(state, q, pauli_matrix(pauli));
}

PureState apply_cnot(const PureState& state, QubitLabel control, QubitLabel target) {
  if (control == target) {
    throw std::invalid_argument("apply_cnot: control and target must differ");
  }
  const std::size_t n = state.num_qubits();
  const std::size_t cmask = std::size_t{1} << (n - 1 - state.position(control));
  const std::size_t tmask = std::size_t{1} << (n - 1 - state.position(target));
  Eigen::VectorXcd out = state.amplitudes();
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(out(static_cast<Eigen::Index>(i)), out(static_cast<Eigen::Index>(i | tmask)));
    }
  }
  return PureState(state.labels(), std::move(out));
}

PureState reorder(const PureState& state, std::span<const QubitLabel> order) {
  const std::size_t n = state.num_qubits();
  if (order.size() != n) {
    throw std::invalid_argument("reorder: order must list every qubit once");
  }
  std::vector<std::size_t> old_pos(n);
  for (std::size_t k = 0; k < n; ++k) old_pos[k] = state.position(order[k]);
  std::vector<QubitLabel> labels(order.begin(), order.end());
  check_labels(labels);
  Eigen::VectorXcd out(static_cast<Eigen::Index>(state.dimension()));
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) j = (j << 1) | bit_at(i, old_pos[k], n);
    out(static_cast<Eigen::Index>(j)) = state.amplitude(i);
  }
  return PureState(std::move(labels), std::move(out));
}

double phase_distance(const PureState& a, const PureState& b) {
  const PureState bb = reorder(b, a.labels());
  const Complex overlap = bb.amplitudes().dot(a.amplitudes());  // <b|a>
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
  return (a.amplitudes() - phase * bb.amplitudes()).cwiseAbs().maxCoeff();
}

std::array<BellBranch, 4> bell_pair_branches(const PureState& state, QubitLabel q1,
                                             QubitLabel q2) {
  const auto [p1, p2] = pair_positions(state, q1, q2);
  const auto projections = bell_projections(state, p1, p2);
  const std::vector<QubitLabel> rest = labels_without(state, p1, p2);
  std::array<BellBranch, 4> branches{};
  for (BellLabel b : kAllBellLabels) {
    const Eigen::VectorXcd& v = projections[index_of(b)];
    const double p = v.squaredNorm();
    BellBranch& br = branches[index_of(b)];
    br.label = b;
    br.probability = p;
    if (p > 1e-14) br.remainder = PureState::normalized(rest, v);
  }
  return branches;
}

PureState project_bell_pair(const PureState& state, QubitLabel q1, QubitLabel q2,
                            BellLabel outcome) {
  auto branches = bell_pair_branches(state, q1, q2);
  auto& br = branches[index_of(outcome)];
  if (!br.remainder) {
    throw std::logic_error("project_bell_pair: outcome " + std::string(to_string(outcome)) +
                           " has zero probability");
  }
  return std::move(*br.remainder);
}

BellMeasurement measure_bell_pair(const PureState& state, QubitLabel q1, QubitLabel q2,
                                  Rng& rng) {
  auto branches = bell_pair_branches(state, q1, q2);
  const double u = uniform01(rng);
  double acc = 0.0;
  std::size_t pick = 4;
  for (std::size_t b = 0; b < 4; ++b) {
    if (!branches[b].remainder) continue;
    pick = b;  // last viable branch absorbs rounding in the cumulative sum
    acc += branches[b].probability;
    if (u < acc) break;
  }
  if (pick == 4) {
    throw std::logic_error("measure_bell_pair: no outcome has nonzero probability");
  }
  return {branches[pick].label, branches[pick].probability, std::move(*branches[pick].remainder)};
}

QubitMeasurement measure_qubit(const PureState& state, QubitLabel q, Basis basis,
                               Rng& rng) {
  const std::size_t pos = state.position(q);
  std::array<Eigen::Matrix2cd, 2> projectors;
  if (basis == Basis::kZ) {
    projectors[0] << 1, 0, 0, 0;
    projectors[1] << 0, 0, 0, 1;
  } else {
    projectors[0] << 0.5, 0.5, 0.5, 0.5;
    projectors[1] << 0.5, -0.5, -0.5, 0.5;
  }
  const Eigen::VectorXcd v0 = act_on_qubit(state, pos, projectors[0]);
  const double p0 = v0.squaredNorm();
  const int bit = uniform01(rng) < p0 ? 0 : 1;
  if (bit == 0) {
    return {0, p0, PureState::normalized(state.labels(), v0)};
  }
  return {1, 1.0 - p0,
          PureState::normalized(state.labels(), act_on_qubit(state, pos, projectors[1]))};
}

DoubleBellCoefficients bell_coefficients(const PureState& state, QubitPair pair_a,
                                         QubitPair pair_b) {
  if (state.num_qubits() != 4) {
    throw std::invalid_argument("bell_coefficients: register must hold exactly 4 qubits");
  }
  const std::array<QubitPair, 2> pairs = {pair_a, pair_b};
  const std::vector<Complex> flat = bell_expansion(state, pairs);
  DoubleBellCoefficients out{};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) out[a][b] = flat[4 * a + b];
  }
  return out;
}

std::vector<Complex> bell_expansion(const PureState& state,
                                    std::span<const QubitPair> pairs) {
  if (pairs.size() * 2 != state.num_qubits()) {
    throw std::invalid_argument("bell_expansion: pairs must partition the register");
  }
  std::vector<QubitLabel> order;
  for (const auto& [x, y] : pairs) {
    order.push_back(x);
    order.push_back(y);
  }
  const PureState s = reorder(state, order);  // validates the partition
  const std::size_t k = pairs.size();
  const std::size_t dim = s.dimension();  // == 4^k
  std::array<Eigen::Vector4cd, 4> bras;
  for (BellLabel b : kAllBellLabels) bras[index_of(b)] = bell_vector(b).conjugate();

  std::vector<Complex> coeffs(dim, Complex{});
  for (std::size_t label_digits = 0; label_digits < dim; ++label_digits) {
    Complex sum{};
    for (std::size_t i = 0; i < dim; ++i) {
      const Complex amp = s.amplitude(i);
      if (amp == Complex{}) continue;
      Complex w = amp;
      for (std::size_t j = 0; j < k && w != Complex{}; ++j) {
        const std::size_t shift = 2 * (k - 1 - j);
        w *= bras[(label_digits >> shift) & 3U](static_cast<Eigen::Index>((i >> shift) & 3U));
      }
      sum += w;
    }
    coeffs[label_digits] = sum;
  }
  return coeffs;
}

JointBellDistribution bell_joint_distribution(const PureState& state, QubitPair pair_a,
                                              QubitPair pair_b) {
  JointBellDistribution dist{};
  const auto first = bell_pair_branches(state, pair_a.first, pair_a.second);
  for (const BellBranch& a : first) {
    if (!a.remainder) continue;
    const auto second = bell_pair_branches(*a.remainder, pair_b.first, pair_b.second);
    for (const BellBranch& b : second) {
      dist[index_of(a.label)][index_of(b.label)] = a.probability * b.probability;
    }
  }
  return dist;
}

}  // namespace qiaswap
