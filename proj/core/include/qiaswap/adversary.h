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

#ifndef QIASWAP_ADVERSARY_H_
#define QIASWAP_ADVERSARY_H_

#include <string>
#include <variant>

#include "qiaswap/pure_state.h"

namespace qiaswap {

/// Eve's ancilla ("fake") qubits for the CNOT-based impersonated fraudulent
/// attack. Single-qubit mode: qubit 5 is a|0> + b|1>, qubit 6 is c|0> + d|1>.
/// Entangled mode: a|00> + b|01> + c|10> + d|11> on (5, 6).
class FakeStateParams {
 public:
  enum class Mode { kSingleQubit, kEntangled };

  /// Throws std::invalid_argument unless |a|^2+|b|^2 = 1 and |c|^2+|d|^2 = 1
  /// within kTolerance.
  static FakeStateParams single_qubit(Complex a, Complex b, Complex c, Complex d);
  /// Throws std::invalid_argument unless |a|^2+|b|^2+|c|^2+|d|^2 = 1.
  static FakeStateParams entangled(Complex a, Complex b, Complex c, Complex d);

  Mode mode() const { return mode_; }
  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  /// Eve's prepared ancillas on labels (q5, q6).
  PureState ancillas(QubitLabel q5, QubitLabel q6) const;
  /// Single-qubit mode only: the ancilla Eve attaches on one hop.
  PureState first_ancilla(QubitLabel label) const;
  PureState second_ancilla(QubitLabel label) const;

  /// Closed-form non-detection probability at keys (11, 00):
  /// (|ac|^2 + |bd|^2)/2 or (|a|^2 + |d|^2)/2.
  double closed_form_nondetection() const;

 private:
  FakeStateParams(Mode mode, Complex a, Complex b, Complex c, Complex d)
      : mode_(mode), a_(a), b_(b), c_(c), d_(d) {}

  Mode mode_;
  Complex a_, b_, c_, d_;
};

struct NoAdversary {};

/// Eve replaces Alice, running her steps with a uniformly guessed key
/// sequence.
struct ImpersonationAdversary {};

/// Eve measures every qubit on the selected hops in a uniformly random Z or
/// X basis and resends the observed eigenstate.
struct InterceptResendAdversary {
  bool alice_to_charlie = true;
  bool bob_to_alice = false;
};

/// Eve CNOTs each transmitted particle onto an ancilla, keeps the particle
/// and forwards the ancilla.
struct FraudulentAdversary {
  FakeStateParams fake;
};

using Adversary = std::variant<NoAdversary, ImpersonationAdversary, InterceptResendAdversary,
                               FraudulentAdversary>;

std::string describe(const Adversary& adversary);

}  // namespace qiaswap

#endif  // QIASWAP_ADVERSARY_H_
