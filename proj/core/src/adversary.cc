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

#include "qiaswap/adversary.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qiaswap {

FakeStateParams FakeStateParams::single_qubit(Complex a, Complex b, Complex c, Complex d) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > kTolerance ||
      std::abs(std::norm(c) + std::norm(d) - 1.0) > kTolerance) {
    throw std::invalid_argument("single-qubit fake states must be normalized");
  }
  return FakeStateParams(Mode::kSingleQubit, a, b, c, d);
}

FakeStateParams FakeStateParams::entangled(Complex a, Complex b, Complex c, Complex d) {
  if (std::abs(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d) - 1.0) > kTolerance) {
    throw std::invalid_argument("entangled fake state must be normalized");
  }
  return FakeStateParams(Mode::kEntangled, a, b, c, d);
}

PureState FakeStateParams::ancillas(QubitLabel q5, QubitLabel q6) const {
  if (mode_ == Mode::kSingleQubit) {
    return tensor(first_ancilla(q5), second_ancilla(q6));
  }
  Eigen::VectorXcd amps(4);
  amps << a_, b_, c_, d_;
  return PureState({q5, q6}, std::move(amps));
}

PureState FakeStateParams::first_ancilla(QubitLabel label) const {
  if (mode_ != Mode::kSingleQubit) {
    throw std::logic_error("entangled fake state has no single-qubit factor");
  }
  return PureState::qubit(label, a_, b_);
}

PureState FakeStateParams::second_ancilla(QubitLabel label) const {
  if (mode_ != Mode::kSingleQubit) {
    throw std::logic_error("entangled fake state has no single-qubit factor");
  }
  return PureState::qubit(label, c_, d_);
}

double FakeStateParams::closed_form_nondetection() const {
  if (mode_ == Mode::kSingleQubit) {
    return 0.5 * (std::norm(a_ * c_) + std::norm(b_ * d_));
  }
  return 0.5 * (std::norm(a_) + std::norm(d_));
}

std::string describe(const Adversary& adversary) {
  struct Visitor {
    std::string operator()(const NoAdversary&) const { return "none"; }
    std::string operator()(const ImpersonationAdversary&) const { return "impersonation"; }
    std::string operator()(const InterceptResendAdversary& ir) const {
      std::string hops = ir.alice_to_charlie && ir.bob_to_alice ? "both"
                         : ir.alice_to_charlie                  ? "alice-charlie"
                                                                : "bob-alice";
      return "intercept-resend(" + hops + ")";
    }
    std::string operator()(const FraudulentAdversary& f) const {
      std::ostringstream os;
      os << "fraud("
         << (f.fake.mode() == FakeStateParams::Mode::kSingleQubit ? "single" : "entangled")
         << ")";
      return os.str();
    }
  };
  return std::visit(Visitor{}, adversary);
}

}  // namespace qiaswap
