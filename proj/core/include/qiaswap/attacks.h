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

#ifndef QIASWAP_ATTACKS_H_
#define QIASWAP_ATTACKS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qiaswap/adversary.h"
#include "qiaswap/bellmap.h"
#include "qiaswap/density_matrix.h"

namespace qiaswap {

struct AttackReport {
  std::string attack_kind;
  std::size_t trials = 0;
  std::size_t detections = 0;
  double detection_rate = 0.0;
  double analytic_rate = 0.0;
  double abs_gap = 0.0;
};

/// Builds a report from counts; throws std::invalid_argument if
/// detections > trials or trials == 0.
AttackReport make_report(std::string kind, std::size_t trials, std::size_t detections,
                         double analytic_rate);

/// 1 - (1/4)^n.
double impersonation_detection_probability(std::size_t n);

/// Full protocol runs with Eve standing in for Alice. A trial is a detection
/// when either verdict is negative. Trials run on `threads` workers with
/// per-trial seeds, so the result does not depend on the thread count.
AttackReport impersonation_attack(std::size_t n, std::size_t trials, std::uint64_t seed,
                                  unsigned threads = 0);

/// Exact probability that one round passes verification when the true key
/// pair is (key_m, key_m1) and Eve prepares and operates with her guesses.
double impersonation_round_pass_probability(TwoBitKey key_m, TwoBitKey key_m1,
                                            TwoBitKey guess_m, TwoBitKey guess_m1);

/// 1 - (3/4)^d.
double intercept_resend_detection_probability(std::size_t decoys);

/// Intercept-resend on the Alice->Charlie hop of an n = d round run, so d
/// decoys are exposed. Detection is an abort at threshold 0.
AttackReport intercept_resend_attack(std::size_t decoys, std::size_t trials,
                                     std::uint64_t seed, unsigned threads = 0);

struct HolevoResult {
  double chi;
  double entropy;  // S of the reduced mixture
  DensityMatrix rho24;
};

/// Equal-weight ensemble of the four worked composite states, reduced to
/// the transmitted particles 2 and 4.
HolevoResult intercept_resend_holevo();

/// Same ensemble with priors p over (00,01), (01,10), (10,11), (11,00).
/// Throws std::invalid_argument for a bad probability vector.
double holevo_unequal_priors(const std::array<double, 4>& p);

struct FraudResult {
  double p_nd;
  double p_d;
  /// Joint Bell outcome distribution on (1,6) x (5,3).
  JointBellDistribution outcomes;
};

/// Simulates the CNOT fake-qubit circuit for one round with keys
/// (key_m, key_m1). Eve's particles 2 and 4 are traced out.
FraudResult fraudulent_attack_detection(const FakeStateParams& params,
                                        TwoBitKey key_m = TwoBitKey(1, 1),
                                        TwoBitKey key_m1 = TwoBitKey(0, 0));

/// Bell-basis amplitudes of the final 6-qubit state over (1,6), (5,3), (2,4);
/// 64 entries, pair (1,6) most significant.
std::vector<Complex> fraud_outcome_expansion(const FakeStateParams& params,
                                             TwoBitKey key_m = TwoBitKey(1, 1),
                                             TwoBitKey key_m1 = TwoBitKey(0, 0));

/// p_d for each of the 16 key pairs, indexed [key_m][key_m1].
std::array<std::array<double, 4>, 4> fraud_detection_all_keys(const FakeStateParams& params);

struct FraudMinimum {
  FakeStateParams best;
  double min_p_d;
  std::size_t evaluations;
};

/// Exhaustive grid over real nonnegative amplitudes. Single mode:
/// (cos a, sin a), (cos b, sin b) with a, b in [0, pi/2]. Entangled mode:
/// hyperspherical angles on the positive orthant of the unit 3-sphere.
/// Each point is evaluated by circuit simulation. Requires resolution >= 8.
FraudMinimum fraudulent_attack_minimize(FakeStateParams::Mode mode, std::size_t resolution);

/// Monte Carlo: single-round protocol runs at keys (11, 00) without decoys.
/// Only Alice verifies when n = 1, so detection is her negative verdict.
AttackReport fraud_attack_trials(const FakeStateParams& params, std::size_t trials,
                                 std::uint64_t seed, unsigned threads = 0);

}  // namespace qiaswap

#endif  // QIASWAP_ATTACKS_H_
