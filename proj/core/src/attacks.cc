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

#include "qiaswap/attacks.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qiaswap/parallel.h"
#include "qiaswap/protocol.h"

namespace qiaswap {
namespace {

// The four key pairs whose composite states make up Eve's ensemble.
const std::array<std::pair<TwoBitKey, TwoBitKey>, 4> kEnsembleKeys = {{
    {TwoBitKey(0, 0), TwoBitKey(0, 1)},
    {TwoBitKey(0, 1), TwoBitKey(1, 0)},
    {TwoBitKey(1, 0), TwoBitKey(1, 1)},
    {TwoBitKey(1, 1), TwoBitKey(0, 0)},
}};

PureState fraud_final_state(const FakeStateParams& params, TwoBitKey key_m, TwoBitKey key_m1) {
  PureState s = tensor(prepared_composite(key_m, key_m1), params.ancillas(5, 6));
  s = apply_cnot(s, 2, 5);
  s = apply_cnot(s, 4, 6);
  const PauliLabel p = key_to_pauli(key_m);
  s = apply_pauli(s, 1, p);
  return apply_pauli(s, 3, p);
}

double nondetection(const JointBellDistribution& dist, TwoBitKey key_m) {
  double p = 0.0;
  for (BellLabel x : kAllBellLabels) {
    for (BellLabel y : kAllBellLabels) {
      if ((bell_to_key(x) ^ bell_to_key(y)) == key_m) p += dist[index_of(x)][index_of(y)];
    }
  }
  return p;
}

std::vector<EnsembleMember> reduced_ensemble(const std::array<double, 4>& p) {
  std::vector<EnsembleMember> members;
  const QubitLabel keep[] = {2, 4};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& [km, km1] = kEnsembleKeys[i];
    members.push_back(
        {p[i], partial_trace(DensityMatrix::from_pure(authenticated_composite(km, km1)), keep)});
  }
  return members;
}

}  // namespace

AttackReport make_report(std::string kind, std::size_t trials, std::size_t detections,
                         double analytic_rate) {
  if (trials == 0) throw std::invalid_argument("an attack report needs at least one trial");
  if (detections > trials) throw std::invalid_argument("detections exceed trials");
  AttackReport r;
  r.attack_kind = std::move(kind);
  r.trials = trials;
  r.detections = detections;
  r.detection_rate = static_cast<double>(detections) / static_cast<double>(trials);
  r.analytic_rate = analytic_rate;
  r.abs_gap = std::abs(r.detection_rate - analytic_rate);
  return r;
}

double impersonation_detection_probability(std::size_t n) {
  return 1.0 - std::pow(0.25, static_cast<double>(n));
}

AttackReport impersonation_attack(std::size_t n, std::size_t trials, std::uint64_t seed,
                                  unsigned threads) {
  if (n == 0) throw std::invalid_argument("impersonation_attack: n must be at least 1");
  if (trials == 0) throw std::invalid_argument("impersonation_attack: no trials");
  const std::size_t detections = parallel_count(trials, threads, [&](std::size_t i) {
    ProtocolConfig cfg;
    cfg.n = n;
    cfg.seed = derive_seed(seed, i);
    cfg.adversary = ImpersonationAdversary{};
    return !run_protocol(cfg).both_authenticated();
  });
  return make_report("impersonation", trials, detections, impersonation_detection_probability(n));
}

double impersonation_round_pass_probability(TwoBitKey key_m, TwoBitKey key_m1,
                                            TwoBitKey guess_m, TwoBitKey guess_m1) {
  PureState s = tensor(prepare_bell(key_to_bell(guess_m1), 1, 2),
                       prepare_bell(key_to_bell(key_m ^ key_m1), 3, 4));
  s = apply_pauli(s, 1, key_to_pauli(guess_m));
  s = apply_pauli(s, 3, key_to_pauli(key_m));
  return nondetection(bell_joint_distribution(s, {1, 4}, {2, 3}), key_m);
}

double intercept_resend_detection_probability(std::size_t decoys) {
  return 1.0 - std::pow(0.75, static_cast<double>(decoys));
}

AttackReport intercept_resend_attack(std::size_t decoys, std::size_t trials,
                                     std::uint64_t seed, unsigned threads) {
  if (decoys == 0) throw std::invalid_argument("intercept_resend_attack: no decoys");
  if (trials == 0) throw std::invalid_argument("intercept_resend_attack: no trials");
  const std::size_t detections = parallel_count(trials, threads, [&](std::size_t i) {
    ProtocolConfig cfg;
    cfg.n = decoys;
    cfg.seed = derive_seed(seed, i);
    cfg.decoy_error_threshold = 0;
    cfg.adversary = InterceptResendAdversary{true, false};
    const Transcript t = run_protocol(cfg);
    return t.aborted && t.alice.kind == VerdictKind::kRejectedDecoy;
  });
  return make_report("intercept-resend", trials, detections,
                     intercept_resend_detection_probability(decoys));
}

HolevoResult intercept_resend_holevo() {
  const std::vector<EnsembleMember> members = reduced_ensemble({0.25, 0.25, 0.25, 0.25});
  DensityMatrix rho = mixture(members);
  const double entropy = von_neumann_entropy(rho);
  return {holevo(members), entropy, std::move(rho)};
}

double holevo_unequal_priors(const std::array<double, 4>& p) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw std::invalid_argument("priors must be finite and nonnegative");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kTolerance) throw std::invalid_argument("priors must sum to 1");
  return holevo(reduced_ensemble(p));
}

FraudResult fraudulent_attack_detection(const FakeStateParams& params, TwoBitKey key_m,
                                        TwoBitKey key_m1) {
  const PureState s = fraud_final_state(params, key_m, key_m1);
  FraudResult r;
  r.outcomes = bell_joint_distribution(s, {1, 6}, {5, 3});
  r.p_nd = nondetection(r.outcomes, key_m);
  r.p_d = 1.0 - r.p_nd;
  return r;
}

std::vector<Complex> fraud_outcome_expansion(const FakeStateParams& params, TwoBitKey key_m,
                                             TwoBitKey key_m1) {
  const QubitPair pairs[] = {{1, 6}, {5, 3}, {2, 4}};
  return bell_expansion(fraud_final_state(params, key_m, key_m1), pairs);
}

std::array<std::array<double, 4>, 4> fraud_detection_all_keys(const FakeStateParams& params) {
  std::array<std::array<double, 4>, 4> out{};
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t m1 = 0; m1 < 4; ++m1) {
      out[m][m1] =
          fraudulent_attack_detection(params, TwoBitKey::from_index(m), TwoBitKey::from_index(m1))
              .p_d;
    }
  }
  return out;
}

FraudMinimum fraudulent_attack_minimize(FakeStateParams::Mode mode, std::size_t resolution) {
  if (resolution < 8) throw std::invalid_argument("grid resolution must be at least 8");
  const double step = (std::numbers::pi / 2) / static_cast<double>(resolution);
  std::optional<FakeStateParams> best;
  double best_p_d = 2.0;
  std::size_t evaluations = 0;

  auto consider = [&](const FakeStateParams& p) {
    ++evaluations;
    const double p_d = fraudulent_attack_detection(p).p_d;
    if (p_d < best_p_d) {
      best_p_d = p_d;
      best = p;
    }
  };

  for (std::size_t i = 0; i <= resolution; ++i) {
    const double x = step * static_cast<double>(i);
    for (std::size_t j = 0; j <= resolution; ++j) {
      const double y = step * static_cast<double>(j);
      if (mode == FakeStateParams::Mode::kSingleQubit) {
        consider(FakeStateParams::single_qubit(std::cos(x), std::sin(x), std::cos(y),
                                               std::sin(y)));
        continue;
      }
      for (std::size_t k = 0; k <= resolution; ++k) {
        const double z = step * static_cast<double>(k);
        consider(FakeStateParams::entangled(std::cos(x), std::sin(x) * std::cos(y),
                                            std::sin(x) * std::sin(y) * std::cos(z),
                                            std::sin(x) * std::sin(y) * std::sin(z)));
      }
    }
  }
  return {*best, best_p_d, evaluations};
}

AttackReport fraud_attack_trials(const FakeStateParams& params, std::size_t trials,
                                 std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw std::invalid_argument("fraud_attack_trials: no trials");
  const KeySequence keys({TwoBitKey(1, 1), TwoBitKey(0, 0)});
  const std::size_t detections = parallel_count(trials, threads, [&](std::size_t i) {
    ProtocolConfig cfg;
    cfg.seed = derive_seed(seed, i);
    cfg.keys = keys;
    cfg.n = 1;
    cfg.decoys = false;
    cfg.adversary = FraudulentAdversary{params};
    return !run_protocol(cfg).both_authenticated();
  });
  return make_report("fraud", trials, detections, 1.0 - params.closed_form_nondetection());
}

}  // namespace qiaswap
