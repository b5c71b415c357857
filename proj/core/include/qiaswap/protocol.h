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

#ifndef QIASWAP_PROTOCOL_H_
#define QIASWAP_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qiaswap/adversary.h"
#include "qiaswap/bellmap.h"
#include "qiaswap/noise.h"
#include "qiaswap/pure_state.h"
#include "qiaswap/random.h"

namespace qiaswap {

/// The pre-shared key K_AB: n + 1 two-bit keys driving n rounds. Rounds are
/// 1-based throughout this header.
class KeySequence {
 public:
  /// Throws std::invalid_argument for fewer than two keys.
  explicit KeySequence(std::vector<TwoBitKey> keys);

  static KeySequence random(std::size_t rounds, Rng& rng);
  /// Comma-separated list such as "11,00,01".
  static KeySequence parse(std::string_view text);

  std::size_t rounds() const { return keys_.size() - 1; }
  /// k_i for 1 <= i <= rounds() + 1.
  TwoBitKey key(std::size_t i) const;
  const std::vector<TwoBitKey>& keys() const { return keys_; }
  std::string str() const;

 private:
  std::vector<TwoBitKey> keys_;
};

struct DecoyQubit {
  Basis basis;
  int bit;
  std::size_t position;  // 0-based slot in the augmented sequence
};

/// Where decoys sit in an augmented sequence.
struct DecoyLayout {
  std::size_t augmented_length = 0;
  std::vector<std::size_t> payload_positions;  // ascending
  std::vector<DecoyQubit> decoys;              // ascending by position
};

/// Places `decoy_count` decoys (default: one per payload particle) at
/// uniformly random slots of the augmented sequence, each drawn uniformly
/// from {|0>, |1>, |+>, |->}. Payload order is preserved. Throws
/// std::invalid_argument when payload_len is 0.
DecoyLayout insert_decoys(std::size_t payload_len, Rng& rng,
                          std::optional<std::size_t> decoy_count = std::nullopt);

/// The single-qubit state a decoy was prepared in.
PureState decoy_state(const DecoyQubit& decoy, QubitLabel label);

struct DecoyMeasurement {
  Basis basis;
  int bit;
};

/// Number of decoys whose measured bit differs from the prepared bit. The
/// receiver measures in the announced basis; a basis disagreement is a
/// caller error. Throws std::invalid_argument on length or basis mismatch.
std::size_t verify_decoys(std::span<const DecoyMeasurement> measured,
                          std::span<const DecoyQubit> expected);

/// A bijection on {0..n-1}: the element at position i moves to position
/// mapping[i].
class Permutation {
 public:
  /// Throws std::invalid_argument unless `mapping` is a bijection.
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, Rng& rng);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t i) const { return mapping_[i]; }
  Permutation inverse() const;
  const std::vector<std::size_t>& mapping() const { return mapping_; }

 private:
  std::vector<std::size_t> mapping_;
};

/// Reorders a sequence: the element at position i moves to pi[i].
template <typename T>
std::vector<T> charlie_permute(std::span<const T> seq, const Permutation& pi) {
  if (seq.size() != pi.size()) {
    throw std::invalid_argument("charlie_permute: sequence and permutation sizes differ");
  }
  std::vector<T> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) out[pi[i]] = seq[i];
  return out;
}

struct RoundPreparation {
  BellLabel alice_label;
  BellLabel bob_label;
  PureState alice;  // qubits (1, 2)
  PureState bob;    // qubits (3, 4)
};

/// Round m (1-based): Alice prepares key_to_bell(k_{m+1}), Bob prepares
/// key_to_bell(k_m xor k_{m+1}). Throws std::out_of_range for a bad m.
RoundPreparation prepare_round(const KeySequence& keys, std::size_t m);

/// key_to_pauli(key_m) on qubit 1 and on qubit 3.
PureState apply_auth_paulis(const PureState& round_state, TwoBitKey key_m);

struct RoundOutcome {
  TwoBitKey r14;
  TwoBitKey r23;
};

/// Alice's Bell measurement on (1, 4), then Bob's on (2, 3).
RoundOutcome measure_round(const PureState& state, Rng& rng);

/// Same, for registers where the transmitted particles carry other labels.
RoundOutcome measure_round(const PureState& state, QubitLabel particle2,
                           QubitLabel particle4, Rng& rng);

enum class Party { kAlice, kBob };
enum class Actor { kAlice, kBob, kCharlie };

std::string_view to_string(Party party);
std::string_view to_string(Actor actor);

enum class VerdictKind { kAuthenticated, kRejectedMismatch, kRejectedDecoy };

/// The conclusion one party reaches about its peer.
struct Verdict {
  VerdictKind kind = VerdictKind::kAuthenticated;
  std::string reason;

  bool authenticated() const { return kind == VerdictKind::kAuthenticated; }
  std::string str() const;
};

struct DisclosureResult {
  /// Alice's verdict, from r_A over the rounds Bob disclosed.
  Verdict alice;
  /// Bob's verdict, from r_B over the rounds Alice disclosed.
  Verdict bob;
  std::vector<std::size_t> disclosed_by_alice;  // D_A, ascending, 1-based
  std::vector<std::size_t> disclosed_by_bob;    // complement of D_A
  std::vector<std::pair<std::size_t, TwoBitKey>> r_a;
  std::vector<std::pair<std::size_t, TwoBitKey>> r_b;
};

/// Alice discloses floor(n/2) uniformly chosen values of R14; Bob discloses
/// R23 on the remaining rounds. Each side XORs the peer's disclosures with
/// its own outcomes and compares with K_AB. With n = 1 Alice discloses
/// nothing and Bob's verdict is vacuously positive.
DisclosureResult disclose_and_verify(std::span<const TwoBitKey> r14,
                                     std::span<const TwoBitKey> r23,
                                     const KeySequence& keys, Rng& rng);

enum class Hop { kAliceToCharlie, kCharlieToBob, kBobToAlice };
std::string_view to_string(Hop hop);

struct DecoyReport {
  Hop hop;
  std::size_t decoys = 0;
  std::size_t errors = 0;
  bool passed = true;
};

enum class AnnouncementKind {
  kDecoyDisclosure,
  kDecoyCheck,
  kAbort,
  kPauliComplete,
  kPermutationReveal,
  kOutcomeDisclosure,
  kVerdict,
};
std::string_view to_string(AnnouncementKind kind);

/// One message on the authenticated classical channel, in send order.
struct Announcement {
  Actor actor;
  AnnouncementKind kind;
  std::string detail;
};

struct RoundRecord {
  std::size_t m;
  BellLabel alice_state;
  BellLabel bob_state;
  PauliLabel alice_pauli;
  PauliLabel bob_pauli;
  TwoBitKey r14;
  TwoBitKey r23;
  Party disclosed_by;
  bool match;  // r14 ^ r23 == k_m
};

struct Transcript {
  KeySequence keys{{TwoBitKey(), TwoBitKey()}};
  std::vector<RoundRecord> rounds;
  std::vector<Announcement> announcements;
  std::vector<DecoyReport> decoy_reports;
  Verdict alice;
  Verdict bob;
  bool aborted = false;

  bool both_authenticated() const { return alice.authenticated() && bob.authenticated(); }
  std::size_t total_decoy_errors() const;
};

struct ProtocolConfig {
  std::size_t n = 4;
  std::size_t decoy_error_threshold = 0;
  std::uint64_t seed = 0;
  bool decoys = true;
  /// When absent, K_AB is drawn uniformly from the run's generator.
  std::optional<KeySequence> keys;
  Adversary adversary = NoAdversary{};
  /// Acts on the Alice->Charlie and Bob->Alice hops (particles 2, 4 and
  /// their decoys).
  NoiseParams noise;
};

/// Parses `key = value` lines ('#' starts a comment). Recognised keys: n,
/// seed, threshold, decoys, keys, adversary (none | impersonation |
/// intercept-resend | fraud), ir_hops (alice-charlie | bob-alice | both),
/// fake_mode (single | entangled), fake_a..fake_d, noise (none | dephasing |
/// rotation), noise_angle_deg. Throws std::invalid_argument on bad input.
ProtocolConfig parse_config(std::istream& in);

/// Executes the full authentication run. Order on the classical channel:
/// decoy checks on each hop, Pauli-completion announcements from Alice and
/// Bob, Charlie's permutation reveal, Bell measurements, disclosures,
/// verdicts. A decoy check over threshold aborts the run with both verdicts
/// kRejectedDecoy and no round records.
Transcript run_protocol(const ProtocolConfig& config);

/// One CSV row per round:
/// m,alice_state,bob_state,alice_pauli,bob_pauli,r14,r23,disclosed_by,verified_by,match
void write_transcript_csv(std::ostream& os, const Transcript& transcript);

}  // namespace qiaswap

#endif  // QIASWAP_PROTOCOL_H_
