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

#include "qiaswap/protocol.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qiaswap {
namespace {

constexpr QubitLabel kDecoyLabel = 0;
constexpr QubitLabel kAncillaToCharlie = 5;
constexpr QubitLabel kAncillaToAlice = 6;

// One round's 4-qubit system plus the labels currently carrying particles 2
// and 4 (a fraudulent relay substitutes its ancillas).
struct RoundRegister {
  PureState state;
  QubitLabel particle2 = 2;
  QubitLabel particle4 = 4;
  BellLabel alice_label;
  BellLabel bob_label;
};

// The quantum line of one hop: channel noise followed by whatever the
// adversary does to each passing qubit.
class Channel {
 public:
  Channel(Hop hop, const ProtocolConfig& config, bool exposed)
      : hop_(hop), config_(config), exposed_(exposed) {}

  void transmit(PureState& reg, QubitLabel& label, Rng& rng) const {
    if (!exposed_) return;
    if (config_.noise.mode != NoiseMode::kNone) {
      const QubitLabel q[] = {label};
      reg = apply_collective_noise(reg, q, config_.noise);
    }
    if (const auto* ir = std::get_if<InterceptResendAdversary>(&config_.adversary)) {
      const bool targeted = hop_ == Hop::kAliceToCharlie ? ir->alice_to_charlie : ir->bob_to_alice;
      if (targeted) {
        const Basis basis = coin_flip(rng) ? Basis::kX : Basis::kZ;
        reg = measure_qubit(reg, label, basis, rng).collapsed;
      }
    } else if (const auto* fraud = std::get_if<FraudulentAdversary>(&config_.adversary)) {
      const bool to_charlie = hop_ == Hop::kAliceToCharlie;
      const QubitLabel ancilla = to_charlie ? kAncillaToCharlie : kAncillaToAlice;
      if (fraud->fake.mode() == FakeStateParams::Mode::kSingleQubit) {
        reg = tensor(reg, to_charlie ? fraud->fake.first_ancilla(ancilla)
                                     : fraud->fake.second_ancilla(ancilla));
      } else if (to_charlie) {
        reg = tensor(reg, fraud->fake.ancillas(kAncillaToCharlie, kAncillaToAlice));
      }
      reg = apply_cnot(reg, label, ancilla);
      label = ancilla;
    }
  }

 private:
  Hop hop_;
  const ProtocolConfig& config_;
  bool exposed_;
};

Actor sender_of(Hop hop) {
  switch (hop) {
    case Hop::kAliceToCharlie:
      return Actor::kAlice;
    case Hop::kCharlieToBob:
      return Actor::kCharlie;
    case Hop::kBobToAlice:
      return Actor::kBob;
  }
  return Actor::kAlice;
}

Actor receiver_of(Hop hop) {
  switch (hop) {
    case Hop::kAliceToCharlie:
      return Actor::kCharlie;
    case Hop::kCharlieToBob:
      return Actor::kBob;
    case Hop::kBobToAlice:
      return Actor::kAlice;
  }
  return Actor::kAlice;
}

// Sends the particle-2 (or particle-4) sequence, ordered by `payload_rounds`,
// interleaved with fresh decoys; the receiver then checks the decoys.
DecoyReport run_hop(Hop hop, std::vector<RoundRegister>& rounds,
                    std::span<const std::size_t> payload_rounds, bool carries_particle2,
                    const Channel& channel, const ProtocolConfig& config, Rng& rng,
                    std::vector<Announcement>& log) {
  const std::size_t n = payload_rounds.size();
  const DecoyLayout layout = insert_decoys(n, rng, config.decoys ? n : 0);

  std::vector<PureState> decoy_regs;
  std::vector<QubitLabel> decoy_labels;
  for (const DecoyQubit& d : layout.decoys) {
    decoy_regs.push_back(decoy_state(d, kDecoyLabel));
    decoy_labels.push_back(kDecoyLabel);
  }

  std::size_t next_payload = 0;
  std::size_t next_decoy = 0;
  for (std::size_t slot = 0; slot < layout.augmented_length; ++slot) {
    if (next_decoy < layout.decoys.size() && layout.decoys[next_decoy].position == slot) {
      channel.transmit(decoy_regs[next_decoy], decoy_labels[next_decoy], rng);
      ++next_decoy;
    } else {
      RoundRegister& r = rounds[payload_rounds[next_payload++]];
      channel.transmit(r.state, carries_particle2 ? r.particle2 : r.particle4, rng);
    }
  }

  std::ostringstream disclosure;
  disclosure << to_string(hop) << " decoys:";
  for (const DecoyQubit& d : layout.decoys) {
    disclosure << " " << d.position << to_string(d.basis) << d.bit;
  }
  log.push_back({sender_of(hop), AnnouncementKind::kDecoyDisclosure, disclosure.str()});

  std::vector<DecoyMeasurement> measured;
  for (std::size_t i = 0; i < layout.decoys.size(); ++i) {
    const Basis basis = layout.decoys[i].basis;
    measured.push_back({basis, measure_qubit(decoy_regs[i], decoy_labels[i], basis, rng).bit});
  }
  DecoyReport report;
  report.hop = hop;
  report.decoys = layout.decoys.size();
  report.errors = verify_decoys(measured, layout.decoys);
  report.passed = report.errors <= config.decoy_error_threshold;

  std::ostringstream check;
  check << to_string(hop) << " errors=" << report.errors << "/" << report.decoys
        << (report.passed ? " pass" : " FAIL");
  log.push_back({receiver_of(hop), AnnouncementKind::kDecoyCheck, check.str()});
  return report;
}

std::string join_rounds(std::span<const std::size_t> rounds) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rounds.size(); ++i) os << (i ? "," : "") << rounds[i];
  return os.str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("expected a boolean, got '" + v + "'");
}

std::uint64_t parse_unsigned(const std::string& v) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + v + "'");
  }
  return std::stoull(v);
}

double parse_real(const std::string& v) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) {
    throw std::invalid_argument("expected a number, got '" + v + "'");
  }
  return x;
}

}  // namespace

KeySequence::KeySequence(std::vector<TwoBitKey> keys) : keys_(std::move(keys)) {
  if (keys_.size() < 2) {
    throw std::invalid_argument("a key sequence needs at least two keys");
  }
}

KeySequence KeySequence::random(std::size_t rounds, Rng& rng) {
  if (rounds == 0) throw std::invalid_argument("at least one round is required");
  std::vector<TwoBitKey> keys;
  keys.reserve(rounds + 1);
  for (std::size_t i = 0; i <= rounds; ++i) {
    keys.push_back(TwoBitKey::from_index(static_cast<std::size_t>(uniform_below(rng, 4))));
  }
  return KeySequence(std::move(keys));
}

KeySequence KeySequence::parse(std::string_view text) {
  std::vector<TwoBitKey> keys;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = trim(text.substr(start, comma - start));
    const auto key = TwoBitKey::parse(item);
    if (!key) throw std::invalid_argument("bad key '" + item + "' in key sequence");
    keys.push_back(*key);
    start = comma + 1;
  }
  return KeySequence(std::move(keys));
}

TwoBitKey KeySequence::key(std::size_t i) const {
  if (i < 1 || i > keys_.size()) throw std::out_of_range("key index out of range");
  return keys_[i - 1];
}

std::string KeySequence::str() const {
  std::string s;
  for (std::size_t i = 0; i < keys_.size(); ++i) {
    if (i) s += ',';
    s += keys_[i].str();
  }
  return s;
}

DecoyLayout insert_decoys(std::size_t payload_len, Rng& rng,
                          std::optional<std::size_t> decoy_count) {
  if (payload_len == 0) throw std::invalid_argument("insert_decoys: empty payload");
  const std::size_t d = decoy_count.value_or(payload_len);
  DecoyLayout layout;
  layout.augmented_length = payload_len + d;
  std::vector<std::size_t> slots(layout.augmented_length);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  shuffle(std::span<std::size_t>(slots), rng);
  std::vector<std::size_t> decoy_slots(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(d));
  std::sort(decoy_slots.begin(), decoy_slots.end());
  for (std::size_t pos : decoy_slots) {
    const Basis basis = coin_flip(rng) ? Basis::kX : Basis::kZ;
    const int bit = coin_flip(rng) ? 1 : 0;
    layout.decoys.push_back({basis, bit, pos});
  }
  std::size_t di = 0;
  for (std::size_t pos = 0; pos < layout.augmented_length; ++pos) {
    if (di < decoy_slots.size() && decoy_slots[di] == pos) {
      ++di;
    } else {
      layout.payload_positions.push_back(pos);
    }
  }
  return layout;
}

PureState decoy_state(const DecoyQubit& decoy, QubitLabel label) {
  const double h = 1.0 / std::sqrt(2.0);
  if (decoy.basis == Basis::kZ) {
    return decoy.bit == 0 ? PureState::qubit(label, 1.0, 0.0) : PureState::qubit(label, 0.0, 1.0);
  }
  return decoy.bit == 0 ? PureState::qubit(label, h, h) : PureState::qubit(label, h, -h);
}

std::size_t verify_decoys(std::span<const DecoyMeasurement> measured,
                          std::span<const DecoyQubit> expected) {
  if (measured.size() != expected.size()) {
    throw std::invalid_argument("verify_decoys: length mismatch");
  }
  std::size_t errors = 0;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    if (measured[i].basis != expected[i].basis) {
      throw std::invalid_argument("verify_decoys: decoy measured in the wrong basis");
    }
    if (measured[i].bit != expected[i].bit) ++errors;
  }
  return errors;
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw std::invalid_argument("permutation mapping is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  shuffle(std::span<std::size_t>(m), rng);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

RoundPreparation prepare_round(const KeySequence& keys, std::size_t m) {
  if (m < 1 || m > keys.rounds()) throw std::out_of_range("round index out of range");
  const BellLabel a = key_to_bell(keys.key(m + 1));
  const BellLabel b = key_to_bell(keys.key(m) ^ keys.key(m + 1));
  return {a, b, prepare_bell(a, 1, 2), prepare_bell(b, 3, 4)};
}

PureState apply_auth_paulis(const PureState& round_state, TwoBitKey key_m) {
  const PauliLabel p = key_to_pauli(key_m);
  return apply_pauli(apply_pauli(round_state, 1, p), 3, p);
}

RoundOutcome measure_round(const PureState& state, Rng& rng) {
  std::vector<QubitLabel> sorted = state.labels();
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<QubitLabel>{1, 2, 3, 4}) {
    throw std::invalid_argument("measure_round: register must be qubits {1,2,3,4}");
  }
  return measure_round(state, 2, 4, rng);
}

RoundOutcome measure_round(const PureState& state, QubitLabel particle2, QubitLabel particle4,
                           Rng& rng) {
  BellMeasurement alice = measure_bell_pair(state, 1, particle4, rng);
  BellMeasurement bob = measure_bell_pair(alice.remainder, particle2, 3, rng);
  return {bell_to_key(alice.label), bell_to_key(bob.label)};
}

std::string_view to_string(Party party) { return party == Party::kAlice ? "Alice" : "Bob"; }

std::string_view to_string(Actor actor) {
  switch (actor) {
    case Actor::kAlice:
      return "Alice";
    case Actor::kBob:
      return "Bob";
    case Actor::kCharlie:
      return "Charlie";
  }
  return "?";
}

std::string_view to_string(Hop hop) {
  switch (hop) {
    case Hop::kAliceToCharlie:
      return "alice->charlie";
    case Hop::kCharlieToBob:
      return "charlie->bob";
    case Hop::kBobToAlice:
      return "bob->alice";
  }
  return "?";
}

std::string_view to_string(AnnouncementKind kind) {
  switch (kind) {
    case AnnouncementKind::kDecoyDisclosure:
      return "decoy-disclosure";
    case AnnouncementKind::kDecoyCheck:
      return "decoy-check";
    case AnnouncementKind::kAbort:
      return "abort";
    case AnnouncementKind::kPauliComplete:
      return "pauli-complete";
    case AnnouncementKind::kPermutationReveal:
      return "permutation-reveal";
    case AnnouncementKind::kOutcomeDisclosure:
      return "outcome-disclosure";
    case AnnouncementKind::kVerdict:
      return "verdict";
  }
  return "?";
}

std::string Verdict::str() const {
  switch (kind) {
    case VerdictKind::kAuthenticated:
      return "Authenticated";
    case VerdictKind::kRejectedMismatch:
      return "Rejected(mismatch: " + reason + ")";
    case VerdictKind::kRejectedDecoy:
      return "Rejected(decoy: " + reason + ")";
  }
  return "?";
}

DisclosureResult disclose_and_verify(std::span<const TwoBitKey> r14,
                                     std::span<const TwoBitKey> r23, const KeySequence& keys,
                                     Rng& rng) {
  const std::size_t n = r14.size();
  if (r23.size() != n || keys.rounds() != n) {
    throw std::invalid_argument("disclose_and_verify: sequences must all cover n rounds");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{1});
  shuffle(std::span<std::size_t>(order), rng);

  DisclosureResult result;
  result.disclosed_by_alice.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n / 2));
  result.disclosed_by_bob.assign(order.begin() + static_cast<std::ptrdiff_t>(n / 2), order.end());
  std::sort(result.disclosed_by_alice.begin(), result.disclosed_by_alice.end());
  std::sort(result.disclosed_by_bob.begin(), result.disclosed_by_bob.end());

  auto verify = [&](std::span<const std::size_t> rounds,
                    std::vector<std::pair<std::size_t, TwoBitKey>>& computed) {
    std::vector<std::size_t> bad;
    for (std::size_t m : rounds) {
      const TwoBitKey x = r14[m - 1] ^ r23[m - 1];
      computed.emplace_back(m, x);
      if (x != keys.key(m)) bad.push_back(m);
    }
    Verdict v;
    if (!bad.empty()) {
      v.kind = VerdictKind::kRejectedMismatch;
      v.reason = "rounds " + join_rounds(bad);
    }
    return v;
  };
  result.bob = verify(result.disclosed_by_alice, result.r_b);
  result.alice = verify(result.disclosed_by_bob, result.r_a);
  return result;
}

std::size_t Transcript::total_decoy_errors() const {
  std::size_t total = 0;
  for (const DecoyReport& r : decoy_reports) total += r.errors;
  return total;
}

Transcript run_protocol(const ProtocolConfig& config) {
  if (!config.keys && config.n == 0) {
    throw std::invalid_argument("run_protocol: n must be at least 1");
  }
  if (const auto* fraud = std::get_if<FraudulentAdversary>(&config.adversary)) {
    if (fraud->fake.mode() == FakeStateParams::Mode::kEntangled && config.decoys) {
      throw std::invalid_argument(
          "entangled fake ancillas pair particle 2 with particle 4 of the same round; "
          "run them with decoys disabled");
    }
  }

  Rng rng(config.seed);
  Transcript t;
  t.keys = config.keys ? *config.keys : KeySequence::random(config.n, rng);
  const std::size_t n = t.keys.rounds();
  const bool impersonation = std::holds_alternative<ImpersonationAdversary>(config.adversary);
  const KeySequence alice_keys = impersonation ? KeySequence::random(n, rng) : t.keys;

  // Step 1: one independent register per round.
  std::vector<RoundRegister> rounds;
  rounds.reserve(n);
  for (std::size_t m = 1; m <= n; ++m) {
    RoundPreparation a = prepare_round(alice_keys, m);
    RoundPreparation b = prepare_round(t.keys, m);
    rounds.push_back({tensor(a.alice, b.bob), 2, 4, a.alice_label, b.bob_label});
  }

  auto abort_on = [&](const DecoyReport& report) {
    t.decoy_reports.push_back(report);
    if (report.passed) return false;
    t.aborted = true;
    std::ostringstream why;
    why << to_string(report.hop) << " " << report.errors << " > "
        << config.decoy_error_threshold;
    t.alice = {VerdictKind::kRejectedDecoy, why.str()};
    t.bob = t.alice;
    t.announcements.push_back({receiver_of(report.hop), AnnouncementKind::kAbort, why.str()});
    return true;
  };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  // Steps 2-4: the three quantum hops, each guarded by decoys.
  const Channel to_charlie(Hop::kAliceToCharlie, config, true);
  if (abort_on(run_hop(Hop::kAliceToCharlie, rounds, order, true, to_charlie, config, rng,
                       t.announcements))) {
    return t;
  }
  const Permutation pi = Permutation::random(n, rng);
  const std::vector<std::size_t> permuted = charlie_permute<std::size_t>(order, pi);
  const Channel to_bob(Hop::kCharlieToBob, config, false);
  if (abort_on(run_hop(Hop::kCharlieToBob, rounds, permuted, true, to_bob, config, rng,
                       t.announcements))) {
    return t;
  }
  const Channel to_alice(Hop::kBobToAlice, config, true);
  if (abort_on(run_hop(Hop::kBobToAlice, rounds, order, false, to_alice, config, rng,
                       t.announcements))) {
    return t;
  }

  // Step 5 Paulis, then the announcements that gate Charlie's reveal.
  for (std::size_t m = 1; m <= n; ++m) {
    RoundRegister& r = rounds[m - 1];
    r.state = apply_pauli(r.state, 1, key_to_pauli(alice_keys.key(m)));
    r.state = apply_pauli(r.state, 3, key_to_pauli(t.keys.key(m)));
  }
  t.announcements.push_back({Actor::kAlice, AnnouncementKind::kPauliComplete, "S_A1"});
  t.announcements.push_back({Actor::kBob, AnnouncementKind::kPauliComplete, "S_B3"});
  t.announcements.push_back(
      {Actor::kCharlie, AnnouncementKind::kPermutationReveal, join_rounds(pi.mapping())});
  const std::vector<std::size_t> restored = charlie_permute<std::size_t>(permuted, pi.inverse());
  if (restored != order) {
    throw std::logic_error("inverse permutation failed to restore particle-2 order");
  }

  std::vector<TwoBitKey> r14(n);
  std::vector<TwoBitKey> r23(n);
  for (std::size_t m = 1; m <= n; ++m) {
    const RoundRegister& r = rounds[restored[m - 1]];
    const RoundOutcome out = measure_round(r.state, r.particle2, r.particle4, rng);
    r14[m - 1] = out.r14;
    r23[m - 1] = out.r23;
  }

  // Steps 6-7.
  DisclosureResult d = disclose_and_verify(r14, r23, t.keys, rng);
  t.announcements.push_back({Actor::kAlice, AnnouncementKind::kOutcomeDisclosure,
                             "R14 at " + join_rounds(d.disclosed_by_alice)});
  t.announcements.push_back({Actor::kBob, AnnouncementKind::kOutcomeDisclosure,
                             "R23 at " + join_rounds(d.disclosed_by_bob)});
  t.alice = d.alice;
  t.bob = d.bob;
  t.announcements.push_back({Actor::kAlice, AnnouncementKind::kVerdict, t.alice.str()});
  t.announcements.push_back({Actor::kBob, AnnouncementKind::kVerdict, t.bob.str()});

  std::vector<Party> discloser(n + 1, Party::kBob);
  for (std::size_t m : d.disclosed_by_alice) discloser[m] = Party::kAlice;
  for (std::size_t m = 1; m <= n; ++m) {
    const RoundRegister& r = rounds[m - 1];
    t.rounds.push_back({m, r.alice_label, r.bob_label, key_to_pauli(alice_keys.key(m)),
                        key_to_pauli(t.keys.key(m)), r14[m - 1], r23[m - 1], discloser[m],
                        (r14[m - 1] ^ r23[m - 1]) == t.keys.key(m)});
  }
  return t;
}

ProtocolConfig parse_config(std::istream& in) {
  ProtocolConfig cfg;
  std::string line;
  std::string adversary = "none";
  std::string ir_hops = "alice-charlie";
  std::string fake_mode = "single";
  const double h = 1.0 / std::sqrt(2.0);
  double fake[4] = {h, h, h, h};
  std::string noise = "none";
  double noise_deg = 0.0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key == "n") {
      cfg.n = parse_unsigned(value);
    } else if (key == "seed") {
      cfg.seed = parse_unsigned(value);
    } else if (key == "threshold") {
      cfg.decoy_error_threshold = parse_unsigned(value);
    } else if (key == "decoys") {
      cfg.decoys = parse_bool(value);
    } else if (key == "keys") {
      cfg.keys = KeySequence::parse(value);
    } else if (key == "adversary") {
      adversary = value;
    } else if (key == "ir_hops") {
      ir_hops = value;
    } else if (key == "fake_mode") {
      fake_mode = value;
    } else if (key.size() == 6 && key.starts_with("fake_") && key[5] >= 'a' && key[5] <= 'd') {
      fake[key[5] - 'a'] = parse_real(value);
    } else if (key == "noise") {
      noise = value;
    } else if (key == "noise_angle_deg") {
      noise_deg = parse_real(value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
    }
  }
  if (cfg.keys) cfg.n = cfg.keys->rounds();
  if (cfg.n == 0) throw std::invalid_argument("config: n must be at least 1");

  if (adversary == "none") {
    cfg.adversary = NoAdversary{};
  } else if (adversary == "impersonation") {
    cfg.adversary = ImpersonationAdversary{};
  } else if (adversary == "intercept-resend") {
    InterceptResendAdversary ir;
    if (ir_hops == "alice-charlie") {
      ir = {true, false};
    } else if (ir_hops == "bob-alice") {
      ir = {false, true};
    } else if (ir_hops == "both") {
      ir = {true, true};
    } else {
      throw std::invalid_argument("config: unknown ir_hops '" + ir_hops + "'");
    }
    cfg.adversary = ir;
  } else if (adversary == "fraud") {
    if (fake_mode == "single") {
      cfg.adversary = FraudulentAdversary{FakeStateParams::single_qubit(fake[0], fake[1], fake[2], fake[3])};
    } else if (fake_mode == "entangled") {
      cfg.adversary = FraudulentAdversary{FakeStateParams::entangled(fake[0], fake[1], fake[2], fake[3])};
    } else {
      throw std::invalid_argument("config: unknown fake_mode '" + fake_mode + "'");
    }
  } else {
    throw std::invalid_argument("config: unknown adversary '" + adversary + "'");
  }

  const double rad = noise_deg * std::numbers::pi / 180.0;
  if (noise == "none") {
    cfg.noise = NoiseParams::none();
  } else if (noise == "dephasing") {
    cfg.noise = NoiseParams::dephasing(rad);
  } else if (noise == "rotation") {
    cfg.noise = NoiseParams::rotation(rad);
  } else {
    throw std::invalid_argument("config: unknown noise '" + noise + "'");
  }
  return cfg;
}

void write_transcript_csv(std::ostream& os, const Transcript& transcript) {
  os << "m,alice_state,bob_state,alice_pauli,bob_pauli,r14,r23,disclosed_by,verified_by,match\n";
  for (const RoundRecord& r : transcript.rounds) {
    const Party verifier = r.disclosed_by == Party::kAlice ? Party::kBob : Party::kAlice;
    os << r.m << "," << r.alice_state << "," << r.bob_state << "," << r.alice_pauli << ","
       << r.bob_pauli << "," << r.r14 << "," << r.r23 << "," << to_string(r.disclosed_by) << ","
       << to_string(verifier) << "," << (r.match ? "yes" : "no") << "\n";
  }
}

}  // namespace qiaswap
