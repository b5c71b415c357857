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

#ifndef QIASWAP_BELLMAP_H_
#define QIASWAP_BELLMAP_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qiaswap/labels.h"
#include "qiaswap/pure_state.h"

namespace qiaswap {

/// One two-bit element of the pre-shared key. Ordered 00 < 01 < 10 < 11.
class TwoBitKey {
 public:
  constexpr TwoBitKey() = default;
  /// Throws std::invalid_argument unless both digits are 0 or 1.
  TwoBitKey(int first, int second);

  /// 0..3, with the first bit most significant.
  static TwoBitKey from_index(std::size_t index);
  /// Parses "00", "01", "10" or "11".
  static std::optional<TwoBitKey> parse(std::string_view text);

  constexpr int first() const { return (bits_ >> 1) & 1; }
  constexpr int second() const { return bits_ & 1; }
  constexpr std::size_t index() const { return bits_; }
  std::string str() const;

  friend constexpr TwoBitKey operator^(TwoBitKey a, TwoBitKey b) {
    TwoBitKey k;
    k.bits_ = static_cast<std::uint8_t>(a.bits_ ^ b.bits_);
    return k;
  }
  friend constexpr auto operator<=>(TwoBitKey, TwoBitKey) = default;

 private:
  std::uint8_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, TwoBitKey key);

inline TwoBitKey key_xor(TwoBitKey a, TwoBitKey b) { return a ^ b; }

/// 00 -> phi+, 01 -> phi-, 10 -> psi+, 11 -> psi-.
BellLabel key_to_bell(TwoBitKey key);
TwoBitKey bell_to_key(BellLabel label);
/// 00 -> I, 01 -> X, 10 -> iY, 11 -> Z.
PauliLabel key_to_pauli(TwoBitKey key);
inline Eigen::Matrix2cd key_to_pauli_matrix(TwoBitKey key) {
  return pauli_matrix(key_to_pauli(key));
}

/// A term of |bell>_{12}|bell>_{34} rewritten in the (1,4),(2,3) Bell basis.
struct SwapTerm {
  BellLabel pair14;
  BellLabel pair23;
  Complex amplitude;
};

/// Entanglement-swapping lookup generated from the state-vector engine: the
/// double-Bell expansion on pairs (1,4),(2,3) of every product
/// |b12>_{12}|b34>_{34}.
class SwapTable {
 public:
  explicit SwapTable(std::array<std::array<std::vector<SwapTerm>, 4>, 4> entries);

  const std::vector<SwapTerm>& entry(BellLabel pair12, BellLabel pair34) const {
    return entries_[index_of(pair12)][index_of(pair34)];
  }

 private:
  std::array<std::array<std::vector<SwapTerm>, 4>, 4> entries_;
};

SwapTable build_swap_table();

/// Terms with |amplitude| above 1e-12 in the (1,4),(2,3) expansion of a
/// 4-qubit register labelled {1,2,3,4}.
std::vector<SwapTerm> swap_terms(const PureState& state);

/// Alice's and Bob's round preparation for keys (k_m, k_{m+1}):
/// key_to_bell(k_{m+1}) on (1,2) and key_to_bell(k_m xor k_{m+1}) on (3,4).
PureState prepared_composite(TwoBitKey key_m, TwoBitKey key_m1);

/// prepared_composite followed by key_to_pauli(k_m) on qubits 1 and 3.
PureState authenticated_composite(TwoBitKey key_m, TwoBitKey key_m1);

/// True iff every nonzero term of authenticated_composite satisfies
/// bell_to_key(r14) xor bell_to_key(r23) == key_m.
bool predicted_xor_correlation(TwoBitKey key_m, TwoBitKey key_m1);

struct XorCheckRow {
  TwoBitKey key_m;
  TwoBitKey key_m1;
  BellLabel r14;
  BellLabel r23;
  Complex amplitude;
  TwoBitKey xor_value;
  bool match;
};

/// The 16 key pairs x 4 outcome branches = 64 rows.
std::vector<XorCheckRow> xor_correlation_rows();

std::string render_swap_table(const SwapTable& table);
std::string render_xor_check(const std::vector<XorCheckRow>& rows);

}  // namespace qiaswap

#endif  // QIASWAP_BELLMAP_H_
