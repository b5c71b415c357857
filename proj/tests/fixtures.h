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

// Published reference values, transcribed verbatim (including their signs)
// so that tests can report where they disagree with the simulator.

#ifndef QIASWAP_TESTS_FIXTURES_H_
#define QIASWAP_TESTS_FIXTURES_H_

#include <array>
#include <string_view>

#include "qiaswap/bellmap.h"
#include "qiaswap/labels.h"

namespace qiaswap::fixtures {

using enum BellLabel;

struct SwapTermRef {
  BellLabel r14;
  BellLabel r23;
  int sign;  // coefficient is sign / 2
};

struct SwapExpansionRef {
  TwoBitKey key_m;
  TwoBitKey key_m1;
  BellLabel alice12;
  BellLabel bob34;
  PauliLabel pauli;
  std::array<SwapTermRef, 4> terms;
};

// Final shared state after both Pauli operations, in the (1,4),(2,3) basis.
inline const std::array<SwapExpansionRef, 4> kSwapExpansions = {{
    {TwoBitKey(1, 1), TwoBitKey(0, 0), kPhiPlus, kPsiMinus, PauliLabel::kZ,
     {{{kPsiMinus, kPhiPlus, +1}, {kPsiPlus, kPhiMinus, +1},
       {kPhiMinus, kPsiPlus, -1}, {kPhiPlus, kPsiMinus, -1}}}},
    {TwoBitKey(0, 0), TwoBitKey(0, 1), kPhiMinus, kPhiMinus, PauliLabel::kIdentity,
     {{{kPhiPlus, kPhiPlus, +1}, {kPhiMinus, kPhiMinus, +1},
       {kPsiPlus, kPsiPlus, -1}, {kPsiMinus, kPsiMinus, -1}}}},
    {TwoBitKey(0, 1), TwoBitKey(1, 0), kPsiPlus, kPsiMinus, PauliLabel::kX,
     {{{kPhiPlus, kPhiMinus, -1}, {kPhiMinus, kPhiPlus, -1},
       {kPsiPlus, kPsiMinus, +1}, {kPsiMinus, kPsiPlus, +1}}}},
    {TwoBitKey(1, 0), TwoBitKey(1, 1), kPsiMinus, kPhiMinus, PauliLabel::kIY,
     {{{kPsiPlus, kPhiPlus, +1}, {kPsiMinus, kPhiMinus, +1},
       {kPhiPlus, kPsiPlus, +1}, {kPhiMinus, kPsiMinus, +1}}}},
}};

// The (11, 00) round after the Z operations, in the computational basis of
// qubits 1234: (|0001> + |0010> - |1101> - |1110>) / 2.
struct BasisTermRef {
  std::size_t bits;
  int sign;
};
inline constexpr std::array<BasisTermRef, 4> kKeys1100Computational = {{
    {0b0001, +1}, {0b0010, +1}, {0b1101, -1}, {0b1110, -1}}};

// Outcome table for the (11, 00) round.
inline constexpr std::array<std::pair<BellLabel, BellLabel>, 4> kOutcomeTable1100 = {{
    {kPsiMinus, kPhiPlus}, {kPsiPlus, kPhiMinus}, {kPhiMinus, kPsiPlus}, {kPhiPlus, kPsiMinus}}};

// Fake-qubit attack: the 6-qubit state after both CNOTs, before any Pauli,
// as 16 terms (product of fake amplitudes, basis string over 123456, sign),
// coefficient sign * product / 2.
enum class Product { kAC, kAD, kBC, kBD };
struct FraudBasisTermRef {
  Product product;
  std::size_t bits;
  int sign;
};
inline constexpr std::array<FraudBasisTermRef, 16> kFraudPreMeasurement = {{
    {Product::kAC, 0b000101, +1}, {Product::kAD, 0b000100, +1},
    {Product::kBC, 0b000111, +1}, {Product::kBD, 0b000110, +1},
    {Product::kAC, 0b001000, -1}, {Product::kAD, 0b001001, -1},
    {Product::kBC, 0b001010, -1}, {Product::kBD, 0b001011, -1},
    {Product::kAC, 0b110111, +1}, {Product::kAD, 0b110110, -1},
    {Product::kBC, 0b110101, -1}, {Product::kBD, 0b110100, -1},
    {Product::kAC, 0b111010, -1}, {Product::kAD, 0b111011, -1},
    {Product::kBC, 0b111000, -1}, {Product::kBD, 0b111001, -1},
}};

// Final state over pairs (1,6), (5,3), (2,4): 32 terms with coefficient
// sign * product / (2 sqrt 2).
struct FraudBellTermRef {
  Product product;
  BellLabel p16;
  BellLabel p53;
  BellLabel p24;
  int sign;
};
inline constexpr std::array<FraudBellTermRef, 32> kFraudFinalBell = {{
    {Product::kAC, kPsiPlus, kPhiPlus, kPsiMinus, +1},
    {Product::kAC, kPsiPlus, kPhiMinus, kPsiPlus, +1},
    {Product::kAC, kPsiMinus, kPhiPlus, kPsiPlus, +1},
    {Product::kAC, kPsiMinus, kPhiMinus, kPsiPlus, +1},
    {Product::kAC, kPhiPlus, kPsiPlus, kPhiMinus, +1},
    {Product::kAC, kPhiPlus, kPsiMinus, kPhiPlus, +1},
    {Product::kAC, kPhiMinus, kPsiPlus, kPhiPlus, +1},
    {Product::kAC, kPhiMinus, kPsiMinus, kPhiMinus, +1},
    {Product::kAD, kPhiPlus, kPhiPlus, kPsiMinus, +1},
    {Product::kAD, kPhiPlus, kPhiMinus, kPsiPlus, +1},
    {Product::kAD, kPhiMinus, kPhiPlus, kPsiPlus, +1},
    {Product::kAD, kPhiMinus, kPhiMinus, kPsiMinus, +1},
    {Product::kAD, kPsiPlus, kPsiPlus, kPhiMinus, +1},
    {Product::kAD, kPsiPlus, kPsiMinus, kPhiPlus, +1},
    {Product::kAD, kPsiMinus, kPsiPlus, kPhiPlus, +1},
    {Product::kAD, kPsiMinus, kPsiMinus, kPhiMinus, +1},
    {Product::kBC, kPsiPlus, kPsiPlus, kPsiMinus, +1},
    {Product::kBC, kPsiPlus, kPsiMinus, kPsiPlus, -1},
    {Product::kBC, kPsiMinus, kPsiPlus, kPsiPlus, +1},
    {Product::kBC, kPsiMinus, kPsiMinus, kPsiMinus, -1},
    {Product::kBC, kPhiPlus, kPhiPlus, kPhiMinus, +1},
    {Product::kBC, kPhiPlus, kPhiMinus, kPhiPlus, -1},
    {Product::kBC, kPhiMinus, kPhiPlus, kPhiPlus, +1},
    {Product::kBC, kPhiMinus, kPhiMinus, kPhiMinus, -1},
    {Product::kBD, kPhiPlus, kPsiPlus, kPsiMinus, +1},
    {Product::kBD, kPhiPlus, kPsiMinus, kPsiPlus, -1},
    {Product::kBD, kPhiMinus, kPsiPlus, kPsiPlus, +1},
    {Product::kBD, kPhiMinus, kPsiMinus, kPsiMinus, -1},
    {Product::kBD, kPsiPlus, kPhiPlus, kPhiMinus, +1},
    {Product::kBD, kPsiPlus, kPhiMinus, kPhiPlus, -1},
    {Product::kBD, kPsiMinus, kPhiPlus, kPhiPlus, +1},
    {Product::kBD, kPsiMinus, kPhiMinus, kPhiMinus, -1},
}};

// Outcome pairs on (1,6), (5,3) that pass verification at keys (11, 00).
inline constexpr std::array<std::pair<BellLabel, BellLabel>, 4> kFraudUndetected = {{
    {kPsiPlus, kPhiMinus}, {kPsiMinus, kPhiPlus}, {kPhiPlus, kPsiMinus}, {kPhiMinus, kPsiPlus}}};

inline double product_value(Product p, double a, double b, double c, double d) {
  switch (p) {
    case Product::kAC:
      return a * c;
    case Product::kAD:
      return a * d;
    case Product::kBC:
      return b * c;
    case Product::kBD:
      return b * d;
  }
  return 0.0;
}

}  // namespace qiaswap::fixtures

#endif  // QIASWAP_TESTS_FIXTURES_H_
