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

#ifndef QIASWAP_LABELS_H_
#define QIASWAP_LABELS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>

#include <Eigen/Dense>

namespace qiaswap {

/// The four Bell states, in the order of their two-bit key encoding
/// (00, 01, 10, 11).
enum class BellLabel : std::uint8_t { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::kPhiPlus, BellLabel::kPhiMinus, BellLabel::kPsiPlus,
    BellLabel::kPsiMinus};

/// Single-qubit Pauli frame operations. kIY is the real matrix
/// |0><1| - |1><0|, i.e. i times sigma_y.
enum class PauliLabel : std::uint8_t { kIdentity, kX, kIY, kZ };

inline constexpr std::array<PauliLabel, 4> kAllPauliLabels = {
    PauliLabel::kIdentity, PauliLabel::kX, PauliLabel::kIY, PauliLabel::kZ};

/// Single-qubit measurement basis used by decoy qubits.
enum class Basis : std::uint8_t { kZ, kX };

constexpr std::size_t index_of(BellLabel b) { return static_cast<std::size_t>(b); }
constexpr std::size_t index_of(PauliLabel p) { return static_cast<std::size_t>(p); }

std::string_view to_string(BellLabel label);
std::string_view to_string(PauliLabel label);
std::string_view to_string(Basis basis);

/// Accepts "phi+", "phi-", "psi+", "psi-".
std::optional<BellLabel> parse_bell_label(std::string_view text);

std::ostream& operator<<(std::ostream& os, BellLabel label);
std::ostream& operator<<(std::ostream& os, PauliLabel label);

/// Amplitudes of the Bell state over |00>, |01>, |10>, |11>, first qubit
/// most significant. PsiMinus is (|01> - |10>)/sqrt(2).
Eigen::Vector4cd bell_vector(BellLabel label);

Eigen::Matrix2cd pauli_matrix(PauliLabel label);

}  // namespace qiaswap

#endif  // QIASWAP_LABELS_H_
