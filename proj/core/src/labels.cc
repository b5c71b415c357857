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

#include "qiaswap/labels.h"

#include <cmath>

namespace qiaswap {

std::string_view to_string(BellLabel label) {
  switch (label) {
    case BellLabel::kPhiPlus:
      return "phi+";
    case BellLabel::kPhiMinus:
      return "phi-";
    case BellLabel::kPsiPlus:
      return "psi+";
    case BellLabel::kPsiMinus:
      return "psi-";
  }
  return "?";
}

std::string_view to_string(PauliLabel label) {
  switch (label) {
    case PauliLabel::kIdentity:
      return "I";
    case PauliLabel::kX:
      return "X";
    case PauliLabel::kIY:
      return "iY";
    case PauliLabel::kZ:
      return "Z";
  }
  return "?";
}

std::string_view to_string(Basis basis) { return basis == Basis::kZ ? "Z" : "X"; }

std::optional<BellLabel> parse_bell_label(std::string_view text) {
  for (BellLabel b : kAllBellLabels) {
    if (to_string(b) == text) return b;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, BellLabel label) {
  return os << to_string(label);
}

std::ostream& operator<<(std::ostream& os, PauliLabel label) {
  return os << to_string(label);
}

Eigen::Vector4cd bell_vector(BellLabel label) {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  switch (label) {
    case BellLabel::kPhiPlus:
      v(0) = h;
      v(3) = h;
      break;
    case BellLabel::kPhiMinus:
      v(0) = h;
      v(3) = -h;
      break;
    case BellLabel::kPsiPlus:
      v(1) = h;
      v(2) = h;
      break;
    case BellLabel::kPsiMinus:
      v(1) = h;
      v(2) = -h;
      break;
  }
  return v;
}

Eigen::Matrix2cd pauli_matrix(PauliLabel label) {
  Eigen::Matrix2cd m;
  switch (label) {
    case PauliLabel::kIdentity:
      m << 1, 0, 0, 1;
      break;
    case PauliLabel::kX:
      m << 0, 1, 1, 0;
      break;
    case PauliLabel::kIY:
      m << 0, 1, -1, 0;
      break;
    case PauliLabel::kZ:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace qiaswap
