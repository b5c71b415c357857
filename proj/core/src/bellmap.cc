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

#include "qiaswap/bellmap.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qiaswap {
namespace {

constexpr double kTermCutoff = 1e-12;

std::string format_amplitude(Complex z) {
  std::ostringstream os;
  os << std::showpos << std::fixed << std::setprecision(4);
  if (std::abs(z.imag()) < kTermCutoff) {
    os << z.real();
  } else if (std::abs(z.real()) < kTermCutoff) {
    os << z.imag() << "i";
  } else {
    os << z.real() << z.imag() << "i";
  }
  return os.str();
}

}  // namespace

TwoBitKey::TwoBitKey(int first, int second) {
  if ((first != 0 && first != 1) || (second != 0 && second != 1)) {
    throw std::invalid_argument("TwoBitKey digits must be 0 or 1");
  }
  bits_ = static_cast<std::uint8_t>((first << 1) | second);
}

TwoBitKey TwoBitKey::from_index(std::size_t index) {
  if (index > 3) throw std::invalid_argument("TwoBitKey index must be 0..3");
  return TwoBitKey(static_cast<int>(index >> 1), static_cast<int>(index & 1));
}

std::optional<TwoBitKey> TwoBitKey::parse(std::string_view text) {
  if (text.size() != 2) return std::nullopt;
  auto digit = [](char c) -> int { return c == '0' ? 0 : c == '1' ? 1 : -1; };
  const int a = digit(text[0]);
  const int b = digit(text[1]);
  if (a < 0 || b < 0) return std::nullopt;
  return TwoBitKey(a, b);
}

std::string TwoBitKey::str() const {
  return {static_cast<char>('0' + first()), static_cast<char>('0' + second())};
}

std::ostream& operator<<(std::ostream& os, TwoBitKey key) { return os << key.str(); }

BellLabel key_to_bell(TwoBitKey key) { return kAllBellLabels[key.index()]; }

TwoBitKey bell_to_key(BellLabel label) { return TwoBitKey::from_index(index_of(label)); }

PauliLabel key_to_pauli(TwoBitKey key) { return kAllPauliLabels[key.index()]; }

SwapTable::SwapTable(std::array<std::array<std::vector<SwapTerm>, 4>, 4> entries)
    : entries_(std::move(entries)) {}

std::vector<SwapTerm> swap_terms(const PureState& state) {
  const auto coeffs = bell_coefficients(state, {1, 4}, {2, 3});
  std::vector<SwapTerm> terms;
  for (BellLabel a : kAllBellLabels) {
    for (BellLabel b : kAllBellLabels) {
      const Complex c = coeffs[index_of(a)][index_of(b)];
      if (std::abs(c) > kTermCutoff) terms.push_back({a, b, c});
    }
  }
  return terms;
}

SwapTable build_swap_table() {
  std::array<std::array<std::vector<SwapTerm>, 4>, 4> entries;
  for (BellLabel a : kAllBellLabels) {
    for (BellLabel b : kAllBellLabels) {
      entries[index_of(a)][index_of(b)] =
          swap_terms(tensor(prepare_bell(a, 1, 2), prepare_bell(b, 3, 4)));
    }
  }
  return SwapTable(std::move(entries));
}

PureState prepared_composite(TwoBitKey key_m, TwoBitKey key_m1) {
  return tensor(prepare_bell(key_to_bell(key_m1), 1, 2),
                prepare_bell(key_to_bell(key_m ^ key_m1), 3, 4));
}

PureState authenticated_composite(TwoBitKey key_m, TwoBitKey key_m1) {
  const PauliLabel p = key_to_pauli(key_m);
  return apply_pauli(apply_pauli(prepared_composite(key_m, key_m1), 1, p), 3, p);
}

bool predicted_xor_correlation(TwoBitKey key_m, TwoBitKey key_m1) {
  for (const SwapTerm& t : swap_terms(authenticated_composite(key_m, key_m1))) {
    if ((bell_to_key(t.pair14) ^ bell_to_key(t.pair23)) != key_m) return false;
  }
  return true;
}

std::vector<XorCheckRow> xor_correlation_rows() {
  std::vector<XorCheckRow> rows;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const TwoBitKey km = TwoBitKey::from_index(i);
      const TwoBitKey km1 = TwoBitKey::from_index(j);
      for (const SwapTerm& t : swap_terms(authenticated_composite(km, km1))) {
        const TwoBitKey x = bell_to_key(t.pair14) ^ bell_to_key(t.pair23);
        rows.push_back({km, km1, t.pair14, t.pair23, t.amplitude, x, x == km});
      }
    }
  }
  return rows;
}

std::string render_swap_table(const SwapTable& table) {
  std::ostringstream os;
  os << "Entanglement swapping |b12>|b34> -> sum c |b14>|b23>\n";
  for (BellLabel a : kAllBellLabels) {
    for (BellLabel b : kAllBellLabels) {
      os << "|" << a << ">12 |" << b << ">34 =";
      for (const SwapTerm& t : table.entry(a, b)) {
        os << "  " << format_amplitude(t.amplitude) << " |" << t.pair14 << ">14|" << t.pair23
           << ">23";
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string render_xor_check(const std::vector<XorCheckRow>& rows) {
  std::ostringstream os;
  os << "k_m k_m+1  r14   r23   amplitude  r14^r23  match\n";
  std::size_t passed = 0;
  for (const XorCheckRow& r : rows) {
    os << r.key_m << "  " << r.key_m1 << "       " << std::left << std::setw(5)
       << to_string(r.r14) << " " << std::setw(5) << to_string(r.r23) << " " << std::right
       << std::setw(9) << format_amplitude(r.amplitude) << "  " << r.xor_value << "       "
       << (r.match ? "yes" : "NO") << "\n";
    if (r.match) ++passed;
  }
  os << passed << "/" << rows.size() << " branches satisfy r14 ^ r23 == k_m\n";
  return os.str();
}

}  // namespace qiaswap
