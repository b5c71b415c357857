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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "oracle.h"
#include "qiaswap/noise.h"
#include "test_util.h"

namespace qiaswap {
namespace {

// Dense-matrix error mass for keys (m, m1) with U on qubits 2 and 4.
double oracle_error_mass(std::size_t m, std::size_t m1, const oracle::Mat& u) {
  oracle::Vec v = oracle::kron(oracle::bell(static_cast<int>(m1)), oracle::bell(static_cast<int>(m ^ m1)));
  v = oracle::apply(oracle::embed(oracle::pauli(static_cast<int>(m)), 0, 4), v);
  v = oracle::apply(oracle::embed(oracle::pauli(static_cast<int>(m)), 2, 4), v);
  v = oracle::apply(oracle::embed(u, 1, 4), v);
  v = oracle::apply(oracle::embed(u, 3, 4), v);
  double err = 0.0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (static_cast<std::size_t>(x ^ y) != m) err += std::norm(oracle::bell_overlap(v, {{0, 3}, {1, 2}}, {x, y}));
  return err;
}

TEST(NoiseParams, Unitaries) {
  const Eigen::Matrix2cd d = NoiseParams::dephasing(0.3).unitary();
  EXPECT_NEAR(std::abs(d(1, 1) - std::polar(1.0, 0.3)), 0.0, 1e-15);
  EXPECT_EQ(d(0, 0), Complex(1.0));
  const Eigen::Matrix2cd r = NoiseParams::rotation(0.4).unitary();
  EXPECT_NEAR(r(1, 0).real(), std::sin(0.4), 1e-15);
  EXPECT_NEAR(r(0, 1).real(), -std::sin(0.4), 1e-15);
  EXPECT_TRUE(NoiseParams::none().unitary().isIdentity());
  EXPECT_THROW(NoiseParams::rotation(NAN).unitary(), std::invalid_argument);
  EXPECT_THROW(NoiseParams::dephasing(INFINITY).unitary(), std::invalid_argument);
}

TEST(NoiseFormulas, ClosedForms) {
  EXPECT_NEAR(dephasing_error_probability(M_PI / 2), 0.5, 1e-15);
  EXPECT_NEAR(dephasing_error_probability(M_PI), 0.0, 1e-15);
  EXPECT_NEAR(rotation_error_probability(M_PI / 4), 0.5, 1e-15);
  EXPECT_NEAR(rotation_error_probability(M_PI / 2), 0.0, 1e-15);
  EXPECT_NEAR(dephasing_error_probability(0.7), std::pow(std::sin(0.7), 2) / 2, 1e-15);
}

// Property: the simulator matches the dense oracle and the closed forms for
// all 16 key pairs at random angles.
TEST(NoisyOutcomes, AllKeyPairsAgreeWithOracle) {
  Rng rng(41);
  for (int t = 0; t < 5; ++t) {
    const double phi = M_PI * uniform01(rng);
    const double theta = M_PI / 2 * uniform01(rng);
    for (std::size_t m = 0; m < 4; ++m) {
      for (std::size_t m1 = 0; m1 < 4; ++m1) {
        const TwoBitKey km = TwoBitKey::from_index(m), km1 = TwoBitKey::from_index(m1);
        const NoiseParams dp = NoiseParams::dephasing(phi), rt = NoiseParams::rotation(theta);
        const double e_dp = error_mass(noisy_outcome_distribution(km, km1, dp), km);
        const double e_rt = error_mass(noisy_outcome_distribution(km, km1, rt), km);
        EXPECT_NEAR(e_dp, oracle_error_mass(m, m1, testing::to_mat(dp.unitary())), 1e-12);
        EXPECT_NEAR(e_rt, oracle_error_mass(m, m1, testing::to_mat(rt.unitary())), 1e-12);
        EXPECT_NEAR(e_dp, dephasing_error_probability(phi), 1e-10);
        EXPECT_NEAR(e_rt, rotation_error_probability(theta), 1e-10);
      }
    }
  }
}

TEST(NoisyOutcomes, TimingDoesNotMatter) {
  for (std::size_t m = 0; m < 4; ++m) {
    const auto after = noisy_outcome_distribution(TwoBitKey::from_index(m), TwoBitKey(1, 0),
                                                  NoiseParams::rotation(0.3), NoiseTiming::kAfterPaulis);
    const auto before = noisy_outcome_distribution(TwoBitKey::from_index(m), TwoBitKey(1, 0),
                                                   NoiseParams::rotation(0.3), NoiseTiming::kBeforePaulis);
    for (std::size_t x = 0; x < 4; ++x)
      for (std::size_t y = 0; y < 4; ++y) EXPECT_NEAR(after[x][y], before[x][y], 1e-14);
  }
}

TEST(NoisyOutcomes, CollectiveNoiseTouchesOnlyListedQubits) {
  const PureState s = prepare_bell(BellLabel::kPhiPlus, 1, 2);
  const QubitLabel q[] = {2};
  const PureState r = apply_collective_noise(s, q, NoiseParams::rotation(M_PI / 2));
  EXPECT_TRUE(equal_up_to_phase(r, apply_pauli(s, 2, PauliLabel::kIY)));
  EXPECT_TRUE(equal_up_to_phase(apply_collective_noise(s, q, NoiseParams::none()), s));
}

TEST(TolerableRegion, InvertsTheFormulas) {
  for (double p : {0.01, 0.1, 0.25, 0.4}) {
    const AngleInterval d = tolerable_region(NoiseFormula::kDephasing, p);
    EXPECT_NEAR(dephasing_error_probability(d.low), p, 1e-12);
    EXPECT_NEAR(dephasing_error_probability(d.high), p, 1e-12);
    EXPECT_NEAR(d.low + d.high, M_PI, 1e-12);
    const AngleInterval r = tolerable_region(NoiseFormula::kRotation, p);
    EXPECT_NEAR(rotation_error_probability(r.low), p, 1e-12);
    EXPECT_NEAR(rotation_error_probability(r.high), p, 1e-12);
    EXPECT_NEAR(r.low + r.high, M_PI / 2, 1e-12);
  }
  EXPECT_THROW(tolerable_region(NoiseFormula::kRotation, 0.0), std::invalid_argument);
  EXPECT_THROW(tolerable_region(NoiseFormula::kRotation, 0.5), std::invalid_argument);
}

TEST(Sweep, GridAndExtrema) {
  const auto dp = noise_sweep(NoiseFormula::kDephasing, 181);
  ASSERT_EQ(dp.size(), 181u);
  EXPECT_DOUBLE_EQ(dp.front().angle_degrees, 0.0);
  EXPECT_DOUBLE_EQ(dp.back().angle_degrees, 180.0);
  EXPECT_NEAR(dp[90].simulated, 0.5, 1e-10);
  EXPECT_NEAR(dp[0].simulated, 0.0, 1e-10);
  EXPECT_NEAR(dp[180].simulated, 0.0, 1e-10);
  const auto rt = noise_sweep(NoiseFormula::kRotation, 91);
  EXPECT_DOUBLE_EQ(rt.back().angle_degrees, 90.0);
  EXPECT_NEAR(rt[45].simulated, 0.5, 1e-10);
  EXPECT_THROW(noise_sweep(NoiseFormula::kRotation, 1), std::invalid_argument);
}

TEST(Sweep, CsvFormat) {
  std::ostringstream os;
  write_sweep_csv(os, noise_sweep(NoiseFormula::kRotation, 3));
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "angle_degrees,analytic,simulated");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 2), "0,");
}

}  // namespace
}  // namespace qiaswap
