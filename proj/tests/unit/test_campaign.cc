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
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qiaswap/campaign.h"

namespace qiaswap {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(ThreeSigma, Bounds) {
  EXPECT_NEAR(three_sigma(0.5, 100), 0.15, 1e-15);
  EXPECT_DOUBLE_EQ(three_sigma(1.0, 10), 0.0);
  EXPECT_TRUE(within_three_sigma(0.6, 0.5, 100));
  EXPECT_FALSE(within_three_sigma(0.7, 0.5, 100));
  EXPECT_THROW(three_sigma(0.5, 0), std::invalid_argument);
}

TEST(DetectionCurve, MonotoneAndSaturating) {
  const auto curve = detection_curve(10);
  ASSERT_EQ(curve.size(), 10u);
  for (std::size_t i = 1; i < curve.size(); ++i) EXPECT_GT(curve[i].detection, curve[i - 1].detection);
  EXPECT_GT(curve[5].detection, 0.999);
}

TEST(CampaignKind, RoundTrip) {
  for (CampaignKind k : {CampaignKind::kProtocol, CampaignKind::kImpersonation,
                         CampaignKind::kInterceptResend, CampaignKind::kFraud,
                         CampaignKind::kNoise, CampaignKind::kTable}) {
    EXPECT_EQ(parse_campaign_kind(to_string(k)), k);
  }
  EXPECT_FALSE(parse_campaign_kind("nope"));
}

TEST(MonteCarlo, EveryKindProducesRows) {
  for (CampaignKind k : {CampaignKind::kProtocol, CampaignKind::kImpersonation,
                         CampaignKind::kInterceptResend, CampaignKind::kFraud,
                         CampaignKind::kNoise, CampaignKind::kTable}) {
    CampaignSpec spec;
    spec.kind = k;
    spec.repetitions = 2;
    spec.trials = 200;
    spec.n = 3;
    spec.noise = NoiseParams::dephasing(M_PI / 3);
    spec.threads = 1;
    const auto rows = monte_carlo(spec);
    ASSERT_EQ(rows.size(), 2u) << to_string(k);
    for (const ResultRow& r : rows) {
      EXPECT_GE(r.observed, 0.0);
      EXPECT_LE(r.observed, 1.0);
      EXPECT_NEAR(r.gap, std::abs(r.observed - r.analytic), 1e-15);
      if (k != CampaignKind::kTable) {
        EXPECT_LE(r.gap, three_sigma(r.analytic, r.trials) + 1e-12) << to_string(k);
      }
    }
  }
}

TEST(MonteCarlo, NoiseObservedMatchesFormula) {
  CampaignSpec spec;
  spec.kind = CampaignKind::kNoise;
  spec.trials = 2000;
  spec.noise = NoiseParams::rotation(M_PI / 8);
  const auto rows = monte_carlo(spec);
  EXPECT_NEAR(rows[0].analytic, 0.25, 1e-12);
  EXPECT_LE(rows[0].gap, three_sigma(0.25, 2000));
}

TEST(MonteCarlo, RejectsEmptySpecs) {
  CampaignSpec spec;
  spec.trials = 0;
  EXPECT_THROW(monte_carlo(spec), std::invalid_argument);
  spec.trials = 1;
  spec.repetitions = 0;
  EXPECT_THROW(monte_carlo(spec), std::invalid_argument);
}

TEST(RunCampaign, ByteIdenticalAcrossRunsAndThreads) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "qiaswap_campaign_a.csv";
  const auto b = dir / "qiaswap_campaign_b.csv";
  CampaignSpec spec;
  spec.kind = CampaignKind::kImpersonation;
  spec.repetitions = 3;
  spec.trials = 500;
  spec.seed = 99;
  spec.threads = 1;
  run_campaign(spec, a.string());
  spec.threads = 3;
  run_campaign(spec, b.string());
  const std::string first = slurp(a);
  EXPECT_EQ(first, slurp(b));
  EXPECT_EQ(first.substr(0, first.find('\n')), "campaign,params,observed,analytic,gap,trials");
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  EXPECT_THROW(run_campaign(spec, "/nonexistent-dir/x.csv"), std::runtime_error);
}

}  // namespace
}  // namespace qiaswap
