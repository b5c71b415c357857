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

#ifndef QIASWAP_CAMPAIGN_H_
#define QIASWAP_CAMPAIGN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "qiaswap/adversary.h"
#include "qiaswap/noise.h"

namespace qiaswap {

/// 3 sqrt(p (1 - p) / trials).
double three_sigma(double p, std::size_t trials);
bool within_three_sigma(double observed, double p, std::size_t trials);

struct CurvePoint {
  std::size_t n;
  double detection;
};

/// Impersonation detection 1 - (1/4)^n for n = 1..n_max.
std::vector<CurvePoint> detection_curve(std::size_t n_max);

enum class CampaignKind { kProtocol, kImpersonation, kInterceptResend, kFraud, kNoise, kTable };

std::string_view to_string(CampaignKind kind);
std::optional<CampaignKind> parse_campaign_kind(std::string_view text);

struct CampaignSpec {
  CampaignKind kind = CampaignKind::kProtocol;
  std::size_t repetitions = 1;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  /// Rounds per run; the decoy count d for intercept-resend.
  std::size_t n = 4;
  NoiseParams noise;
  std::optional<FakeStateParams> fake;
  unsigned threads = 0;
};

struct ResultRow {
  std::string campaign;
  std::string parameters;
  double observed;
  double analytic;
  double gap;
  std::size_t trials;
};

/// One row per repetition. Repetition r runs with seed derive_seed(seed, r),
/// so output is a pure function of the spec.
std::vector<ResultRow> monte_carlo(const CampaignSpec& spec);

/// campaign,params,observed,analytic,gap,trials
void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows);

/// Runs the campaign and writes its CSV to `path`. Throws std::runtime_error
/// if the file cannot be written.
std::vector<ResultRow> run_campaign(const CampaignSpec& spec, const std::string& path);

}  // namespace qiaswap

#endif  // QIASWAP_CAMPAIGN_H_
