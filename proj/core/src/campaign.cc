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

#include "qiaswap/campaign.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qiaswap/attacks.h"
#include "qiaswap/bellmap.h"
#include "qiaswap/parallel.h"
#include "qiaswap/protocol.h"

namespace qiaswap {
namespace {

ResultRow row_from(const AttackReport& r, std::string params) {
  return {r.attack_kind, std::move(params), r.detection_rate, r.analytic_rate, r.abs_gap, r.trials};
}

double noise_error_probability(const NoiseParams& noise) {
  switch (noise.mode) {
    case NoiseMode::kNone:
      return 0.0;
    case NoiseMode::kDephasing:
      return dephasing_error_probability(noise.phi);
    case NoiseMode::kRotation:
      return rotation_error_probability(noise.theta);
  }
  return 0.0;
}

std::string noise_label(const NoiseParams& noise) {
  std::ostringstream os;
  os << std::setprecision(17);
  switch (noise.mode) {
    case NoiseMode::kNone:
      os << "none";
      break;
    case NoiseMode::kDephasing:
      os << "dephasing:" << noise.phi;
      break;
    case NoiseMode::kRotation:
      os << "rotation:" << noise.theta;
      break;
  }
  return os.str();
}

}  // namespace

double three_sigma(double p, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("three_sigma: no trials");
  return 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

bool within_three_sigma(double observed, double p, std::size_t trials) {
  return std::abs(observed - p) <= three_sigma(p, trials);
}

std::vector<CurvePoint> detection_curve(std::size_t n_max) {
  std::vector<CurvePoint> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    out.push_back({n, impersonation_detection_probability(n)});
  }
  return out;
}

std::string_view to_string(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kProtocol:
      return "protocol";
    case CampaignKind::kImpersonation:
      return "impersonation";
    case CampaignKind::kInterceptResend:
      return "intercept-resend";
    case CampaignKind::kFraud:
      return "fraud";
    case CampaignKind::kNoise:
      return "noise";
    case CampaignKind::kTable:
      return "table";
  }
  return "?";
}

std::optional<CampaignKind> parse_campaign_kind(std::string_view text) {
  for (CampaignKind k : {CampaignKind::kProtocol, CampaignKind::kImpersonation,
                         CampaignKind::kInterceptResend, CampaignKind::kFraud,
                         CampaignKind::kNoise, CampaignKind::kTable}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

std::vector<ResultRow> monte_carlo(const CampaignSpec& spec) {
  if (spec.repetitions == 0) throw std::invalid_argument("monte_carlo: no repetitions");
  if (spec.trials == 0) throw std::invalid_argument("monte_carlo: no trials");
  if (spec.n == 0) throw std::invalid_argument("monte_carlo: n must be at least 1");

  std::vector<ResultRow> rows;
  for (std::size_t rep = 0; rep < spec.repetitions; ++rep) {
    const std::uint64_t seed = derive_seed(spec.seed, rep);
    std::ostringstream params;
    params << "n=" << spec.n << ";rep=" << rep << ";seed=" << seed;

    switch (spec.kind) {
      case CampaignKind::kProtocol: {
        const std::size_t passed = parallel_count(spec.trials, spec.threads, [&](std::size_t i) {
          ProtocolConfig cfg;
          cfg.n = spec.n;
          cfg.seed = derive_seed(seed, i);
          const Transcript t = run_protocol(cfg);
          return t.both_authenticated() && t.total_decoy_errors() == 0;
        });
        const double observed = static_cast<double>(passed) / static_cast<double>(spec.trials);
        rows.push_back({"protocol", params.str(), observed, 1.0, std::abs(observed - 1.0),
                        spec.trials});
        break;
      }
      case CampaignKind::kImpersonation:
        rows.push_back(row_from(impersonation_attack(spec.n, spec.trials, seed, spec.threads),
                                params.str()));
        break;
      case CampaignKind::kInterceptResend:
        rows.push_back(row_from(intercept_resend_attack(spec.n, spec.trials, seed, spec.threads),
                                params.str()));
        break;
      case CampaignKind::kFraud: {
        const double h = 1.0 / std::sqrt(2.0);
        const FakeStateParams fake = spec.fake.value_or(FakeStateParams::single_qubit(h, h, h, h));
        rows.push_back(row_from(fraud_attack_trials(fake, spec.trials, seed, spec.threads),
                                params.str()));
        break;
      }
      case CampaignKind::kNoise: {
        // Rounds with r14 ^ r23 != k_m, over every round of every run; decoy
        // checks are not allowed to abort.
        const std::size_t bad = parallel_count(spec.trials, spec.threads, [&](std::size_t i) {
          ProtocolConfig cfg;
          cfg.n = 1;
          cfg.seed = derive_seed(seed, i);
          cfg.noise = spec.noise;
          cfg.decoy_error_threshold = std::numeric_limits<std::size_t>::max();
          return !run_protocol(cfg).rounds.front().match;
        });
        const double observed = static_cast<double>(bad) / static_cast<double>(spec.trials);
        const double analytic = noise_error_probability(spec.noise);
        params << ";noise=" << noise_label(spec.noise);
        rows.push_back({"noise", params.str(), observed, analytic, std::abs(observed - analytic),
                        spec.trials});
        break;
      }
      case CampaignKind::kTable: {
        std::size_t ok = 0;
        const std::vector<XorCheckRow> table = xor_correlation_rows();
        for (const XorCheckRow& r : table) ok += r.match ? 1 : 0;
        const double observed = static_cast<double>(ok) / static_cast<double>(table.size());
        rows.push_back({"table", "pairs=16;outcomes=4", observed, 1.0, std::abs(observed - 1.0),
                        table.size()});
        break;
      }
    }
  }
  return rows;
}

void write_results_csv(std::ostream& os, const std::vector<ResultRow>& rows) {
  os << "campaign,params,observed,analytic,gap,trials\n";
  const auto old_precision = os.precision(17);
  for (const ResultRow& r : rows) {
    os << r.campaign << "," << r.parameters << "," << r.observed << "," << r.analytic << ","
       << r.gap << "," << r.trials << "\n";
  }
  os.precision(old_precision);
}

std::vector<ResultRow> run_campaign(const CampaignSpec& spec, const std::string& path) {
  std::vector<ResultRow> rows = monte_carlo(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_results_csv(out, rows);
  if (!out) throw std::runtime_error("failed writing " + path);
  return rows;
}

}  // namespace qiaswap
