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

// End-to-end acceptance checks. Prints one [PASS]/[FAIL] line per criterion
// and exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../fixtures.h"
#include "qiaswap/attacks.h"
#include "qiaswap/bellmap.h"
#include "qiaswap/campaign.h"
#include "qiaswap/noise.h"
#include "qiaswap/protocol.h"

namespace qiaswap {
namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os << std::setprecision(precision) << x;
  return os.str();
}

// 1
Outcome outcome_table() {
  Outcome o;
  const PureState s = authenticated_composite(TwoBitKey(1, 1), TwoBitKey(0, 0));
  std::set<std::pair<BellLabel, BellLabel>> branches;
  for (const BellBranch& a : bell_pair_branches(s, 1, 4)) {
    if (!a.remainder) continue;
    for (const BellBranch& b : bell_pair_branches(*a.remainder, 2, 3)) {
      if (!b.remainder) continue;
      branches.insert({a.label, b.label});
      o.require((bell_to_key(a.label) ^ bell_to_key(b.label)) == TwoBitKey(1, 1),
                "branch XOR equals 11");
    }
  }
  const std::set<std::pair<BellLabel, BellLabel>> table(fixtures::kOutcomeTable1100.begin(),
                                                        fixtures::kOutcomeTable1100.end());
  o.require(branches == table, "outcome set equals the four reference rows");
  o.note(std::to_string(branches.size()) + " branches");
  return o;
}

// 2
Outcome swap_fixtures() {
  Outcome o;
  for (const auto& ref : fixtures::kSwapExpansions) {
    const DoubleBellCoefficients d =
        bell_coefficients(authenticated_composite(ref.key_m, ref.key_m1), {1, 4}, {2, 3});
    DoubleBellCoefficients r{};
    for (const auto& t : ref.terms) r[index_of(t.r14)][index_of(t.r23)] = 0.5 * t.sign;
    Complex overlap = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) overlap += std::conj(r[i][j]) * d[i][j];
    // Orthogonal vectors have no phase to align; compare as printed.
    const Complex phase = std::abs(overlap) > 1e-12 ? overlap / std::abs(overlap) : Complex(1);
    double gap = 0;
    std::vector<std::string> flipped;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const double e = std::abs(d[i][j] - phase * r[i][j]);
        gap = std::max(gap, e);
        if (!(e <= 1e-10)) {
          std::ostringstream t;
          t << "(" << kAllBellLabels[i] << "," << kAllBellLabels[j] << ")";
          flipped.push_back(t.str());
        }
      }
    }
    std::ostringstream label;
    label << "keys " << ref.key_m << "," << ref.key_m1;
    if (gap <= 1e-10) {
      o.note(label.str() + " match");
    } else {
      std::string terms;
      for (const auto& f : flipped) terms += " " + f;
      o.require(false, label.str() + " reference signs differ on" + terms);
    }
  }
  // The computational-basis form of the (11,00) state decides which signs are right.
  Eigen::VectorXcd comp = Eigen::VectorXcd::Zero(16);
  for (const auto& t : fixtures::kKeys1100Computational) comp(static_cast<Eigen::Index>(t.bits)) = 0.5 * t.sign;
  const bool comp_ok = equal_up_to_phase(authenticated_composite(TwoBitKey(1, 1), TwoBitKey(0, 0)),
                                         PureState({1, 2, 3, 4}, comp));
  o.note(std::string("derived (11,00) state ") + (comp_ok ? "matches" : "does NOT match") +
         " the reference computational-basis expansion");
  return o;
}

// 3
Outcome xor_theorem() {
  Outcome o;
  const auto rows = xor_correlation_rows();
  std::size_t good = 0;
  for (const auto& r : rows) good += r.match;
  o.require(rows.size() == 64, "64 rows");
  o.require(good == rows.size(), "every branch satisfies r14 ^ r23 = k_m");
  o.note(std::to_string(good) + "/" + std::to_string(rows.size()));
  return o;
}

// 4
Outcome impersonation() {
  Outcome o;
  for (std::size_t n : {1, 2, 4, 6}) {
    const AttackReport r = impersonation_attack(n, 100000, 1000 + n);
    const double band = three_sigma(r.analytic_rate, r.trials);
    o.note("n=" + std::to_string(n) + " rate " + fmt(r.detection_rate) + " vs " +
           fmt(r.analytic_rate) + " (3s " + fmt(band, 3) + ")");
    o.require(r.abs_gap <= band, "n=" + std::to_string(n) + " within 3 sigma");
  }
  const auto curve = detection_curve(12);
  bool monotone = true;
  for (std::size_t i = 1; i < curve.size(); ++i) monotone = monotone && curve[i].detection > curve[i - 1].detection;
  o.require(monotone, "analytic curve monotone");
  o.require(curve[5].detection > 0.999, "analytic detection > 0.999 at n=6");
  return o;
}

// 5
Outcome holevo_zero() {
  Outcome o;
  const HolevoResult h = intercept_resend_holevo();
  const double dev = (h.rho24.matrix() - Eigen::MatrixXcd::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff();
  o.require(std::abs(h.chi) <= 1e-10, "chi = 0");
  o.require(dev <= 1e-10, "rho24 = I/4 entrywise");
  o.note("chi " + fmt(h.chi, 3) + ", max |rho24 - I/4| " + fmt(dev, 3));
  return o;
}

// 6
Outcome fraud() {
  Outcome o;
  Rng rng(606);
  auto gauss = [&] {
    const double u1 = 1.0 - uniform01(rng), u2 = uniform01(rng);
    return std::sqrt(-2 * std::log(u1)) * std::cos(2 * M_PI * u2);
  };
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = Complex(gauss(), gauss());
    Eigen::Vector2cd x = v.head<2>().normalized(), y = v.tail<2>().normalized();
    const FakeStateParams s = FakeStateParams::single_qubit(x(0), x(1), y(0), y(1));
    const double closed_s = 1 - 0.5 * (std::norm(x(0) * y(0)) + std::norm(x(1) * y(1)));
    worst = std::max(worst, std::abs(fraudulent_attack_detection(s).p_d - closed_s));
    v.normalize();
    const FakeStateParams e = FakeStateParams::entangled(v(0), v(1), v(2), v(3));
    const double closed_e = 1 - 0.5 * (std::norm(v(0)) + std::norm(v(3)));
    worst = std::max(worst, std::abs(fraudulent_attack_detection(e).p_d - closed_e));
  }
  o.require(worst <= 1e-9, "circuit P_d equals closed forms on 100 draws per mode");
  o.note("max |P_d - closed form| " + fmt(worst, 3));

  const FraudMinimum single = fraudulent_attack_minimize(FakeStateParams::Mode::kSingleQubit, 64);
  const FraudMinimum ent = fraudulent_attack_minimize(FakeStateParams::Mode::kEntangled, 64);
  std::ostringstream where;
  where << "single-qubit grid min " << fmt(single.min_p_d) << " at (a,b,c,d)=(" << fmt(single.best.a().real(), 3)
        << "," << fmt(single.best.b().real(), 3) << "," << fmt(single.best.c().real(), 3) << ","
        << fmt(single.best.d().real(), 3) << "); entangled grid min " << fmt(ent.min_p_d);
  o.note(where.str());
  o.require(std::abs(single.min_p_d - 0.75) <= 1e-3, "single-qubit grid minimum = 3/4");
  o.require(std::abs(ent.min_p_d - 0.5) <= 1e-3, "entangled grid minimum = 1/2");
  return o;
}

// 7
Outcome noise_curves() {
  Outcome o;
  const auto dp = noise_sweep(NoiseFormula::kDephasing, 181);
  const auto rt = noise_sweep(NoiseFormula::kRotation, 91);
  double worst = 0;
  for (const auto& r : dp) {
    const double phi = r.angle_degrees * M_PI / 180;
    worst = std::max(worst, std::abs(r.simulated - std::pow(std::sin(phi), 2) / 2));
  }
  for (const auto& r : rt) {
    const double th = r.angle_degrees * M_PI / 180;
    worst = std::max(worst, std::abs(r.simulated - 2 * std::pow(std::sin(th) * std::cos(th), 2)));
  }
  o.require(dp.size() == 181 && rt.size() == 91, "grid sizes");
  o.require(worst <= 1e-10, "simulated error mass equals formulas");
  o.require(std::abs(dp[90].simulated - 0.5) <= 1e-10 && std::abs(rt[45].simulated - 0.5) <= 1e-10,
            "maxima 0.5 at 90/45 degrees");
  o.require(std::abs(dp[0].simulated) <= 1e-10 && std::abs(dp[180].simulated) <= 1e-10 &&
                std::abs(rt[0].simulated) <= 1e-10 && std::abs(rt[90].simulated) <= 1e-10,
            "zeros at 0/180 and 0/90 degrees");
  o.note("max deviation " + fmt(worst, 3));
  return o;
}

// 8
Outcome honest_completeness() {
  Outcome o;
  std::size_t good = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    ProtocolConfig cfg;
    cfg.n = 8;
    cfg.seed = derive_seed(808, i);
    const Transcript t = run_protocol(cfg);
    good += t.both_authenticated() && t.total_decoy_errors() == 0 && !t.aborted;
  }
  o.require(good == 1000, "all runs doubly authenticated with zero decoy errors");
  o.note(std::to_string(good) + "/1000");
  return o;
}

// 9
Outcome decoy_soundness() {
  Outcome o;
  const AttackReport r = intercept_resend_attack(16, 10000, 909);
  const double band = three_sigma(r.analytic_rate, r.trials);
  o.require(r.abs_gap <= band, "rejection rate within 3 sigma of 1 - (3/4)^16");
  o.note("rate " + fmt(r.detection_rate) + " vs " + fmt(r.analytic_rate) + " (3s " + fmt(band, 3) + ")");
  return o;
}

// 10
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  auto read = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  std::size_t files = 0;
  for (CampaignKind kind : {CampaignKind::kProtocol, CampaignKind::kImpersonation,
                            CampaignKind::kInterceptResend, CampaignKind::kFraud, CampaignKind::kNoise}) {
    CampaignSpec spec;
    spec.kind = kind;
    spec.repetitions = 3;
    spec.trials = 300;
    spec.seed = 1010;
    spec.n = 4;
    spec.noise = NoiseParams::rotation(0.3);
    const auto a = dir / ("qiaswap_acceptance_" + std::string(to_string(kind)) + "_a.csv");
    const auto b = dir / ("qiaswap_acceptance_" + std::string(to_string(kind)) + "_b.csv");
    spec.threads = 1;
    run_campaign(spec, a.string());
    spec.threads = 4;
    run_campaign(spec, b.string());
    const std::string x = read(a);
    o.require(!x.empty() && x == read(b), std::string(to_string(kind)) + " files identical");
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    ++files;
  }
  o.note(std::to_string(files) + " campaign kinds, 1 vs 4 threads");
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace qiaswap

int main() {
  using namespace qiaswap;
  const std::vector<Criterion> criteria = {
      {1, "honest-round outcome table for keys 11,00", 1, outcome_table},
      {2, "worked swap expansions sign-for-sign", 0, swap_fixtures},
      {3, "XOR correlation over 16 key pairs x 4 outcomes", 1, xor_theorem},
      {4, "impersonation detection vs 1-(1/4)^n", 30, impersonation},
      {5, "intercept-resend Holevo quantity", 1, holevo_zero},
      {6, "fake-qubit attack closed forms and grid minima", 60, fraud},
      {7, "collective noise error curves", 30, noise_curves},
      {8, "honest completeness, 1000 runs at n=8", 30, honest_completeness},
      {9, "decoy soundness, 16 decoys, 10^4 trials", 60, decoy_soundness},
      {10, "byte-identical campaign output", 0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.notes.push_back("FAILED: runtime over " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << " " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s)" << std::defaultfloat << "\n";
    for (const std::string& n : o.notes) std::cout << "         " << n << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
