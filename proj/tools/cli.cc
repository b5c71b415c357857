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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qiaswap/attacks.h"
#include "qiaswap/bellmap.h"
#include "qiaswap/campaign.h"
#include "qiaswap/noise.h"
#include "qiaswap/protocol.h"

namespace qiaswap::cli {
namespace {

constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

struct RunOptions {
  std::optional<std::size_t> n;
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string keys;
  std::string out;
  bool no_decoys = false;
};

int do_run(const RunOptions& o, std::ostream& out) {
  ProtocolConfig cfg;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw std::runtime_error("cannot read " + o.config);
    cfg = parse_config(in);
  }
  if (o.n) cfg.n = *o.n;
  if (o.seed) cfg.seed = *o.seed;
  if (!o.keys.empty()) cfg.keys = KeySequence::parse(o.keys);
  if (cfg.keys && o.n && *o.n != cfg.keys->rounds()) {
    throw std::invalid_argument("--n disagrees with the number of rounds in the key sequence");
  }
  if (o.no_decoys) cfg.decoys = false;

  const Transcript t = run_protocol(cfg);
  out << "keys " << t.keys.str() << "\n";
  out << "adversary " << describe(cfg.adversary) << "\n";
  for (const Announcement& a : t.announcements) {
    out << "  " << std::left << std::setw(8) << to_string(a.actor) << std::setw(19)
        << to_string(a.kind) << a.detail << "\n";
  }
  out << std::right;
  if (!t.rounds.empty()) write_transcript_csv(out, t);
  out << "Alice: " << t.alice.str() << "\n";
  out << "Bob:   " << t.bob.str() << "\n";
  if (!o.out.empty()) {
    std::ofstream f = open_output(o.out);
    write_transcript_csv(f, t);
  }
  return 0;
}

struct AttackOptions {
  std::string kind;
  std::size_t n = 6;
  std::size_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t repetitions = 1;
  unsigned threads = 0;
  bool check = false;
  std::string out;
  double a = 1.0 / std::numbers::sqrt2;
  double b = 1.0 / std::numbers::sqrt2;
  double c = 1.0 / std::numbers::sqrt2;
  double d = 1.0 / std::numbers::sqrt2;
  bool entangled = false;
  std::size_t minimize = 0;
};

void write_report_header(std::ostream& os) {
  os << "attack_kind,trials,detections,detection_rate,analytic_rate,abs_gap\n";
}

void write_report(std::ostream& os, const AttackReport& r) {
  const auto p = os.precision(17);
  os << r.attack_kind << "," << r.trials << "," << r.detections << "," << r.detection_rate << ","
     << r.analytic_rate << "," << r.abs_gap << "\n";
  os.precision(p);
}

int do_attack(const AttackOptions& o, std::ostream& out) {
  std::optional<FakeStateParams> fake;
  if (o.kind == "fraud") {
    fake = o.entangled ? FakeStateParams::entangled(o.a, o.b, o.c, o.d)
                       : FakeStateParams::single_qubit(o.a, o.b, o.c, o.d);
  }

  std::vector<AttackReport> reports;
  for (std::size_t rep = 0; rep < o.repetitions; ++rep) {
    const std::uint64_t seed = derive_seed(o.seed, rep);
    if (o.kind == "impersonation") {
      reports.push_back(impersonation_attack(o.n, o.trials, seed, o.threads));
    } else if (o.kind == "ir") {
      reports.push_back(intercept_resend_attack(o.n, o.trials, seed, o.threads));
    } else {
      reports.push_back(fraud_attack_trials(*fake, o.trials, seed, o.threads));
    }
  }

  write_report_header(out);
  for (const AttackReport& r : reports) write_report(out, r);
  if (!o.out.empty()) {
    std::ofstream f = open_output(o.out);
    write_report_header(f);
    for (const AttackReport& r : reports) write_report(f, r);
  }

  bool ok = true;
  for (const AttackReport& r : reports) {
    const double band = three_sigma(r.analytic_rate, r.trials);
    const bool inside = r.abs_gap <= band;
    ok = ok && inside;
    out << r.attack_kind << ": detected " << r.detections << "/" << r.trials << " (rate "
        << r.detection_rate << ", expected " << r.analytic_rate << ", 3 sigma " << band << ") "
        << (inside ? "consistent" : "OUTSIDE 3 sigma") << "\n";
  }

  if (o.kind == "impersonation") {
    out << "Holevo bound on particles 2,4: " << intercept_resend_holevo().chi << "\n";
  }
  if (fake) {
    const FraudResult exact = fraudulent_attack_detection(*fake);
    const double closed = 1.0 - fake->closed_form_nondetection();
    out << "circuit P_d " << exact.p_d << ", closed form " << closed << "\n";
    ok = ok && std::abs(exact.p_d - closed) <= 1e-10;
    if (o.minimize > 0) {
      const FraudMinimum m = fraudulent_attack_minimize(fake->mode(), o.minimize);
      out << "grid minimum P_d " << m.min_p_d << " over " << m.evaluations << " points at (a,b,c,d) = ("
          << m.best.a().real() << ", " << m.best.b().real() << ", " << m.best.c().real() << ", "
          << m.best.d().real() << ")\n";
    }
  }
  return o.check && !ok ? kCheckFailed : 0;
}

int do_noise_sweep(const std::string& mode, std::optional<std::size_t> steps,
                   const std::string& path, bool check, std::optional<double> p_limit,
                   std::ostream& out) {
  const NoiseFormula formula = mode == "rotation" ? NoiseFormula::kRotation : NoiseFormula::kDephasing;
  const std::size_t count = steps.value_or(formula == NoiseFormula::kDephasing ? 181 : 91);
  const std::vector<SweepRow> rows = noise_sweep(formula, count);
  if (path.empty()) {
    write_sweep_csv(out, rows);
  } else {
    std::ofstream f = open_output(path);
    write_sweep_csv(f, rows);
  }
  double worst = 0.0;
  for (const SweepRow& r : rows) worst = std::max(worst, std::abs(r.analytic - r.simulated));
  out << mode << ": " << rows.size() << " points, max |analytic - simulated| = " << worst << "\n";
  if (p_limit) {
    const AngleInterval iv = tolerable_region(formula, *p_limit);
    out << "error probability exceeds " << *p_limit << " for angles in ("
        << iv.low * 180.0 / std::numbers::pi << ", " << iv.high * 180.0 / std::numbers::pi
        << ") degrees\n";
  }
  return check && worst > 1e-10 ? kCheckFailed : 0;
}

int do_table(bool check, std::ostream& out) {
  out << render_swap_table(build_swap_table());
  const std::vector<XorCheckRow> rows = xor_correlation_rows();
  out << render_xor_check(rows);
  const auto good = std::count_if(rows.begin(), rows.end(), [](const XorCheckRow& r) { return r.match; });
  return check && static_cast<std::size_t>(good) != rows.size() ? kCheckFailed : 0;
}

int do_curve(std::size_t n_max, std::ostream& out) {
  out << "n,detection_probability\n" << std::setprecision(17);
  for (const CurvePoint& p : detection_curve(n_max)) out << p.n << "," << p.detection << "\n";
  return 0;
}

int do_demo(std::ostream& out) {
  const TwoBitKey km(1, 1);
  const TwoBitKey km1(0, 0);
  out << "keys (k_m, k_m+1) = (" << km << ", " << km1 << ")\n";
  out << "Alice prepares " << key_to_bell(km1) << " on (1,2), Bob prepares "
      << key_to_bell(km ^ km1) << " on (3,4); both apply " << key_to_pauli(km) << "\n";
  out << "R14,R23,r14,r23,xor,probability\n";
  const PureState s = authenticated_composite(km, km1);
  for (const BellBranch& first : bell_pair_branches(s, 1, 4)) {
    if (!first.remainder) continue;
    for (const BellBranch& second : bell_pair_branches(*first.remainder, 2, 3)) {
      const double p = first.probability * second.probability;
      if (p < 1e-12) continue;
      const TwoBitKey r14 = bell_to_key(first.label);
      const TwoBitKey r23 = bell_to_key(second.label);
      out << first.label << "," << second.label << "," << r14 << "," << r23 << ","
          << (r14 ^ r23) << "," << p << "\n";
    }
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bell-state swapping identity authentication simulator", "qiaswap"};
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Execute one authentication run and print its transcript");
  run_cmd->add_option("--n", run_opts.n, "Rounds");
  run_cmd->add_option("--seed", run_opts.seed, "Generator seed");
  run_cmd->add_option("--config", run_opts.config, "key=value configuration file");
  run_cmd->add_option("--keys", run_opts.keys, "Pre-shared keys, e.g. 11,00,01");
  run_cmd->add_option("--out", run_opts.out, "Write the per-round CSV here");
  run_cmd->add_flag("--no-decoys", run_opts.no_decoys, "Send particles without decoys");

  AttackOptions attack_opts;
  auto* attack_cmd = app.add_subcommand("attack", "Monte Carlo attack campaign");
  attack_cmd->add_option("kind", attack_opts.kind, "impersonation | ir | fraud")
      ->required()
      ->check(CLI::IsMember({"impersonation", "ir", "fraud"}));
  attack_cmd->add_option("--n", attack_opts.n, "Rounds (decoys for ir)")->capture_default_str();
  attack_cmd->add_option("--trials", attack_opts.trials, "Trials per repetition")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  attack_cmd->add_option("--seed", attack_opts.seed, "Campaign seed")->capture_default_str();
  attack_cmd->add_option("--repetitions", attack_opts.repetitions)
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  attack_cmd->add_option("--threads", attack_opts.threads, "Workers, 0 for all cores");
  attack_cmd->add_flag("--check", attack_opts.check, "Fail unless every rate is within 3 sigma");
  attack_cmd->add_option("--out", attack_opts.out, "Write the report rows here");
  attack_cmd->add_option("--a", attack_opts.a, "Fake-state amplitude a");
  attack_cmd->add_option("--b", attack_opts.b, "Fake-state amplitude b");
  attack_cmd->add_option("--c", attack_opts.c, "Fake-state amplitude c");
  attack_cmd->add_option("--d", attack_opts.d, "Fake-state amplitude d");
  attack_cmd->add_flag("--entangled", attack_opts.entangled,
                       "Treat a..d as one two-qubit fake state");
  attack_cmd->add_option("--minimize", attack_opts.minimize,
                         "Also grid-minimize P_d at this resolution");

  std::string sweep_mode = "dephasing";
  std::optional<std::size_t> sweep_steps;
  std::string sweep_out;
  bool sweep_check = false;
  std::optional<double> p_limit;
  auto* sweep_cmd = app.add_subcommand("noise-sweep", "Error probability against noise angle");
  sweep_cmd->add_option("--mode", sweep_mode)
      ->capture_default_str()
      ->check(CLI::IsMember({"dephasing", "rotation"}));
  sweep_cmd->add_option("--steps", sweep_steps, "Grid points, endpoints included");
  sweep_cmd->add_option("--out", sweep_out, "Write the CSV here instead of stdout");
  sweep_cmd->add_flag("--check", sweep_check, "Fail if simulation and formula differ by > 1e-10");
  sweep_cmd->add_option("--p-limit", p_limit, "Report the angle band above this error rate");

  bool table_check = false;
  auto* table_cmd = app.add_subcommand("table", "Entanglement-swapping table and XOR check");
  table_cmd->add_flag("--check", table_check, "Fail unless all 64 branches correlate");

  std::size_t curve_n = 10;
  auto* curve_cmd = app.add_subcommand("curve", "Impersonation detection probability against n");
  curve_cmd->add_option("--n", curve_n, "Largest n")->capture_default_str()->check(CLI::PositiveNumber);

  auto* demo_cmd = app.add_subcommand("demo", "Outcome branches of one honest round at keys 11,00");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (run_cmd->parsed()) return do_run(run_opts, out);
    if (attack_cmd->parsed()) return do_attack(attack_opts, out);
    if (sweep_cmd->parsed()) {
      return do_noise_sweep(sweep_mode, sweep_steps, sweep_out, sweep_check, p_limit, out);
    }
    if (table_cmd->parsed()) return do_table(table_check, out);
    if (curve_cmd->parsed()) return do_curve(curve_n, out);
    if (demo_cmd->parsed()) return do_demo(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace qiaswap::cli
