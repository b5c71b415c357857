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


#include <benchmark/benchmark.h>

#include "qiaswap/attacks.h"
#include "qiaswap/bellmap.h"
#include "qiaswap/protocol.h"
#include "qiaswap/pure_state.h"

namespace qiaswap {
namespace {

void BM_Cnot6(benchmark::State& state) {
  PureState s = tensor(tensor(prepare_bell(BellLabel::kPsiMinus, 1, 2), prepare_bell(BellLabel::kPhiPlus, 3, 4)),
                       prepare_bell(BellLabel::kPhiPlus, 5, 6));
  for (auto _ : state) {
    s = apply_cnot(s, 2, 5);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_Cnot6);

void BM_BellJointDistribution(benchmark::State& state) {
  const PureState s = authenticated_composite(TwoBitKey(1, 1), TwoBitKey(0, 0));
  for (auto _ : state) benchmark::DoNotOptimize(bell_joint_distribution(s, {1, 4}, {2, 3}));
}
BENCHMARK(BM_BellJointDistribution);

void BM_RunProtocol(benchmark::State& state) {
  ProtocolConfig cfg;
  cfg.n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = ++seed;
    benchmark::DoNotOptimize(run_protocol(cfg));
  }
}
BENCHMARK(BM_RunProtocol)->Arg(1)->Arg(8)->Arg(64);

void BM_FraudCircuit(benchmark::State& state) {
  const auto p = FakeStateParams::entangled(0.5, 0.5, 0.5, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(fraudulent_attack_detection(p));
}
BENCHMARK(BM_FraudCircuit);

void BM_FraudGridSingle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraudulent_attack_minimize(FakeStateParams::Mode::kSingleQubit, 32));
  }
}
BENCHMARK(BM_FraudGridSingle)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qiaswap

BENCHMARK_MAIN();
