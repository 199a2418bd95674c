// Copyright 2026 The qmac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qmac/channels.hpp"
#include "qmac/cmac.hpp"
#include "qmac/infoq.hpp"
#include "qmac/random.hpp"
#include "qmac/regions.hpp"

namespace {

void BM_PhiApplyPure(benchmark::State& state) {
  const auto ch = qmac::phi_p(0.5);
  qmac::Rng rng = qmac::stream_rng(1, 0);
  const auto psi = qmac::haar_pure_state({4, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qmac::apply(ch, psi));
}
BENCHMARK(BM_PhiApplyPure);

void BM_GammaApplyDensity(benchmark::State& state) {
  const auto ch = qmac::gamma_p(0.5);
  qmac::Rng rng = qmac::stream_rng(2, 0);
  const auto rho = qmac::random_density({2, 4, 2}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qmac::apply(ch, rho));
}
BENCHMARK(BM_GammaApplyDensity);

void BM_VonNeumannEntropy(benchmark::State& state) {
  qmac::Rng rng = qmac::stream_rng(3, 0);
  const auto rho = qmac::random_density({static_cast<std::size_t>(state.range(0))}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qmac::von_neumann_entropy(rho));
}
BENCHMARK(BM_VonNeumannEntropy)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

void BM_Chi2PrimeProtocol(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qmac::chi2_prime_protocol(qmac::NoiseParameter(0.5)));
}
BENCHMARK(BM_Chi2PrimeProtocol);

void BM_Chi1BruteforceRestart(benchmark::State& state) {
  qmac::SearchConfig cfg;
  cfg.restarts = 2;
  cfg.seed = 4;
  for (auto _ : state) benchmark::DoNotOptimize(qmac::chi1_bruteforce(qmac::NoiseParameter(0.5), cfg));
}
BENCHMARK(BM_Chi1BruteforceRestart)->Unit(benchmark::kMillisecond);

void BM_MinkowskiSum(benchmark::State& state) {
  qmac::Rng rng = qmac::stream_rng(5, 0);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::vector<qmac::RatePoint> a(static_cast<std::size_t>(state.range(0))), b(a.size());
  for (auto& p : a) p = {u(rng), u(rng)};
  for (auto& p : b) p = {u(rng), u(rng)};
  const auto pa = qmac::convex_hull(a);
  const auto pb = qmac::convex_hull(b);
  for (auto _ : state) benchmark::DoNotOptimize(qmac::minkowski_sum(pa, pb));
}
BENCHMARK(BM_MinkowskiSum)->Arg(16)->Arg(256)->Arg(4096);

void BM_BlahutArimoto(benchmark::State& state) {
  const auto ch = qmac::lambda2_channel(qmac::NoiseParameter(0.5));
  for (auto _ : state) benchmark::DoNotOptimize(qmac::blahut_arimoto(ch));
}
BENCHMARK(BM_BlahutArimoto);

void BM_AdditivityCheck(benchmark::State& state) {
  qmac::Rng rng = qmac::stream_rng(6, 0);
  const auto c1 = qmac::random_mac({4, 4}, 4, rng);
  const auto c2 = qmac::random_mac({4, 4}, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(qmac::additivity_check(c1, c2, 1, 7));
}
BENCHMARK(BM_AdditivityCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
