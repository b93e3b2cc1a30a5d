// Copyright 2026 The qmagic Authors
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

#include <string>
#include <vector>

#include "qmagic/gaussian_sim.hpp"
#include "qmagic/gkp_bridge.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/qp_simulator.hpp"
#include "qmagic/random.hpp"
#include "qmagic/stabilizer.hpp"
#include "qmagic/states.hpp"

using namespace qmagic;

namespace {

// d = state.range(0), n = state.range(1)
DensityState random_state(const benchmark::State &state) {
  const QuditSystem sys(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
  Rng rng(1);
  return haar_pure_state(sys, rng);
}

void BM_XDistribution(benchmark::State &state) {
  const DensityState rho = random_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(x_distribution(rho));
}
BENCHMARK(BM_XDistribution)->Args({2, 2})->Args({2, 4})->Args({3, 2})->Args({3, 3})->Args({5, 2});

void BM_StabilizerRenyi(benchmark::State &state) {
  const DensityState rho = random_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_renyi(rho, 2.0));
}
BENCHMARK(BM_StabilizerRenyi)->Args({2, 2})->Args({2, 4})->Args({3, 3});

void BM_Theorem1(benchmark::State &state) {
  const DensityState rho = random_state(state);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(rho, 2.0));
}
BENCHMARK(BM_Theorem1)->Args({2, 1})->Args({3, 2})->Args({5, 2});

// Sparse stabilizer coefficients versus building the dense state first; both
// fill the full Z_{2d} domain.
void BM_StabilizerSparse(benchmark::State &state) {
  const QuditSystem sys(static_cast<unsigned>(state.range(0)), 2);
  const std::string zz = "0,0|1," + std::to_string(sys.d() - 1) + "|0";
  const StabilizerGroup g = parse_generator_lines(sys, "1,1|0,0|0\n" + zz);
  if (state.range(1) == 0) {
    for (auto _ : state) benchmark::DoNotOptimize(stabilizer_x_sparse(g));
  } else {
    for (auto _ : state) benchmark::DoNotOptimize(x_distribution(stabilizer_state(g), Domain::Full));
  }
}
BENCHMARK(BM_StabilizerSparse)->ArgsProduct({{3, 5, 7}, {0, 1}});

void BM_Simulate(benchmark::State &state) {
  const QuditSystem sys(2, static_cast<unsigned>(state.range(0)));
  std::vector<Gate> gates;
  for (unsigned q = 0; q < sys.n(); ++q) {
    gates.push_back(Gate::generator(sys, GateKind::Fourier, {q}));
    gates.push_back(Gate::unitary(sys, t_gate_matrix(), {q}, "T"));
  }
  for (unsigned q = 0; q + 1 < sys.n(); ++q) gates.push_back(Gate::generator(sys, GateKind::Sum, {q, q + 1}));
  const CircuitDescription c(sys, named_state(sys, "zero"), std::move(gates),
                             MeasurementEffect::computational(sys, {0}, {0}));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_born(c, 0.1, 0.05, ++seed, 1));
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HomodyneDraw(benchmark::State &state) {
  const DensityState rho = random_state(state);
  const HomodyneSampler sampler(rho, GaussianCircuit::identity(rho.system().n()));
  Rng rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}
BENCHMARK(BM_HomodyneDraw)->Args({2, 1})->Args({3, 2});

}  // namespace

BENCHMARK_MAIN();
