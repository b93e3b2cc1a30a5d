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

#pragma once

#include <cstdint>
#include <random>

#include "qmagic/dense.hpp"

namespace qmagic {

std::uint64_t splitmix64(std::uint64_t x);

// mt19937_64 with portable derived draws (no std:: distributions, whose
// output is implementation-defined). Stream k of seed s is seeded with
// splitmix64(s + k).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return eng_(); }
  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, n), unbiased.
  std::uint64_t below(std::uint64_t n);
  double normal();

 private:
  std::mt19937_64 eng_;
};

// Normalized complex Gaussian vector (Haar-distributed direction).
Vector haar_vector(std::size_t dim, Rng &rng);
DensityState haar_pure_state(const QuditSystem &system, Rng &rng);
// Ginibre ensemble: G G^dagger / Tr, G of shape dim x rank.
DensityState random_mixed_state(const QuditSystem &system, Rng &rng, unsigned rank);
// Haar-random unitary via QR of a complex Gaussian matrix.
Matrix haar_unitary(std::size_t dim, Rng &rng);

}  // namespace qmagic
