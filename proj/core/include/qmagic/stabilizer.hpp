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

#include <string_view>
#include <vector>

#include "qmagic/measures.hpp"

namespace qmagic {

// e^{i pi phase/d} X^a Z^b (plain product, no Weyl phase); label = (a | b).
struct StabilizerElement {
  std::vector<int> label;
  long phase;
};

// Generators s_i in (a | b) coordinates and the phase vector v: the group is
// generated by omega^{<v, s_i>} P(s_i).
class StabilizerGroup {
 public:
  // Throws NonCommutingGenerators, or DependentGenerators when the generated
  // group is not of order d^n (or contains a nontrivial multiple of 1).
  StabilizerGroup(const QuditSystem &system, std::vector<std::vector<int>> generators, std::vector<int> phase_vector);

  // Generator i stabilizes the state with eigenvalue convention
  // omega^{phases[i]} P(s_i) |psi> = |psi>; v is solved for.
  static StabilizerGroup from_eigenphases(const QuditSystem &system, std::vector<std::vector<int>> generators,
                                          const std::vector<int> &phases);

  const QuditSystem &system() const { return system_; }
  const std::vector<std::vector<int>> &generators() const { return generators_; }
  const std::vector<int> &phase_vector() const { return v_; }
  const std::vector<StabilizerElement> &elements() const { return elements_; }

 private:
  QuditSystem system_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> v_;
  std::vector<StabilizerElement> elements_;
};

DensityState stabilizer_state(const StabilizerGroup &group);
// x over Z_{2d}^{2n} without forming rho: closed form for odd d, exact
// character sum over the group for even d.
QuasiDistribution stabilizer_x_sparse(const StabilizerGroup &group);

// d prime (d(d+1) states) or d = 4.
std::vector<StabilizerGroup> enumerate_single_qudit_stabilizer_groups(unsigned d);
std::vector<DensityState> enumerate_single_qudit_stabilizers(unsigned d);

// One generator per line, "a1,...,an|b1,...,bn|phase"; blank lines and
// lines starting with '#' are skipped.
StabilizerGroup parse_generator_lines(const QuditSystem &system, std::string_view text);

}  // namespace qmagic
