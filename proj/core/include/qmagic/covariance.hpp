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

#include <vector>

#include "qmagic/clifford.hpp"
#include "qmagic/phase_space.hpp"

namespace qmagic {

// u -> M u + shift over Z_modulus on coordinates (l_1..l_n, m_1..m_n).
class SymplecticAffineMap {
 public:
  // matrix is row-major 2n x 2n. Throws ValidationError unless M^T Omega M = Omega.
  SymplecticAffineMap(unsigned n, int modulus, std::vector<int> matrix, std::vector<int> shift);

  static SymplecticAffineMap identity(unsigned n, int modulus);

  unsigned n() const { return n_; }
  int modulus() const { return modulus_; }
  int at(unsigned row, unsigned col) const { return m_[row * 2 * n_ + col]; }
  const std::vector<int> &matrix() const { return m_; }
  const std::vector<int> &shift() const { return shift_; }

  std::vector<int> apply(const std::vector<int> &coords) const;
  PhasePoint apply(const PhasePoint &p) const;
  // The map "this, then next".
  SymplecticAffineMap then(const SymplecticAffineMap &next) const;
  bool is_symplectic() const;

 private:
  unsigned n_;
  int modulus_;
  std::vector<int> m_;
  std::vector<int> shift_;
};

// Coordinate action on a system of exactly arity(kind) qudits:
// U O_u U^dagger = O_{map(u)} over Z_{2d}.
SymplecticAffineMap clifford_coordinate_action(const QuditSystem &system, GateKind kind);
// Same, acting on `targets` of a larger system.
SymplecticAffineMap clifford_coordinate_action(const QuditSystem &system, GateKind kind,
                                               const std::vector<unsigned> &targets);
SymplecticAffineMap word_coordinate_action(const QuditSystem &system, const GateWord &word);

}  // namespace qmagic
