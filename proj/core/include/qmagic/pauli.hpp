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

#include "qmagic/dense.hpp"

namespace qmagic {

// omega_D^{phase_exponent} P(a, b); a, b reduced mod d, phase mod D.
struct PauliLabel {
  std::vector<int> a;
  std::vector<int> b;
  int phase_exponent = 0;

  // Reduces components; throws ShapeError on length mismatch.
  static PauliLabel canonical(const QuditSystem &system, const std::vector<long> &a, const std::vector<long> &b,
                              long phase_exponent = 0);
  bool operator==(const PauliLabel &) const = default;
};

DenseOperator make_shift(const QuditSystem &system);
DenseOperator make_clock(const QuditSystem &system);
DenseOperator heisenberg_weyl(const QuditSystem &system, const PauliLabel &label);

// k such that the Weyl phase of the single-qudit P(a, b) is e^{i pi k / d}:
// omega^{ab 2^{-1}} for odd d, e^{i pi ab / d} with integer a, b for even d.
long weyl_half_exponent(unsigned d, long a, long b);

// Symplectic form on (a | b) coordinate vectors of length 2n:
// P(u) P(v) = omega^{<u, v>} P(v) P(u), <u, v> = sum_i (u_b v_a - u_a v_b) mod d.
long symplectic_form(unsigned d, const std::vector<int> &u, const std::vector<int> &v);

// Tr[P(u)^dagger V] / d^n for every (a | b) in Z_d^{2n}, lexicographic order.
std::vector<cplx> weyl_coefficients(const QuditSystem &system, const Matrix &v);

}  // namespace qmagic
