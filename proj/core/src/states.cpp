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

#include "qmagic/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmagic/errors.hpp"

namespace qmagic {

DensityState basis_state(const QuditSystem &system, const std::vector<int> &x) {
  if (x.size() != system.n()) throw ShapeError("basis_state: digit count must equal n");
  for (int v : x)
    if (v < 0 || v >= static_cast<int>(system.d())) throw ValidationError("basis_state: digit out of range");
  Vector psi = Vector::Zero(static_cast<Eigen::Index>(system.dim()));
  psi(static_cast<Eigen::Index>(from_digits(x, system.d()))) = 1.0;
  return DensityState::from_vector(system, psi);
}

DensityState zero_state(const QuditSystem &system) { return basis_state(system, std::vector<int>(system.n(), 0)); }

DensityState plus_state(const QuditSystem &system) {
  return DensityState::from_vector(system, Vector::Ones(static_cast<Eigen::Index>(system.dim())));
}

DensityState maximally_mixed(const QuditSystem &system) {
  const auto dim = static_cast<Eigen::Index>(system.dim());
  return DensityState(system, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityState t_state(const QuditSystem &system) {
  if (system.d() != 2) throw ValidationError("the T state is defined for qubits (d = 2) only");
  Vector one(2);
  one << 1.0, std::polar(1.0, std::numbers::pi / 4);
  Vector psi = Vector::Ones(1);
  for (unsigned i = 0; i < system.n(); ++i) psi = kron(psi, one);
  return DensityState::from_vector(system, psi);
}

DensityState named_state(const QuditSystem &system, std::string_view name) {
  if (name == "zero") return zero_state(system);
  if (name == "plus") return plus_state(system);
  if (name == "mixed") return maximally_mixed(system);
  if (name == "T" || name == "t") return t_state(system);
  throw ValidationError("unknown state name '" + std::string(name) + "' (expected zero, plus, mixed or T)");
}

Matrix t_gate_matrix() {
  Matrix t = Matrix::Zero(2, 2);
  t(0, 0) = 1.0;
  t(1, 1) = std::polar(1.0, std::numbers::pi / 4);
  return t;
}

}  // namespace qmagic
