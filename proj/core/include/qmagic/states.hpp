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

#include "qmagic/dense.hpp"

namespace qmagic {

DensityState basis_state(const QuditSystem &system, const std::vector<int> &digits);
DensityState zero_state(const QuditSystem &system);
// Uniform superposition on every qudit.
DensityState plus_state(const QuditSystem &system);
DensityState maximally_mixed(const QuditSystem &system);
// (|0> + e^{i pi/4}|1>)/sqrt 2 on every qubit; d must be 2.
DensityState t_state(const QuditSystem &system);
// "zero", "plus", "mixed", "T" (also "t").
DensityState named_state(const QuditSystem &system, std::string_view name);

// diag(1, e^{i pi/4}); single qubit.
Matrix t_gate_matrix();

}  // namespace qmagic
