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

#include <string>

#include "json.hpp"
#include "qmagic/gaussian_sim.hpp"
#include "qmagic/qp_simulator.hpp"

namespace qmagic::cli {

using json = nlohmann::json;

// Reads a whole file ("-" is standard input) or throws ValidationError.
std::string read_text(const std::string &path);
json read_json(const std::string &path);

// Complex entries are written as [re, im]; numbers are accepted as real.
cplx complex_from_json(const json &j);
json complex_to_json(cplx z);
Matrix matrix_from_json(const json &j);
json matrix_to_json(const Matrix &m);

// An input state is a name ("zero", "plus", "mixed", "T"), or an object with
// exactly one of: state, product (per-qudit names), generators (lines
// "a|b|phase"), vector, matrix.
DensityState state_from_json(const QuditSystem &system, const json &j);

// {"d", "n", "input", "gates": [...], "measurement": {...}}.
CircuitDescription circuit_from_json(const json &j, std::size_t dim_cap);

// {"d", "n", "input", "S" | "gates", "displacement", "samples", "seed"}.
struct GkpSimSpec {
  QuditSystem system;
  DensityState input;
  GaussianCircuit circuit;
  std::uint64_t samples;
  std::uint64_t seed;
};
GkpSimSpec gkp_sim_from_json(const json &j, std::size_t dim_cap);

QuditSystem system_from_json(const json &j, std::size_t dim_cap);

}  // namespace qmagic::cli
