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
#include <string_view>
#include <vector>

#include "qmagic/dense.hpp"

namespace qmagic {

class Rng;

enum class GateKind { Fourier, Phase, Sum, Shift, Clock };

std::string_view to_string(GateKind kind);
// Accepts FOURIER, PHASE, SUM, SHIFT, CLOCK (case-insensitive); throws ValidationError.
GateKind parse_gate_kind(std::string_view name);
unsigned arity(GateKind kind);

// R = (1/sqrt d) sum omega^{js} |s><j|; P = diag(e^{i pi j^2/d}) for even d and
// diag(omega^{j(j-1)/2}) for odd d; SUM |i,j> -> |i,i+j>; SHIFT = X; CLOCK = Z.
// system.n() must equal arity(kind).
DenseOperator clifford_generator(const QuditSystem &system, GateKind kind);

// Local operator acting on `targets` (in that order), identity elsewhere.
DenseOperator embed(const QuditSystem &system, const Matrix &local, const std::vector<unsigned> &targets);

struct CliffordStep {
  GateKind kind;
  std::vector<unsigned> targets;
};
// Applied left to right: the first step acts first.
using GateWord = std::vector<CliffordStep>;

DenseOperator word_unitary(const QuditSystem &system, const GateWord &word);
// Uniform over generator kinds (SUM only for n >= 2) and over distinct targets.
GateWord random_clifford_word(const QuditSystem &system, std::size_t length, Rng &rng);

void validate_targets(const QuditSystem &system, const std::vector<unsigned> &targets, unsigned expected);

}  // namespace qmagic
