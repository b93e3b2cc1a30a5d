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

#include <utility>
#include <vector>

#include "qmagic/dense.hpp"
#include "qmagic/phase_space.hpp"

namespace qmagic {

// M_l = sum_{u+v = l mod d} |u><v|; single qudit.
DenseOperator m_operator(const QuditSystem &system, int l);

// O_{l,m} = e^{-i pi m l/d} M_l Z^m, tensored over qudits. Point components
// are read as integers, so both restricted and full points are accepted.
DenseOperator o_operator(const QuditSystem &system, const PhasePoint &point);

// Closed form: even d gives 1+(-1)^m (l even) or 0 (l odd); odd d gives (-1)^{ml}.
cplx o_trace(const QuditSystem &system, const PhasePoint &point);

enum class ShiftWhich { L, M, Both };
// Sign s with O at the shifted coordinates = s * O_{l,m}.
int phase_shift_rule(unsigned d, int l, int m, ShiftWhich which);

// Restricted representative p' of a point and the sign s with O_p = s O_{p'}.
std::pair<PhasePoint, int> reduce_to_restricted(const QuditSystem &system, const PhasePoint &point);
// Same on a raw coordinate vector (l..., m...) of integers; writes the reduced
// coordinates into `out` and returns the sign.
int reduce_coords(unsigned d, const std::vector<int> &coords, std::vector<int> &out);

// A(a1, a2) = d^{-n} sum_v omega^{-<a, v>} P(v)^dagger; odd d only.
DenseOperator phase_point_operator(const QuditSystem &system, const std::vector<int> &a1, const std::vector<int> &a2);

// Tr(O_u V) for every u of the domain, lexicographic grid order. Uses the
// permutation structure of O (no dense products).
std::vector<cplx> o_traces_against(const QuditSystem &system, const Matrix &v, Domain domain);

}  // namespace qmagic
