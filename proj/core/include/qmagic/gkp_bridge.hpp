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

#include <optional>

#include "qmagic/measures.hpp"

namespace qmagic {

enum class LatticeKind { Wigner, Characteristic };

// Weights of the delta peaks of an ideal GKP state over one unit cell,
// indexed by Z_{2d}^{2n}. The CV function is prefactor * sum_u value(u) delta_u.
struct GkpLatticeCoefficients {
  QuditSystem system;
  LatticeKind kind;
  QuasiDistribution values;
  double prefactor;  // Wigner (d/8pi)^{n/2}; characteristic (2pi/d)^{n/2}
};

// Extends a restricted x table to Z_{2d}^{2n} using O_{l+d,m} = (-1)^m O_{l,m}
// and O_{l,m+d} = (-1)^l O_{l,m}.
QuasiDistribution extend_to_full(const QuasiDistribution &restricted);

GkpLatticeCoefficients gkp_wigner_coefficients(const DensityState &rho);
// gamma(l, m) = e^{-i pi l.m/d} Tr[rho X^l Z^m] over the unit cell.
GkpLatticeCoefficients gkp_char_coefficients(const DensityState &rho);

// (sum_u (prefactor |value(u)|)^p)^{1/p}.
double cell_lp_norm(const GkpLatticeCoefficients &coeffs, double p);
// The common value of cell_lp_norm on every pure stabilizer state.
double stabilizer_cell_norm(LatticeKind kind, unsigned d, unsigned n, double p);

struct TheoremReport {
  double lhs;       // d^{n(1-1/p)} ||f||_p of the discrete function
  double rhs;       // cell-norm ratio of the GKP encoding
  double residual;  // |lhs - rhs|
  // Wigner-cell identity, odd d only: d^{n(1-1/p)} ||W||_p.
  std::optional<double> wigner_lhs;
  // Characteristic-cell identity, alpha = p/2 != 1: direct and cell-norm M_alpha.
  std::optional<double> renyi_direct;
  std::optional<double> renyi_reconstructed;
};

// Wigner-frame cell identity: d^{n(1-1/p)} ||x_rho||_p equals the GKP cell ratio.
TheoremReport verify_theorem1(const DensityState &rho, double p);
// Characteristic-frame cell identity for ||chi_rho||_p.
TheoremReport verify_theorem2(const DensityState &rho, double p);

}  // namespace qmagic
