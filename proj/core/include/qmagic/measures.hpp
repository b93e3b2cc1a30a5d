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
#include "qmagic/phase_space.hpp"

namespace qmagic {

// Coefficients whose magnitude is below this are dropped from norms.
inline constexpr double kNormCutoff = 1e-12;

// Dense table over a PhaseGrid in lexicographic order.
class QuasiDistribution {
 public:
  QuasiDistribution(const QuditSystem &system, Domain domain, std::vector<cplx> values);

  const QuditSystem &system() const { return system_; }
  Domain domain() const { return grid_.domain(); }
  const PhaseGrid &grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<cplx> &values() const { return values_; }
  cplx operator[](std::size_t index) const { return values_[index]; }
  cplx at(const PhasePoint &p) const;
  std::size_t count_nonzero(double tol = kNormCutoff) const;
  // Largest |imaginary part|.
  double max_imag() const;

 private:
  QuditSystem system_;
  PhaseGrid grid_;
  std::vector<cplx> values_;
};

// (sum |f|^p)^{1/p}; entries below kNormCutoff are treated as zero.
double lp_norm(const std::vector<cplx> &values, double p);
double lp_norm(const QuasiDistribution &dist, double p);

// x(u) = d^{-n} Tr(O_u V) for an arbitrary operator.
QuasiDistribution operator_coefficients(const QuditSystem &system, const Matrix &v, Domain domain);
QuasiDistribution x_distribution(const DensityState &rho, Domain domain = Domain::Restricted);

// W(u) = d^{-n} Tr[A(u) rho], points read as (a1 | a2); odd d only.
QuasiDistribution discrete_wigner(const DensityState &rho);

// sigma and sign with (-1)^{l.m} O_{l,m} = A(sigma(l, m)) on restricted points,
// found by matching operators; odd d only.
struct WignerPermutation {
  std::vector<std::size_t> target;  // restricted x index -> Wigner index
  std::vector<int> sign;            // sign[i] * O_i = A(target[i])
};
WignerPermutation wigner_permutation(const QuditSystem &system);

// chi(u) = d^{-n} Tr[rho P(u)^dagger], points read as (a | b).
QuasiDistribution characteristic_fn(const DensityState &rho);

double magic_negativity(const DensityState &rho);
// ||W||_1; odd d only.
double wigner_negativity(const DensityState &rho);
// M_alpha = (1-alpha)^{-1} log(d^{-n alpha} sum_P |Tr rho P|^{2 alpha}) - n log d, natural log.
double stabilizer_renyi(const DensityState &rho, double alpha);

struct Hyperpolyhedral {
  bool is_hyperpolyhedral;
  double value;
};
Hyperpolyhedral is_hyperpolyhedral(const DensityState &rho);

}  // namespace qmagic
