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

#include "qmagic/gkp_bridge.hpp"

#include <cmath>
#include <numbers>

#include "qmagic/errors.hpp"
#include "qmagic/operator_basis.hpp"

namespace qmagic {

namespace {

double wigner_prefactor(unsigned d, unsigned n) { return std::pow(d / (8.0 * std::numbers::pi), n / 2.0); }
double char_prefactor(unsigned d, unsigned n) { return std::pow(2.0 * std::numbers::pi / d, n / 2.0); }

}  // namespace

QuasiDistribution extend_to_full(const QuasiDistribution &restricted) {
  if (restricted.domain() != Domain::Restricted) throw ValidationError("extend_to_full: input must be restricted");
  const QuditSystem &sys = restricted.system();
  const PhaseGrid full(sys, Domain::Full);
  std::vector<cplx> out(full.size());
  std::vector<int> c, red;
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    full.coords(idx, c);
    const int sign = reduce_coords(sys.d(), c, red);
    out[idx] = static_cast<double>(sign) * restricted[restricted.grid().index(red)];
  }
  return QuasiDistribution(sys, Domain::Full, std::move(out));
}

GkpLatticeCoefficients gkp_wigner_coefficients(const DensityState &rho) {
  const QuditSystem &sys = rho.system();
  return {sys, LatticeKind::Wigner, extend_to_full(x_distribution(rho, Domain::Restricted)),
          wigner_prefactor(sys.d(), sys.n())};
}

GkpLatticeCoefficients gkp_char_coefficients(const DensityState &rho) {
  const QuditSystem &sys = rho.system();
  const unsigned d = sys.d();
  const unsigned n = sys.n();
  const std::size_t dim = sys.dim();
  const PhaseGrid full(sys, Domain::Full);
  const Matrix &r = rho.matrix();
  std::vector<cplx> out(full.size());
  std::vector<int> c, xd(n), yd(n);
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    full.coords(idx, c);
    // Tr[rho X^l Z^m] = sum_x rho[x, x + l] omega^{m.x}
    cplx acc = 0.0;
    for (std::size_t x = 0; x < dim; ++x) {
      xd = digits(x, d, n);
      long k = 0;
      for (unsigned i = 0; i < n; ++i) {
        yd[i] = static_cast<int>(mod(xd[i] + c[i], d));
        k += static_cast<long>(c[n + i]) * xd[i];
      }
      acc += r(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(from_digits(yd, d))) * omega(d, k);
    }
    long lm = 0;
    for (unsigned i = 0; i < n; ++i) lm += static_cast<long>(c[i]) * c[n + i];
    out[idx] = root_2d(d, -lm) * acc;
  }
  return {sys, LatticeKind::Characteristic, QuasiDistribution(sys, Domain::Full, std::move(out)),
          char_prefactor(d, n)};
}

double cell_lp_norm(const GkpLatticeCoefficients &coeffs, double p) {
  if (!(p > 0.0)) throw ValidationError("cell_lp_norm: p must be positive");
  return coeffs.prefactor * lp_norm(coeffs.values, p);
}

double stabilizer_cell_norm(LatticeKind kind, unsigned d, unsigned n, double p) {
  if (!(p > 0.0)) throw ValidationError("stabilizer_cell_norm: p must be positive");
  const double count = std::pow(4.0 * d, n / p);
  if (kind == LatticeKind::Wigner) return count / std::pow(8.0 * std::numbers::pi * d, n / 2.0);
  return char_prefactor(d, n) * count;
}

TheoremReport verify_theorem1(const DensityState &rho, double p) {
  const QuditSystem &sys = rho.system();
  const double scale = std::pow(static_cast<double>(sys.dim()), 1.0 - 1.0 / p);
  TheoremReport rep{};
  rep.lhs = scale * lp_norm(x_distribution(rho), p);
  rep.rhs = cell_lp_norm(gkp_wigner_coefficients(rho), p) / stabilizer_cell_norm(LatticeKind::Wigner, sys.d(), sys.n(), p);
  rep.residual = std::abs(rep.lhs - rep.rhs);
  if (!sys.even()) rep.wigner_lhs = scale * lp_norm(discrete_wigner(rho), p);
  return rep;
}

TheoremReport verify_theorem2(const DensityState &rho, double p) {
  const QuditSystem &sys = rho.system();
  const double scale = std::pow(static_cast<double>(sys.dim()), 1.0 - 1.0 / p);
  TheoremReport rep{};
  rep.lhs = scale * lp_norm(characteristic_fn(rho), p);
  rep.rhs = cell_lp_norm(gkp_char_coefficients(rho), p) /
            stabilizer_cell_norm(LatticeKind::Characteristic, sys.d(), sys.n(), p);
  rep.residual = std::abs(rep.lhs - rep.rhs);
  const double alpha = p / 2.0;
  if (alpha != 1.0) {
    rep.renyi_direct = stabilizer_renyi(rho, alpha);
    rep.renyi_reconstructed = 2.0 * alpha / (1.0 - alpha) * std::log(rep.rhs);
  }
  return rep;
}

}  // namespace qmagic
