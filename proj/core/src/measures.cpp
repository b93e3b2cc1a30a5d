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

#include "qmagic/measures.hpp"

#include <cmath>
#include <string>

#include "qmagic/errors.hpp"
#include "qmagic/operator_basis.hpp"
#include "qmagic/pauli.hpp"

namespace qmagic {

QuasiDistribution::QuasiDistribution(const QuditSystem &system, Domain domain, std::vector<cplx> values)
    : system_(system), grid_(system, domain), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw ShapeError("QuasiDistribution: expected " + std::to_string(grid_.size()) + " values");
}

cplx QuasiDistribution::at(const PhasePoint &p) const {
  if (p.modulus != grid_.modulus()) throw ValidationError("QuasiDistribution::at: point modulus does not match domain");
  return values_[grid_.index(p)];
}

std::size_t QuasiDistribution::count_nonzero(double tol) const {
  std::size_t c = 0;
  for (const cplx &v : values_)
    if (std::abs(v) > tol) ++c;
  return c;
}

double QuasiDistribution::max_imag() const {
  double m = 0.0;
  for (const cplx &v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

double lp_norm(const std::vector<cplx> &values, double p) {
  if (!(p > 0.0)) throw ValidationError("lp_norm: p must be positive");
  double acc = 0.0;
  for (const cplx &v : values) {
    const double a = std::abs(v);
    if (a < kNormCutoff) continue;
    acc += p == 1.0 ? a : std::pow(a, p);
  }
  return p == 1.0 ? acc : std::pow(acc, 1.0 / p);
}

double lp_norm(const QuasiDistribution &dist, double p) { return lp_norm(dist.values(), p); }

QuasiDistribution operator_coefficients(const QuditSystem &system, const Matrix &v, Domain domain) {
  std::vector<cplx> t = o_traces_against(system, v, domain);
  const double scale = 1.0 / static_cast<double>(system.dim());
  for (cplx &c : t) c *= scale;
  return QuasiDistribution(system, domain, std::move(t));
}

QuasiDistribution x_distribution(const DensityState &rho, Domain domain) {
  return operator_coefficients(rho.system(), rho.matrix(), domain);
}

QuasiDistribution discrete_wigner(const DensityState &rho) {
  const QuditSystem &sys = rho.system();
  if (sys.even()) throw EvenDimensionError("the discrete Wigner function is defined for odd d only");
  const unsigned d = sys.d();
  const unsigned n = sys.n();
  const QuditSystem one(d, 1);
  std::vector<Matrix> a(d * d);
  for (unsigned a1 = 0; a1 < d; ++a1)
    for (unsigned a2 = 0; a2 < d; ++a2)
      a[a1 * d + a2] = phase_point_operator(one, {static_cast<int>(a1)}, {static_cast<int>(a2)}).matrix();
  const PhaseGrid grid(sys, Domain::Restricted);
  std::vector<cplx> out(grid.size());
  std::vector<int> c;
  const Matrix rt = rho.matrix().transpose();
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    grid.coords(idx, c);
    Matrix op = Matrix::Identity(1, 1);
    for (unsigned i = 0; i < n; ++i) op = kron(op, a[c[i] * d + c[n + i]]);
    // Tr[A rho] = sum_ij A_ij rho_ji
    out[idx] = op.cwiseProduct(rt).sum() / static_cast<double>(sys.dim());
  }
  return QuasiDistribution(sys, Domain::Restricted, std::move(out));
}

WignerPermutation wigner_permutation(const QuditSystem &system) {
  if (system.even()) throw EvenDimensionError("the Wigner permutation exists for odd d only");
  const unsigned d = system.d();
  const unsigned n = system.n();
  const QuditSystem one(d, 1);
  // Single-qudit matching, then product over qudits.
  std::vector<std::size_t> tgt(d * d);
  std::vector<int> sgn(d * d);
  for (unsigned l = 0; l < d; ++l)
    for (unsigned m = 0; m < d; ++m) {
      const Matrix o = o_operator(one, PhasePoint{{static_cast<int>(l)}, {static_cast<int>(m)}, static_cast<int>(d)}).matrix();
      bool found = false;
      for (unsigned a1 = 0; a1 < d && !found; ++a1)
        for (unsigned a2 = 0; a2 < d && !found; ++a2) {
          const Matrix a = phase_point_operator(one, {static_cast<int>(a1)}, {static_cast<int>(a2)}).matrix();
          for (int s : {1, -1})
            if (max_abs_diff(static_cast<double>(s) * o, a) < 1e-10) {
              tgt[l * d + m] = a1 * d + a2;
              sgn[l * d + m] = s;
              found = true;
              break;
            }
        }
      if (!found) throw NumericalError("wigner_permutation: no matching phase-point operator");
    }
  const PhaseGrid grid(system, Domain::Restricted);
  WignerPermutation out;
  out.target.resize(grid.size());
  out.sign.resize(grid.size());
  std::vector<int> c, w(2 * n);
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    grid.coords(idx, c);
    int s = 1;
    for (unsigned i = 0; i < n; ++i) {
      const std::size_t t = tgt[c[i] * d + c[n + i]];
      w[i] = static_cast<int>(t / d);
      w[n + i] = static_cast<int>(t % d);
      s *= sgn[c[i] * d + c[n + i]];
    }
    out.target[idx] = grid.index(w);
    out.sign[idx] = s;
  }
  return out;
}

QuasiDistribution characteristic_fn(const DensityState &rho) {
  return QuasiDistribution(rho.system(), Domain::Restricted, weyl_coefficients(rho.system(), rho.matrix()));
}

double magic_negativity(const DensityState &rho) { return lp_norm(x_distribution(rho), 1.0); }

double wigner_negativity(const DensityState &rho) { return lp_norm(discrete_wigner(rho), 1.0); }

double stabilizer_renyi(const DensityState &rho, double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("stabilizer_renyi: alpha must be positive");
  if (alpha == 1.0) throw ValidationError("stabilizer_renyi: the alpha -> 1 limit is not implemented");
  const QuasiDistribution chi = characteristic_fn(rho);
  const double dn = static_cast<double>(rho.system().dim());
  double acc = 0.0;
  for (const cplx &v : chi.values()) {
    const double a = std::abs(v) * dn;  // |Tr rho P|
    if (a < kNormCutoff) continue;
    acc += std::pow(a, 2.0 * alpha);
  }
  const double logd = std::log(dn);
  return (std::log(acc) - alpha * logd) / (1.0 - alpha) - logd;
}

Hyperpolyhedral is_hyperpolyhedral(const DensityState &rho) {
  const double v = magic_negativity(rho);
  return {v <= 1.0 + 1e-12, v};
}

}  // namespace qmagic
