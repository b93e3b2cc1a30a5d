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

#include "qmagic/pauli.hpp"

#include <cmath>

#include "qmagic/errors.hpp"

namespace qmagic {

PauliLabel PauliLabel::canonical(const QuditSystem &system, const std::vector<long> &a, const std::vector<long> &b,
                                 long phase_exponent) {
  if (a.size() != system.n() || b.size() != system.n()) throw ShapeError("Pauli label length must equal n");
  PauliLabel out;
  out.a.resize(system.n());
  out.b.resize(system.n());
  for (unsigned i = 0; i < system.n(); ++i) {
    out.a[i] = static_cast<int>(mod(a[i], system.d()));
    out.b[i] = static_cast<int>(mod(b[i], system.d()));
  }
  out.phase_exponent = static_cast<int>(mod(phase_exponent, system.D()));
  return out;
}

namespace {

void require_single(const QuditSystem &system, const char *what) {
  if (system.n() != 1) throw ShapeError(std::string(what) + " acts on a single qudit (n must be 1)");
}

Matrix single_weyl(unsigned d, int a, int b) {
  Matrix p = Matrix::Zero(d, d);
  const cplx half = root_2d(d, weyl_half_exponent(d, a, b));
  for (unsigned x = 0; x < d; ++x) p((x + a) % d, x) = half * omega(d, static_cast<long>(b) * x);
  return p;
}

}  // namespace

DenseOperator make_shift(const QuditSystem &system) {
  require_single(system, "make_shift");
  const unsigned d = system.d();
  Matrix x = Matrix::Zero(d, d);
  for (unsigned j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return DenseOperator(system, std::move(x));
}

DenseOperator make_clock(const QuditSystem &system) {
  require_single(system, "make_clock");
  const unsigned d = system.d();
  Matrix z = Matrix::Zero(d, d);
  for (unsigned j = 0; j < d; ++j) z(j, j) = omega(d, j);
  return DenseOperator(system, std::move(z));
}

long weyl_half_exponent(unsigned d, long a, long b) {
  if (d % 2 == 0) return mod(a * b, 2L * d);
  const long half = mod(mod(a * b, d) * inverse_mod(2, d), d);
  return 2 * half;
}

DenseOperator heisenberg_weyl(const QuditSystem &system, const PauliLabel &label) {
  if (label.a.size() != system.n() || label.b.size() != system.n()) throw ShapeError("Pauli label length must equal n");
  const unsigned d = system.d();
  Matrix out = Matrix::Identity(1, 1);
  for (unsigned i = 0; i < system.n(); ++i) {
    if (label.a[i] < 0 || label.a[i] >= static_cast<int>(d) || label.b[i] < 0 || label.b[i] >= static_cast<int>(d))
      throw ValidationError("Pauli label components must be canonical residues mod d");
    out = kron(out, single_weyl(d, label.a[i], label.b[i]));
  }
  // omega_D^k: D = d (odd) gives e^{2 pi i k/d}; D = 2d (even) gives e^{i pi k/d}.
  const long k = system.even() ? label.phase_exponent : 2L * label.phase_exponent;
  out *= root_2d(d, k);
  return DenseOperator(system, std::move(out));
}

long symplectic_form(unsigned d, const std::vector<int> &u, const std::vector<int> &v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw ShapeError("symplectic_form: bad vector lengths");
  const std::size_t n = u.size() / 2;
  long s = 0;
  for (std::size_t i = 0; i < n; ++i) s += static_cast<long>(u[n + i]) * v[i] - static_cast<long>(u[i]) * v[n + i];
  return mod(s, d);
}

std::vector<cplx> weyl_coefficients(const QuditSystem &system, const Matrix &v) {
  const unsigned d = system.d();
  const unsigned n = system.n();
  const std::size_t dim = system.dim();
  if (v.rows() != static_cast<Eigen::Index>(dim) || v.cols() != static_cast<Eigen::Index>(dim))
    throw ShapeError("weyl_coefficients: matrix has the wrong shape");
  std::vector<cplx> out(dim * dim);
  std::vector<int> xd(n);
  std::vector<cplx> f(dim);
  const double norm = 1.0 / static_cast<double>(dim);
  for (std::size_t ai = 0; ai < dim; ++ai) {
    const std::vector<int> a = digits(ai, d, n);
    // f[x] = V[x + a, x]
    for (std::size_t x = 0; x < dim; ++x) {
      xd = digits(x, d, n);
      for (unsigned i = 0; i < n; ++i) xd[i] = (xd[i] + a[i]) % static_cast<int>(d);
      f[x] = v(static_cast<Eigen::Index>(from_digits(xd, d)), static_cast<Eigen::Index>(x));
    }
    // Tr[P(a,b)^dagger V] = conj(half) sum_x omega^{-b.x} f[x]; separable DFT over the n axes.
    std::vector<cplx> g = f;
    std::size_t stride = dim;
    for (unsigned axis = 0; axis < n; ++axis) {
      stride /= d;
      std::vector<cplx> h(dim);
      for (std::size_t base = 0; base < dim; ++base) {
        const std::size_t bi = (base / stride) % d;
        const std::size_t root = base - bi * stride;
        cplx acc = 0.0;
        for (unsigned x = 0; x < d; ++x) acc += omega(d, -static_cast<long>(bi) * x) * g[root + x * stride];
        h[base] = acc;
      }
      g.swap(h);
    }
    for (std::size_t bi = 0; bi < dim; ++bi) {
      const std::vector<int> b = digits(bi, d, n);
      long k = 0;
      for (unsigned i = 0; i < n; ++i) k += weyl_half_exponent(d, a[i], b[i]);
      out[ai * dim + bi] = std::conj(root_2d(d, k)) * g[bi] * norm;
    }
  }
  return out;
}

}  // namespace qmagic
