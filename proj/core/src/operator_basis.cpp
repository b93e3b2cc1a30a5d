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

#include "qmagic/operator_basis.hpp"

#include "qmagic/errors.hpp"
#include "qmagic/pauli.hpp"

namespace qmagic {

namespace {

int parity(long v) { return (mod(v, 2) == 0) ? 1 : -1; }

Matrix single_o(unsigned d, long l, long m) {
  Matrix o = Matrix::Zero(d, d);
  const cplx pre = root_2d(d, -l * m);
  // O|x> = e^{-i pi ml/d} omega^{mx} |l - x>
  for (unsigned x = 0; x < d; ++x) o(mod(l - static_cast<long>(x), d), x) = pre * omega(d, m * static_cast<long>(x));
  return o;
}

}  // namespace

DenseOperator m_operator(const QuditSystem &system, int l) {
  if (system.n() != 1) throw ShapeError("m_operator acts on a single qudit");
  const unsigned d = system.d();
  Matrix out = Matrix::Zero(d, d);
  for (unsigned v = 0; v < d; ++v) out(mod(l - static_cast<long>(v), d), v) = 1.0;
  return DenseOperator(system, std::move(out));
}

DenseOperator o_operator(const QuditSystem &system, const PhasePoint &point) {
  if (point.l.size() != system.n() || point.m.size() != system.n())
    throw ShapeError("o_operator: point has the wrong qudit count");
  Matrix out = Matrix::Identity(1, 1);
  for (unsigned i = 0; i < system.n(); ++i) out = kron(out, single_o(system.d(), point.l[i], point.m[i]));
  return DenseOperator(system, std::move(out));
}

cplx o_trace(const QuditSystem &system, const PhasePoint &point) {
  if (point.l.size() != system.n() || point.m.size() != system.n())
    throw ShapeError("o_trace: point has the wrong qudit count");
  double t = 1.0;
  for (unsigned i = 0; i < system.n(); ++i) {
    const long l = point.l[i];
    const long m = point.m[i];
    if (system.even())
      t *= (mod(l, 2) == 0) ? 1.0 + parity(m) : 0.0;
    else
      t *= parity(l * m);
  }
  return {t, 0.0};
}

int phase_shift_rule(unsigned d, int l, int m, ShiftWhich which) {
  switch (which) {
    case ShiftWhich::L: return parity(m);
    case ShiftWhich::M: return parity(l);
    case ShiftWhich::Both: return parity(static_cast<long>(l) + m + d);
  }
  return 1;
}

int reduce_coords(unsigned d, const std::vector<int> &coords, std::vector<int> &out) {
  const std::size_t n = coords.size() / 2;
  out.resize(coords.size());
  int sign = 1;
  const long twod = 2L * d;
  for (std::size_t i = 0; i < n; ++i) {
    const long l = mod(coords[i], twod);
    const long m = mod(coords[n + i], twod);
    const long lr = l % d;
    const long mr = m % d;
    // O_{l+d,m} = (-1)^m O_{l,m}; O_{l,m+d} = (-1)^l O_{l,m}.
    if (l >= static_cast<long>(d)) sign *= parity(m);
    if (m >= static_cast<long>(d)) sign *= parity(lr);
    out[i] = static_cast<int>(lr);
    out[n + i] = static_cast<int>(mr);
  }
  return sign;
}

std::pair<PhasePoint, int> reduce_to_restricted(const QuditSystem &system, const PhasePoint &point) {
  std::vector<int> red;
  const int sign = reduce_coords(system.d(), point.coords(), red);
  PhasePoint p;
  p.modulus = static_cast<int>(system.d());
  p.l.assign(red.begin(), red.begin() + system.n());
  p.m.assign(red.begin() + system.n(), red.end());
  return {p, sign};
}

DenseOperator phase_point_operator(const QuditSystem &system, const std::vector<int> &a1, const std::vector<int> &a2) {
  if (system.even()) throw EvenDimensionError("phase-space point operators are defined for odd d only; use O_{l,m}");
  if (a1.size() != system.n() || a2.size() != system.n()) throw ShapeError("phase_point_operator: wrong label length");
  const unsigned d = system.d();
  const QuditSystem one(d, 1);
  Matrix out = Matrix::Identity(1, 1);
  for (unsigned i = 0; i < system.n(); ++i) {
    Matrix a = Matrix::Zero(d, d);
    const std::vector<int> u = {static_cast<int>(mod(a1[i], d)), static_cast<int>(mod(a2[i], d))};
    for (unsigned va = 0; va < d; ++va)
      for (unsigned vb = 0; vb < d; ++vb) {
        const std::vector<int> v = {static_cast<int>(va), static_cast<int>(vb)};
        const Matrix p = heisenberg_weyl(one, PauliLabel{{v[0]}, {v[1]}, 0}).matrix();
        a += omega(d, -symplectic_form(d, u, v)) * p.adjoint();
      }
    out = kron(out, a / static_cast<double>(d));
  }
  return DenseOperator(system, std::move(out));
}

std::vector<cplx> o_traces_against(const QuditSystem &system, const Matrix &v, Domain domain) {
  const unsigned d = system.d();
  const unsigned n = system.n();
  const std::size_t dim = system.dim();
  if (v.rows() != static_cast<Eigen::Index>(dim) || v.cols() != static_cast<Eigen::Index>(dim))
    throw ShapeError("o_traces_against: matrix has the wrong shape");
  std::vector<cplx> w(d);
  for (unsigned k = 0; k < d; ++k) w[k] = omega(d, k);

  // S(l, m) = sum_x omega^{m.x} V[x, l - x] over restricted l, m.
  std::vector<cplx> s(dim * dim);
  std::vector<cplx> f(dim), h(dim);
  std::vector<int> xd(n), yd(n);
  for (std::size_t li = 0; li < dim; ++li) {
    const std::vector<int> l = digits(li, d, n);
    for (std::size_t x = 0; x < dim; ++x) {
      xd = digits(x, d, n);
      for (unsigned i = 0; i < n; ++i) yd[i] = static_cast<int>(mod(l[i] - xd[i], d));
      f[x] = v(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(from_digits(yd, d)));
    }
    std::size_t stride = dim;
    for (unsigned axis = 0; axis < n; ++axis) {
      stride /= d;
      for (std::size_t base = 0; base < dim; ++base) {
        const std::size_t mi = (base / stride) % d;
        const std::size_t root = base - mi * stride;
        cplx acc = 0.0;
        for (unsigned x = 0; x < d; ++x) acc += w[(mi * x) % d] * f[root + x * stride];
        h[base] = acc;
      }
      f.swap(h);
    }
    for (std::size_t mi = 0; mi < dim; ++mi) s[li * dim + mi] = f[mi];
  }

  const PhaseGrid grid(system, domain);
  std::vector<cplx> out(grid.size());
  std::vector<int> c, red;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    grid.coords(idx, c);
    long k = 0;
    for (unsigned i = 0; i < n; ++i) k -= static_cast<long>(c[i]) * c[n + i];
    std::size_t li = 0, mi = 0;
    for (unsigned i = 0; i < n; ++i) {
      li = li * d + static_cast<std::size_t>(c[i] % static_cast<int>(d));
      mi = mi * d + static_cast<std::size_t>(c[n + i] % static_cast<int>(d));
    }
    out[idx] = root_2d(d, k) * s[li * dim + mi];
  }
  return out;
}

}  // namespace qmagic
