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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qmagic/clifford.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/pauli.hpp"
#include "qmagic/random.hpp"
#include "qmagic/states.hpp"

using namespace qmagic;

namespace {

Matrix mpow(const Matrix &m, unsigned k) {
  Matrix r = Matrix::Identity(m.rows(), m.cols());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

}  // namespace

TEST_CASE("shift and clock") {
  const QuditSystem q2(2, 1);
  Matrix x2(2, 2);
  x2 << 0, 1, 1, 0;
  CHECK(max_abs_diff(make_shift(q2).matrix(), x2) == 0.0);
  CHECK(max_abs_diff(make_clock(q2).matrix(), Matrix(Eigen::Vector2cd(1, -1).asDiagonal())) < 1e-15);

  const QuditSystem q3(3, 1);
  const Matrix x3 = make_shift(q3).matrix();
  for (int j = 0; j < 3; ++j) CHECK(x3((j + 1) % 3, j) == cplx(1.0));
  const Matrix z3 = make_clock(q3).matrix();
  CHECK(std::abs(z3(1, 1) - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-15);
  CHECK(std::abs(z3(2, 2) - std::polar(1.0, 4 * std::numbers::pi / 3)) < 1e-15);

  for (unsigned d = 2; d <= 7; ++d) {
    const QuditSystem s(d, 1);
    const Matrix x = make_shift(s).matrix();
    const Matrix z = make_clock(s).matrix();
    const Matrix id = Matrix::Identity(d, d);
    CHECK(max_abs_diff(mpow(x, d), id) < 1e-12);
    CHECK(max_abs_diff(mpow(z, d), id) < 1e-12);
    CHECK(max_abs_diff(z * x, omega(d, 1) * x * z) < 1e-12);
  }
}

TEST_CASE("shift and clock are single-qudit factors") {
  CHECK_THROWS_AS(make_shift(QuditSystem(2, 2)), ShapeError);
}

TEST_CASE("Heisenberg-Weyl operators") {
  const QuditSystem q2(2, 1);
  CHECK(max_abs_diff(heisenberg_weyl(q2, {{0}, {0}, 0}).matrix(), Matrix::Identity(2, 2)) == 0.0);
  Matrix y(2, 2);
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  const Matrix p11 = heisenberg_weyl(q2, {{1}, {1}, 0}).matrix();
  CHECK(max_abs_diff(p11, y) < 1e-15);
  CHECK(max_abs_diff(p11 * p11, Matrix::Identity(2, 2)) < 1e-15);

  // Orthogonality at d = 3.
  const QuditSystem q3(3, 1);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int e = 0; e < 3; ++e) {
          const DenseOperator pu = heisenberg_weyl(q3, {{a}, {b}, 0});
          const DenseOperator pv = heisenberg_weyl(q3, {{c}, {e}, 0});
          const cplx t = trace_inner(pv, pu);
          CHECK(std::abs(t - cplx((a == c && b == e) ? 3.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("Heisenberg-Weyl commutation relation, exhaustive") {
  for (unsigned d = 2; d <= 5; ++d) {
    const QuditSystem s(d, 1);
    for (int a = 0; a < static_cast<int>(d); ++a)
      for (int b = 0; b < static_cast<int>(d); ++b)
        for (int c = 0; c < static_cast<int>(d); ++c)
          for (int e = 0; e < static_cast<int>(d); ++e) {
            const Matrix pu = heisenberg_weyl(s, {{a}, {b}, 0}).matrix();
            const Matrix pv = heisenberg_weyl(s, {{c}, {e}, 0}).matrix();
            const long w = symplectic_form(d, {a, b}, {c, e});
            CHECK(max_abs_diff(pu * pv, omega(d, w) * pv * pu) < 1e-12);
          }
  }
}

TEST_CASE("Pauli label canonicalization and phase") {
  const QuditSystem s(4, 2);
  const PauliLabel lab = PauliLabel::canonical(s, {-1, 5}, {4, -6}, -1);
  CHECK(lab.a == std::vector<int>{3, 1});
  CHECK(lab.b == std::vector<int>{0, 2});
  CHECK(lab.phase_exponent == 7);
  CHECK_THROWS_AS(PauliLabel::canonical(s, {1}, {1, 1}), ShapeError);
  // omega_D^1 with D = 8
  const Matrix with = heisenberg_weyl(s, {{0, 0}, {0, 0}, 1}).matrix();
  CHECK(std::abs(with(0, 0) - std::polar(1.0, std::numbers::pi / 4)) < 1e-15);
}

TEST_CASE("Clifford generators at d = 2 reduce to H, S, CNOT") {
  const QuditSystem q(2, 1);
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  CHECK(max_abs_diff(clifford_generator(q, GateKind::Fourier).matrix(), h) < 1e-15);
  Matrix sg = Matrix::Zero(2, 2);
  sg(0, 0) = 1;
  sg(1, 1) = cplx(0, 1);
  CHECK(max_abs_diff(clifford_generator(q, GateKind::Phase).matrix(), sg) < 1e-15);
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(3, 2) = cnot(2, 3) = 1;
  CHECK(max_abs_diff(clifford_generator(QuditSystem(2, 2), GateKind::Sum).matrix(), cnot) == 0.0);
  CHECK_THROWS_AS(clifford_generator(QuditSystem(2, 1), GateKind::Sum), ShapeError);
}

TEST_CASE("odd-d phase gate") {
  for (unsigned d : {3u, 5u, 7u}) {
    const Matrix p = clifford_generator(QuditSystem(d, 1), GateKind::Phase).matrix();
    const long inv2 = inverse_mod(2, d);
    for (unsigned j = 0; j < d; ++j) {
      // omega^{j^2/2} times the omega^{-j/2} correction
      const long jj = j;
      const cplx expect = omega(d, jj * jj * inv2) * omega(d, -jj * inv2);
      CHECK(std::abs(p(j, j) - expect) < 1e-12);
    }
  }
}

TEST_CASE("Fourier gate has order four") {
  for (unsigned d = 2; d <= 7; ++d) {
    const Matrix r = clifford_generator(QuditSystem(d, 1), GateKind::Fourier).matrix();
    CHECK(max_abs_diff(mpow(r, 4), Matrix::Identity(d, d)) < 1e-10);
  }
}

TEST_CASE("Clifford generators normalize the Heisenberg-Weyl group") {
  for (unsigned d = 2; d <= 5; ++d) {
    for (GateKind k : {GateKind::Fourier, GateKind::Phase, GateKind::Shift, GateKind::Clock, GateKind::Sum}) {
      const QuditSystem s(d, arity(k));
      const DenseOperator u = clifford_generator(s, k);
      CHECK(u.is_unitary(1e-10));
      const std::size_t dim = s.dim();
      for (std::size_t ai = 0; ai < dim; ++ai)
        for (std::size_t bi = 0; bi < dim; ++bi) {
          const PauliLabel lab{digits(ai, d, s.n()), digits(bi, d, s.n()), 0};
          const Matrix c = conjugate_by(u, heisenberg_weyl(s, lab)).matrix();
          const std::vector<cplx> coef = weyl_coefficients(s, c);
          int nonzero = 0;
          for (const cplx &v : coef)
            if (std::abs(v) > 1e-10) {
              ++nonzero;
              CHECK(std::abs(std::abs(v) - 1.0) < 1e-10);
            }
          CHECK(nonzero == 1);
        }
    }
  }
}

TEST_CASE("weyl_coefficients agree with dense traces") {
  Rng rng(7);
  for (unsigned d : {2u, 3u, 4u}) {
    for (unsigned n : {1u, 2u}) {
      const QuditSystem s(d, n);
      const Matrix v = random_mixed_state(s, rng, 2).matrix();
      const std::vector<cplx> fast = weyl_coefficients(s, v);
      for (std::size_t ai = 0; ai < s.dim(); ++ai)
        for (std::size_t bi = 0; bi < s.dim(); ++bi) {
          const Matrix p = heisenberg_weyl(s, {digits(ai, d, n), digits(bi, d, n), 0}).matrix();
          const cplx t = (p.adjoint() * v).trace() / static_cast<double>(s.dim());
          CHECK(std::abs(fast[ai * s.dim() + bi] - t) < 1e-12);
        }
    }
  }
}

TEST_CASE("operator algebra") {
  const QuditSystem q(2, 1);
  const DenseOperator id = DenseOperator::identity(q);
  CHECK(max_abs_diff(tensor(id, id).matrix(), Matrix::Identity(4, 4)) == 0.0);
  const DenseOperator x = make_shift(q);
  CHECK(std::abs(trace_inner(x, x) - cplx(2.0)) < 1e-15);
  const DenseOperator h = clifford_generator(q, GateKind::Fourier);
  CHECK(max_abs_diff(conjugate_by(h, make_clock(q)).matrix(), x.matrix()) < 1e-12);
  CHECK(max_abs_diff(mul(x, x).matrix(), id.matrix()) == 0.0);
  CHECK(max_abs_diff(adjoint(heisenberg_weyl(q, {{1}, {1}, 0})).matrix(), heisenberg_weyl(q, {{1}, {1}, 0}).matrix()) <
        1e-15);
  CHECK_THROWS_AS(mul(x, DenseOperator::identity(QuditSystem(3, 1))), ShapeError);
  CHECK_THROWS_AS(DenseOperator(q, Matrix::Identity(3, 3)), ShapeError);
}

TEST_CASE("embedding matches Kronecker products") {
  const QuditSystem s(3, 3);
  const Matrix x = make_shift(QuditSystem(3, 1)).matrix();
  const Matrix i3 = Matrix::Identity(3, 3);
  CHECK(max_abs_diff(embed(s, x, {1}).matrix(), kron(kron(i3, x), i3)) == 0.0);
  const Matrix sum = clifford_generator(QuditSystem(3, 2), GateKind::Sum).matrix();
  CHECK(max_abs_diff(embed(s, sum, {0, 1}).matrix(), kron(sum, i3)) == 0.0);
  // Reversed targets: control on qudit 1.
  const Matrix swap_sum = embed(QuditSystem(3, 2), sum, {1, 0}).matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(swap_sum(((i + j) % 3) * 3 + j, i * 3 + j) == cplx(1.0));
  CHECK_THROWS_AS(embed(s, x, {3}), ValidationError);
  CHECK_THROWS_AS(embed(s, sum, {0, 0}), ValidationError);
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(QuditSystem(2, 13), DimensionCapError);
  CHECK_NOTHROW(QuditSystem(2, 12));
  CHECK_THROWS_AS(QuditSystem(3, 3, 20), DimensionCapError);
  CHECK_THROWS_AS(QuditSystem(1, 1), ValidationError);
  CHECK_THROWS_AS(QuditSystem(2, 0), ValidationError);
  CHECK(QuditSystem(4, 1).D() == 8);
  CHECK(QuditSystem(5, 1).D() == 5);
}

TEST_CASE("density state validation") {
  const QuditSystem q(2, 1);
  Matrix bad = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityState(q, bad), ValidationError);  // trace 2
  Matrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  CHECK_THROWS_AS(DensityState(q, neg), ValidationError);
  Matrix nonherm(2, 2);
  nonherm << 0.5, 0.1, 0, 0.5;
  CHECK_THROWS_AS(DensityState(q, nonherm), ValidationError);
  CHECK_THROWS_AS(DensityState::from_vector(q, Vector::Zero(2)), ValidationError);
  CHECK(std::abs(t_state(q).purity() - 1.0) < 1e-12);
  CHECK_THROWS_AS(t_state(QuditSystem(3, 1)), ValidationError);
  CHECK(std::abs(maximally_mixed(QuditSystem(3, 2)).purity() - 1.0 / 9) < 1e-12);
}

TEST_CASE("rng is reproducible and streams differ") {
  Rng a(42), b(42), c(42, 1);
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(r.below(7) < 7);
  }
  const Matrix u = haar_unitary(5, r);
  CHECK(max_abs_diff(u.adjoint() * u, Matrix::Identity(5, 5)) < 1e-12);
}
