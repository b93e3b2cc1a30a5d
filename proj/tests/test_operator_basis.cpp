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

#include "doctest.h"
#include "oracles.hpp"
#include "qmagic/covariance.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/operator_basis.hpp"
#include "qmagic/random.hpp"

using namespace qmagic;

namespace {

PhasePoint pt1(int l, int m, int modulus) { return PhasePoint::make({l}, {m}, modulus); }

Matrix o1(unsigned d, int l, int m) { return o_operator(QuditSystem(d, 1), pt1(l, m, 2 * d)).matrix(); }

}  // namespace

TEST_CASE("reflection operators M_l") {
  const QuditSystem q3(3, 1);
  Matrix m0 = Matrix::Zero(3, 3);
  m0(0, 0) = m0(2, 1) = m0(1, 2) = 1;
  CHECK(max_abs_diff(m_operator(q3, 0).matrix(), m0) == 0.0);
  for (unsigned d = 2; d <= 6; ++d)
    for (int l = 0; l < static_cast<int>(d); ++l) {
      const Matrix m = m_operator(QuditSystem(d, 1), l).matrix();
      CHECK(max_abs_diff(m * m, Matrix::Identity(d, d)) == 0.0);
    }
}

TEST_CASE("qubit operators O_{l,m}") {
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  const Matrix id = Matrix::Identity(2, 2);
  CHECK(max_abs_diff(o1(2, 0, 0), id) < 1e-15);
  CHECK(max_abs_diff(o1(2, 1, 0), x) < 1e-15);
  CHECK(max_abs_diff(o1(2, 0, 1), z) < 1e-15);
  CHECK(max_abs_diff(o1(2, 1, 1), -y) < 1e-15);
  CHECK(max_abs_diff(o1(2, 3, 1), y) < 1e-15);
  CHECK(max_abs_diff(o1(2, 0, 2), id) < 1e-15);
}

TEST_CASE("O_{l,m} are Hermitian, unitary and involutory") {
  for (unsigned d = 2; d <= 6; ++d)
    for (int l = 0; l < static_cast<int>(2 * d); ++l)
      for (int m = 0; m < static_cast<int>(2 * d); ++m) {
        const Matrix o = o1(d, l, m);
        CHECK(max_abs_diff(o, o.adjoint()) < 1e-12);
        CHECK(max_abs_diff(o * o, Matrix::Identity(d, d)) < 1e-12);
      }
}

TEST_CASE("odd-d operators coincide with phase-point operators") {
  for (unsigned d : {3u, 5u}) {
    const QuditSystem q(d, 1);
    for (int a1 = 0; a1 < static_cast<int>(d); ++a1)
      for (int a2 = 0; a2 < static_cast<int>(d); ++a2) {
        const Matrix a = phase_point_operator(q, {a1}, {a2}).matrix();
        const Matrix o = o_operator(q, pt1(2 * a1, -2 * a2, 2 * d)).matrix();
        CHECK(max_abs_diff(a, o) < 1e-12);
        CHECK(std::abs(a.trace() - cplx(1.0)) < 1e-12);
      }
  }
  CHECK_THROWS_AS(phase_point_operator(QuditSystem(4, 1), {0}, {0}), EvenDimensionError);
}

TEST_CASE("parity operator") {
  for (unsigned d : {3u, 5u, 7u}) {
    const QuditSystem q(d, 1);
    const Matrix a00 = phase_point_operator(q, {0}, {0}).matrix();
    CHECK(max_abs_diff(a00, m_operator(q, 0).matrix()) < 1e-12);
  }
}

TEST_CASE("closed-form traces on the full domain") {
  for (unsigned d = 2; d <= 7; ++d)
    for (unsigned n : {1u, 2u}) {
      if (n == 2 && d > 4) continue;
      const QuditSystem s(d, n);
      const PhaseGrid grid(s, Domain::Full);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const PhasePoint p = grid.point(i);
        CHECK(std::abs(o_trace(s, p) - o_operator(s, p).matrix().trace()) < 1e-12);
      }
    }
  // Even d, odd l has zero trace; odd d follows (-1)^{lm}.
  CHECK(std::abs(o_trace(QuditSystem(4, 1), pt1(1, 3, 8))) == 0.0);
  CHECK(o_trace(QuditSystem(4, 1), pt1(2, 2, 8)).real() == 2.0);
  CHECK(o_trace(QuditSystem(4, 1), pt1(2, 1, 8)).real() == 0.0);
  CHECK(o_trace(QuditSystem(3, 1), pt1(1, 1, 6)).real() == -1.0);
}

TEST_CASE("phase shift rule") {
  for (unsigned d = 2; d <= 6; ++d)
    for (int l = 0; l < static_cast<int>(2 * d); ++l)
      for (int m = 0; m < static_cast<int>(2 * d); ++m) {
        const Matrix o = o1(d, l, m);
        const int dd = static_cast<int>(d);
        CHECK(max_abs_diff(o1(d, l + dd, m), phase_shift_rule(d, l, m, ShiftWhich::L) * o) < 1e-12);
        CHECK(max_abs_diff(o1(d, l, m + dd), phase_shift_rule(d, l, m, ShiftWhich::M) * o) < 1e-12);
        CHECK(max_abs_diff(o1(d, l + dd, m + dd), phase_shift_rule(d, l, m, ShiftWhich::Both) * o) < 1e-12);
      }
}

TEST_CASE("reduction to the restricted domain") {
  Rng rng(3);
  for (unsigned d = 2; d <= 6; ++d) {
    const QuditSystem s(d, 2);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long> l(2), m(2);
      for (int i = 0; i < 2; ++i) {
        l[i] = static_cast<long>(rng.below(6 * d)) - 3 * static_cast<long>(d);
        m[i] = static_cast<long>(rng.below(6 * d)) - 3 * static_cast<long>(d);
      }
      const PhasePoint raw = PhasePoint{{static_cast<int>(l[0]), static_cast<int>(l[1])},
                                        {static_cast<int>(m[0]), static_cast<int>(m[1])},
                                        0};
      const auto [red, sign] = reduce_to_restricted(s, raw);
      CHECK(max_abs_diff(o_operator(s, raw).matrix(), sign * o_operator(s, red).matrix()) < 1e-12);
      std::vector<int> out;
      const int sign2 = reduce_coords(d, raw.coords(), out);
      CHECK(sign2 == sign);
      CHECK(out == red.coords());
    }
  }
}

TEST_CASE("operators sum to 2d times identity over the full domain") {
  for (unsigned d = 2; d <= 6; ++d) {
    Matrix sum = Matrix::Zero(d, d);
    for (int l = 0; l < static_cast<int>(2 * d); ++l)
      for (int m = 0; m < static_cast<int>(2 * d); ++m) sum += o1(d, l, m);
    CHECK(max_abs_diff(sum, 2.0 * d * Matrix::Identity(d, d)) < 1e-10);
  }
}

TEST_CASE("restricted operators are trace-orthogonal") {
  for (unsigned d = 2; d <= 5; ++d) {
    const QuditSystem s(d, 1);
    const PhaseGrid g(s, Domain::Restricted);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) {
        const cplx t = (o_operator(s, g.point(i)).matrix() * o_operator(s, g.point(j)).matrix()).trace();
        CHECK(std::abs(t - cplx(i == j ? d : 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("fast traces agree with dense traces") {
  Rng rng(11);
  for (unsigned d = 2; d <= 5; ++d)
    for (unsigned n : {1u, 2u})
      for (Domain dom : {Domain::Restricted, Domain::Full}) {
        const QuditSystem s(d, n);
        const Matrix v = random_mixed_state(s, rng, 3).matrix();
        const std::vector<cplx> fast = o_traces_against(s, v, dom);
        const std::vector<cplx> dense = oracle::dense_x(s, v, dom);
        REQUIRE(fast.size() == dense.size());
        double err = 0;
        for (std::size_t i = 0; i < fast.size(); ++i)
          err = std::max(err, std::abs(fast[i] / static_cast<double>(s.dim()) - dense[i]));
        CHECK(err < 1e-12);
      }
}

TEST_CASE("Clifford covariance: coordinate maps match conjugation exhaustively") {
  for (unsigned d = 2; d <= 6; ++d)
    for (GateKind k : {GateKind::Fourier, GateKind::Phase, GateKind::Shift, GateKind::Clock, GateKind::Sum}) {
      const QuditSystem s(d, arity(k));
      const DenseOperator u = clifford_generator(s, k);
      const SymplecticAffineMap f = clifford_coordinate_action(s, k);
      CHECK(f.is_symplectic());
      const PhaseGrid g(s, Domain::Full);
      double err = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        const PhasePoint p = g.point(i);
        const Matrix lhs = conjugate_by(u, o_operator(s, p)).matrix();
        err = std::max(err, max_abs_diff(lhs, o_operator(s, f.apply(p)).matrix()));
      }
      INFO("d=" << d << " gate=" << to_string(k));
      CHECK(err < 1e-10);
    }
}

TEST_CASE("Clifford covariance for random words") {
  Rng rng(2026);
  for (unsigned d : {2u, 3u})
    for (unsigned n : {1u, 2u}) {
      const QuditSystem s(d, n);
      for (int trial = 0; trial < 100; ++trial) {
        const GateWord w = random_clifford_word(s, 1 + rng.below(8), rng);
        const DenseOperator u = word_unitary(s, w);
        const SymplecticAffineMap f = word_coordinate_action(s, w);
        const PhaseGrid g(s, Domain::Full);
        const std::size_t i = rng.below(g.size());
        const PhasePoint p = g.point(i);
        CHECK(max_abs_diff(conjugate_by(u, o_operator(s, p)).matrix(), o_operator(s, f.apply(p)).matrix()) < 1e-10);
      }
    }
}

TEST_CASE("symplectic map validation") {
  // Not symplectic: scales l only.
  CHECK_THROWS_AS(SymplecticAffineMap(1, 6, {2, 0, 0, 1}, {0, 0}), ValidationError);
  CHECK_THROWS_AS(SymplecticAffineMap(1, 6, {1, 0, 0}, {0, 0}), ShapeError);
  const SymplecticAffineMap id = SymplecticAffineMap::identity(2, 8);
  CHECK(id.apply(std::vector<int>{1, 2, 3, 4}) == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(clifford_coordinate_action(QuditSystem(3, 2), GateKind::Sum, {1, 1}), ValidationError);
}
