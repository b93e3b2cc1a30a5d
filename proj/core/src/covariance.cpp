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

#include "qmagic/covariance.hpp"

#include "qmagic/errors.hpp"

namespace qmagic {

SymplecticAffineMap::SymplecticAffineMap(unsigned n, int modulus, std::vector<int> matrix, std::vector<int> shift)
    : n_(n), modulus_(modulus), m_(std::move(matrix)), shift_(std::move(shift)) {
  if (m_.size() != 4 * n_ * n_ || shift_.size() != 2 * n_) throw ShapeError("SymplecticAffineMap: bad shapes");
  for (int &v : m_) v = static_cast<int>(mod(v, modulus_));
  for (int &v : shift_) v = static_cast<int>(mod(v, modulus_));
  if (!is_symplectic()) throw ValidationError("SymplecticAffineMap: matrix is not symplectic");
}

SymplecticAffineMap SymplecticAffineMap::identity(unsigned n, int modulus) {
  std::vector<int> m(4 * n * n, 0);
  for (unsigned i = 0; i < 2 * n; ++i) m[i * 2 * n + i] = 1;
  return SymplecticAffineMap(n, modulus, std::move(m), std::vector<int>(2 * n, 0));
}

std::vector<int> SymplecticAffineMap::apply(const std::vector<int> &coords) const {
  if (coords.size() != 2 * n_) throw ShapeError("SymplecticAffineMap::apply: wrong coordinate count");
  std::vector<int> out(2 * n_);
  for (unsigned r = 0; r < 2 * n_; ++r) {
    long acc = shift_[r];
    for (unsigned c = 0; c < 2 * n_; ++c) acc += static_cast<long>(at(r, c)) * coords[c];
    out[r] = static_cast<int>(mod(acc, modulus_));
  }
  return out;
}

PhasePoint SymplecticAffineMap::apply(const PhasePoint &p) const {
  const std::vector<int> c = apply(p.coords());
  return PhasePoint::from_coords(std::vector<long>(c.begin(), c.end()), modulus_);
}

SymplecticAffineMap SymplecticAffineMap::then(const SymplecticAffineMap &next) const {
  if (next.n_ != n_ || next.modulus_ != modulus_) throw ShapeError("SymplecticAffineMap::then: incompatible maps");
  const unsigned k = 2 * n_;
  std::vector<int> m(k * k);
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c) {
      long acc = 0;
      for (unsigned j = 0; j < k; ++j) acc += static_cast<long>(next.at(r, j)) * at(j, c);
      m[r * k + c] = static_cast<int>(mod(acc, modulus_));
    }
  return SymplecticAffineMap(n_, modulus_, std::move(m), next.apply(shift_));
}

bool SymplecticAffineMap::is_symplectic() const {
  // Omega = [[0, I], [-I, 0]] in (l | m) coordinates.
  const unsigned k = 2 * n_;
  auto omega = [&](unsigned r, unsigned c) -> long {
    if (r < n_ && c == r + n_) return 1;
    if (r >= n_ && c + n_ == r) return -1;
    return 0;
  };
  for (unsigned r = 0; r < k; ++r)
    for (unsigned c = 0; c < k; ++c) {
      long acc = 0;
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) {
          const long w = omega(i, j);
          if (w != 0) acc += static_cast<long>(at(i, r)) * w * at(j, c);
        }
      if (mod(acc - omega(r, c), modulus_) != 0) return false;
    }
  return true;
}

namespace {

// Local block and shift on (l_1..l_k, m_1..m_k) for a generator.
void local_action(unsigned d, GateKind kind, std::vector<int> &m, std::vector<int> &shift) {
  switch (kind) {
    case GateKind::Fourier:  // (l, m) -> (m, -l)
      m = {0, 1, -1, 0};
      shift = {0, 0};
      break;
    case GateKind::Phase:  // (l, m) -> (l, m - l [+ 1 for odd d])
      m = {1, 0, -1, 1};
      shift = {0, d % 2 == 1 ? 1 : 0};
      break;
    case GateKind::Shift:  // l -> l + 2
      m = {1, 0, 0, 1};
      shift = {2, 0};
      break;
    case GateKind::Clock:  // m -> m - 2
      m = {1, 0, 0, 1};
      shift = {0, -2};
      break;
    case GateKind::Sum:  // (l, l', m, m') -> (l, l + l', m - m', m')
      m = {1, 0, 0, 0,  //
           1, 1, 0, 0,  //
           0, 0, 1, -1,  //
           0, 0, 0, 1};
      shift = {0, 0, 0, 0};
      break;
  }
}

}  // namespace

SymplecticAffineMap clifford_coordinate_action(const QuditSystem &system, GateKind kind) {
  if (system.n() != arity(kind)) throw ShapeError("clifford_coordinate_action: system size does not match the gate");
  std::vector<unsigned> targets(arity(kind));
  for (unsigned i = 0; i < targets.size(); ++i) targets[i] = i;
  return clifford_coordinate_action(system, kind, targets);
}

SymplecticAffineMap clifford_coordinate_action(const QuditSystem &system, GateKind kind,
                                               const std::vector<unsigned> &targets) {
  validate_targets(system, targets, arity(kind));
  const unsigned n = system.n();
  const unsigned k = arity(kind);
  std::vector<int> lm, ls;
  local_action(system.d(), kind, lm, ls);
  // Local coordinate j maps to global coordinate pos(j).
  auto pos = [&](unsigned j) { return j < k ? targets[j] : n + targets[j - k]; };
  std::vector<int> m(4 * n * n, 0);
  for (unsigned i = 0; i < 2 * n; ++i) m[i * 2 * n + i] = 1;
  std::vector<int> shift(2 * n, 0);
  for (unsigned r = 0; r < 2 * k; ++r) {
    for (unsigned c = 0; c < 2 * k; ++c) m[pos(r) * 2 * n + pos(c)] = lm[r * 2 * k + c];
    shift[pos(r)] = ls[r];
  }
  return SymplecticAffineMap(n, 2 * static_cast<int>(system.d()), std::move(m), std::move(shift));
}

SymplecticAffineMap word_coordinate_action(const QuditSystem &system, const GateWord &word) {
  SymplecticAffineMap acc = SymplecticAffineMap::identity(system.n(), 2 * static_cast<int>(system.d()));
  for (const CliffordStep &step : word) acc = acc.then(clifford_coordinate_action(system, step.kind, step.targets));
  return acc;
}

}  // namespace qmagic
