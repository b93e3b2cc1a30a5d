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

#include "qmagic/phase_space.hpp"

#include "qmagic/errors.hpp"

namespace qmagic {

int domain_modulus(const QuditSystem &system, Domain domain) {
  return domain == Domain::Full ? 2 * static_cast<int>(system.d()) : static_cast<int>(system.d());
}

PhasePoint PhasePoint::make(std::vector<long> l, std::vector<long> m, int modulus) {
  if (l.size() != m.size()) throw ShapeError("PhasePoint: l and m lengths differ");
  if (modulus < 2) throw ValidationError("PhasePoint: modulus must be >= 2");
  PhasePoint p;
  p.modulus = modulus;
  for (long v : l) p.l.push_back(static_cast<int>(mod(v, modulus)));
  for (long v : m) p.m.push_back(static_cast<int>(mod(v, modulus)));
  return p;
}

std::vector<int> PhasePoint::coords() const {
  std::vector<int> c(l);
  c.insert(c.end(), m.begin(), m.end());
  return c;
}

PhasePoint PhasePoint::from_coords(const std::vector<long> &coords, int modulus) {
  if (coords.size() % 2 != 0) throw ShapeError("PhasePoint: odd coordinate count");
  const std::size_t n = coords.size() / 2;
  return make(std::vector<long>(coords.begin(), coords.begin() + static_cast<long>(n)),
              std::vector<long>(coords.begin() + static_cast<long>(n), coords.end()), modulus);
}

PhaseGrid::PhaseGrid(const QuditSystem &system, Domain domain)
    : n_(system.n()), modulus_(domain_modulus(system, domain)), domain_(domain) {
  size_ = 1;
  for (unsigned i = 0; i < 2 * n_; ++i) size_ *= static_cast<std::size_t>(modulus_);
}

void PhaseGrid::coords(std::size_t index, std::vector<int> &out) const {
  out.resize(2 * n_);
  for (unsigned i = 2 * n_; i-- > 0;) {
    out[i] = static_cast<int>(index % static_cast<std::size_t>(modulus_));
    index /= static_cast<std::size_t>(modulus_);
  }
}

PhasePoint PhaseGrid::point(std::size_t index) const {
  if (index >= size_) throw ValidationError("PhaseGrid: index out of range");
  std::vector<int> c;
  coords(index, c);
  PhasePoint p;
  p.modulus = modulus_;
  p.l.assign(c.begin(), c.begin() + n_);
  p.m.assign(c.begin() + n_, c.end());
  return p;
}

std::size_t PhaseGrid::index(const std::vector<int> &coords) const {
  if (coords.size() != 2 * n_) throw ShapeError("PhaseGrid: coordinate vector has the wrong length");
  std::size_t r = 0;
  for (int c : coords) r = r * static_cast<std::size_t>(modulus_) + static_cast<std::size_t>(mod(c, modulus_));
  return r;
}

std::size_t PhaseGrid::index(const PhasePoint &p) const {
  if (p.l.size() != n_ || p.m.size() != n_) throw ShapeError("PhaseGrid: point has the wrong qudit count");
  return index(p.coords());
}

}  // namespace qmagic
