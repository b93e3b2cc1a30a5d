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

#include <cstddef>
#include <vector>

#include "qmagic/system.hpp"

namespace qmagic {

// RESTRICTED is Z_d^{2n}; FULL is Z_{2d}^{2n} (the GKP unit cell).
enum class Domain { Restricted, Full };

int domain_modulus(const QuditSystem &system, Domain domain);

struct PhasePoint {
  std::vector<int> l;
  std::vector<int> m;
  int modulus = 0;

  // Reduces every component into [0, modulus).
  static PhasePoint make(std::vector<long> l, std::vector<long> m, int modulus);
  // Coordinates ordered (l_1..l_n, m_1..m_n).
  std::vector<int> coords() const;
  static PhasePoint from_coords(const std::vector<long> &coords, int modulus);
  bool operator==(const PhasePoint &) const = default;
};

// Lexicographic enumeration of a domain over (l_1..l_n, m_1..m_n), l_1 most significant.
class PhaseGrid {
 public:
  PhaseGrid(const QuditSystem &system, Domain domain);

  std::size_t size() const { return size_; }
  int modulus() const { return modulus_; }
  unsigned n() const { return n_; }
  Domain domain() const { return domain_; }

  PhasePoint point(std::size_t index) const;
  void coords(std::size_t index, std::vector<int> &out) const;
  std::size_t index(const PhasePoint &p) const;
  // Coordinates are reduced mod the grid modulus first.
  std::size_t index(const std::vector<int> &coords) const;

 private:
  unsigned n_;
  int modulus_;
  Domain domain_;
  std::size_t size_;
};

}  // namespace qmagic
