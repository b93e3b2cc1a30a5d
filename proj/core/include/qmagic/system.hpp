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

#include <complex>
#include <cstddef>
#include <vector>

namespace qmagic {

using cplx = std::complex<double>;

// Largest admissible d^n. Reads QMAGIC_DIM_CAP from the environment, else 4096.
std::size_t default_dimension_cap();

class QuditSystem {
 public:
  QuditSystem(unsigned d, unsigned n, std::size_t cap = default_dimension_cap());

  unsigned d() const { return d_; }
  unsigned n() const { return n_; }
  // d for odd d, 2d for even d.
  unsigned D() const { return d_ % 2 == 0 ? 2 * d_ : d_; }
  bool even() const { return d_ % 2 == 0; }
  // Hilbert-space dimension d^n.
  std::size_t dim() const { return dim_; }

  bool operator==(const QuditSystem &o) const { return d_ == o.d_ && n_ == o.n_; }

 private:
  unsigned d_;
  unsigned n_;
  std::size_t dim_;
};

// Non-negative residue of a mod m.
inline long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// Multiplicative inverse of a mod m; throws ValidationError if none exists.
long inverse_mod(long a, long m);

// Integer power with overflow check against a limit; returns limit+1 on overflow.
std::size_t checked_pow(std::size_t base, unsigned exp, std::size_t limit);

// e^{i pi k / d}; exact for the multiples of pi/2.
cplx root_2d(unsigned d, long k);
// omega_d^k = e^{2 pi i k / d}.
inline cplx omega(unsigned d, long k) { return root_2d(d, 2 * k); }

// Base-d digits of x, most significant first (qudit 0 is the leading factor).
std::vector<int> digits(std::size_t x, unsigned d, unsigned n);
std::size_t from_digits(const std::vector<int> &x, unsigned d);

}  // namespace qmagic
