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

#include "qmagic/system.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "qmagic/errors.hpp"

namespace qmagic {

std::size_t default_dimension_cap() {
  if (const char *env = std::getenv("QMAGIC_DIM_CAP")) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 2) return static_cast<std::size_t>(v);
    throw ValidationError("QMAGIC_DIM_CAP must be an integer >= 2, got '" + std::string(env) + "'");
  }
  return 4096;
}

QuditSystem::QuditSystem(unsigned d, unsigned n, std::size_t cap) : d_(d), n_(n) {
  if (d < 2) throw ValidationError("local dimension d must be >= 2");
  if (n < 1) throw ValidationError("qudit count n must be >= 1");
  dim_ = checked_pow(d, n, cap);
  if (dim_ > cap)
    throw DimensionCapError("d^n exceeds the dimension cap of " + std::to_string(cap) +
                            " (d=" + std::to_string(d) + ", n=" + std::to_string(n) + ")");
}

long inverse_mod(long a, long m) {
  a = mod(a, m);
  for (long x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  throw ValidationError(std::to_string(a) + " has no inverse mod " + std::to_string(m));
}

std::size_t checked_pow(std::size_t base, unsigned exp, std::size_t limit) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

cplx root_2d(unsigned d, long k) {
  const long twod = 2L * d;
  k = mod(k, twod);
  if (k == 0) return {1.0, 0.0};
  if (k == static_cast<long>(d)) return {-1.0, 0.0};
  if (2 * k == static_cast<long>(d)) return {0.0, 1.0};
  if (2 * k == 3L * d) return {0.0, -1.0};
  return std::polar(1.0, std::numbers::pi * static_cast<double>(k) / d);
}

std::vector<int> digits(std::size_t x, unsigned d, unsigned n) {
  std::vector<int> out(n);
  for (unsigned i = n; i-- > 0;) {
    out[i] = static_cast<int>(x % d);
    x /= d;
  }
  return out;
}

std::size_t from_digits(const std::vector<int> &x, unsigned d) {
  std::size_t r = 0;
  for (int v : x) r = r * d + static_cast<std::size_t>(v);
  return r;
}

}  // namespace qmagic
