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

#include "qmagic/stabilizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "qmagic/errors.hpp"
#include "qmagic/pauli.hpp"

namespace qmagic {

namespace {

StabilizerElement multiply(unsigned d, const StabilizerElement &x, const StabilizerElement &y) {
  // X^a Z^b X^a' Z^b' = omega^{b.a'} X^{a+a'} Z^{b+b'}
  const std::size_t n = x.label.size() / 2;
  StabilizerElement out{std::vector<int>(2 * n), x.phase + y.phase};
  long k = 0;
  for (std::size_t i = 0; i < n; ++i) k += static_cast<long>(x.label[n + i]) * y.label[i];
  out.phase = mod(out.phase + 2 * k, 2L * d);
  for (std::size_t i = 0; i < 2 * n; ++i) out.label[i] = static_cast<int>((x.label[i] + y.label[i]) % d);
  return out;
}

std::vector<int> parse_ints(const std::string &field) {
  std::vector<int> out;
  std::stringstream ss(field);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception &) {
      throw ValidationError("generator: '" + tok + "' is not an integer");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw ValidationError("generator: '" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

StabilizerGroup::StabilizerGroup(const QuditSystem &system, std::vector<std::vector<int>> generators,
                                 std::vector<int> phase_vector)
    : system_(system), generators_(std::move(generators)), v_(std::move(phase_vector)) {
  const unsigned d = system_.d();
  const unsigned n = system_.n();
  if (generators_.empty()) throw DependentGenerators("a stabilizer group needs at least one generator");
  if (v_.size() != 2 * n) throw ShapeError("phase vector must have length 2n");
  for (int &x : v_) x = static_cast<int>(mod(x, d));
  for (auto &s : generators_) {
    if (s.size() != 2 * n) throw ShapeError("generator must have length 2n");
    for (int &x : s) x = static_cast<int>(mod(x, d));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (symplectic_form(d, generators_[i], generators_[j]) != 0)
        throw NonCommutingGenerators("generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");

  std::vector<StabilizerElement> gens;
  for (const auto &s : generators_) {
    long half = 0;
    for (unsigned i = 0; i < n; ++i) half += weyl_half_exponent(d, s[i], s[n + i]);
    gens.push_back({s, mod(2 * symplectic_form(d, v_, s) + half, 2L * d)});
  }
  std::map<std::vector<int>, long> seen;
  elements_.push_back({std::vector<int>(2 * n, 0), 0});
  seen[elements_[0].label] = 0;
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto &g : gens) {
      StabilizerElement e = multiply(d, elements_[head], g);
      auto it = seen.find(e.label);
      if (it != seen.end()) {
        if (it->second != e.phase)
          throw DependentGenerators("generator phases are inconsistent: the group contains a nontrivial scalar");
        continue;
      }
      if (elements_.size() >= system_.dim())
        throw DependentGenerators("generated group is larger than d^n");
      seen[e.label] = e.phase;
      elements_.push_back(std::move(e));
    }
  }
  if (elements_.size() != system_.dim())
    throw DependentGenerators("generated group has order " + std::to_string(elements_.size()) + ", expected d^n = " +
                              std::to_string(system_.dim()));
}

StabilizerGroup StabilizerGroup::from_eigenphases(const QuditSystem &system, std::vector<std::vector<int>> generators,
                                                  const std::vector<int> &phases) {
  const unsigned d = system.d();
  const unsigned n = system.n();
  if (phases.size() != generators.size()) throw ShapeError("one phase per generator is required");
  for (const auto &s : generators)
    if (s.size() != 2 * n) throw ShapeError("generator must have length 2n");
  const std::size_t total = checked_pow(d, 2 * n, std::size_t(1) << 26);
  if (total > (std::size_t(1) << 26)) throw DimensionCapError("phase-vector search space too large");
  std::vector<int> v(2 * n);
  for (std::size_t idx = 0; idx < total; ++idx) {
    v = digits(idx, d, 2 * n);
    bool ok = true;
    for (std::size_t i = 0; i < generators.size() && ok; ++i) ok = symplectic_form(d, v, generators[i]) == mod(phases[i], d);
    if (ok) return StabilizerGroup(system, std::move(generators), v);
  }
  throw ValidationError("no phase vector realizes the requested generator eigenphases");
}

DensityState stabilizer_state(const StabilizerGroup &group) {
  const QuditSystem &sys = group.system();
  const unsigned d = sys.d();
  const unsigned n = sys.n();
  const std::size_t dim = sys.dim();
  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<int> yd(n);
  for (const StabilizerElement &e : group.elements()) {
    const cplx ph = root_2d(d, e.phase);
    for (std::size_t x = 0; x < dim; ++x) {
      const std::vector<int> xd = digits(x, d, n);
      long k = 0;
      for (unsigned i = 0; i < n; ++i) {
        yd[i] = (xd[i] + e.label[i]) % static_cast<int>(d);
        k += static_cast<long>(e.label[n + i]) * xd[i];
      }
      rho(static_cast<Eigen::Index>(from_digits(yd, d)), static_cast<Eigen::Index>(x)) += ph * omega(d, k);
    }
  }
  rho /= static_cast<double>(dim);
  DensityState out(sys, std::move(rho));
  if (std::abs(out.purity() - 1.0) > 1e-9) throw NumericalError("stabilizer_state: projector is not pure");
  return out;
}

QuasiDistribution stabilizer_x_sparse(const StabilizerGroup &group) {
  const QuditSystem &sys = group.system();
  const unsigned d = sys.d();
  const unsigned n = sys.n();
  const double dn = static_cast<double>(sys.dim());
  const PhaseGrid full(sys, Domain::Full);
  std::vector<cplx> out(full.size());
  std::vector<int> c;

  if (!sys.even()) {
    // x(l, m) = (-1)^{l.m} d^{-n} [ (l/2 - v_a, -m/2 - v_b) in M_S ]
    // Membership table over Z_d^{2n}, indexed in mixed radix d.
    const std::size_t cells = checked_pow(d, 2 * n, std::numeric_limits<std::size_t>::max());
    std::vector<char> member(cells, 0);
    auto index_of = [d](const std::vector<int> &label) {
      std::size_t k = 0;
      for (int x : label) k = k * d + static_cast<std::size_t>(x);
      return k;
    };
    for (const auto &e : group.elements()) member[index_of(e.label)] = 1;
    const long inv2 = inverse_mod(2, d);
    const auto &v = group.phase_vector();
    std::vector<int> key(2 * n);
    for (std::size_t idx = 0; idx < full.size(); ++idx) {
      full.coords(idx, c);
      long lm = 0;
      for (unsigned i = 0; i < n; ++i) {
        key[i] = static_cast<int>(mod(c[i] * inv2 - v[i], d));
        key[n + i] = static_cast<int>(mod(-c[n + i] * inv2 - v[n + i], d));
        lm += static_cast<long>(c[i]) * c[n + i];
      }
      if (member[index_of(key)]) out[idx] = (mod(lm, 2) == 0 ? 1.0 : -1.0) / dn;
    }
    return QuasiDistribution(sys, Domain::Full, std::move(out));
  }

  // Even d: x(u) = d^{-2n} sum_e phase_e prod_i Tr(O_{l_i,m_i} X^{a_i} Z^{b_i}), with
  // Tr(O_{l,m} X^a Z^b) = e^{-i pi ml/d} sum_{2x = l - a} omega^{bx + m(x+a)}.
  std::vector<cplx> table(static_cast<std::size_t>(d) * d * d * d, 0.0);
  auto tix = [d](unsigned l, unsigned m, unsigned a, unsigned b) { return ((l * d + m) * d + a) * d + b; };
  for (unsigned l = 0; l < d; ++l)
    for (unsigned m = 0; m < d; ++m)
      for (unsigned a = 0; a < d; ++a)
        for (unsigned b = 0; b < d; ++b) {
          cplx acc = 0.0;
          for (unsigned x = 0; x < d; ++x)
            if (mod(2L * x - l + a, d) == 0) acc += omega(d, static_cast<long>(b) * x + static_cast<long>(m) * (x + a));
          table[tix(l, m, a, b)] = root_2d(d, -static_cast<long>(m) * l) * acc;
        }
  const PhaseGrid restricted(sys, Domain::Restricted);
  std::vector<cplx> rx(restricted.size());
  for (std::size_t idx = 0; idx < restricted.size(); ++idx) {
    restricted.coords(idx, c);
    cplx acc = 0.0;
    for (const auto &e : group.elements()) {
      cplx t = root_2d(d, e.phase);
      for (unsigned i = 0; i < n && t != cplx(0.0, 0.0); ++i) t *= table[tix(c[i], c[n + i], e.label[i], e.label[n + i])];
      acc += t;
    }
    rx[idx] = acc / (dn * dn);
  }
  std::vector<int> red;
  for (std::size_t idx = 0; idx < full.size(); ++idx) {
    full.coords(idx, c);
    const int sign = [&] {
      // O_{l+d,m} = (-1)^m O; O_{l,m+d} = (-1)^l O
      int s = 1;
      red.resize(2 * n);
      for (unsigned i = 0; i < n; ++i) {
        const int l = c[i], m = c[n + i];
        const int lr = l % static_cast<int>(d);
        if (l >= static_cast<int>(d) && m % 2 != 0) s = -s;
        if (m >= static_cast<int>(d) && lr % 2 != 0) s = -s;
        red[i] = lr;
        red[n + i] = m % static_cast<int>(d);
      }
      return s;
    }();
    out[idx] = static_cast<double>(sign) * rx[restricted.index(red)];
  }
  return QuasiDistribution(sys, Domain::Full, std::move(out));
}

std::vector<StabilizerGroup> enumerate_single_qudit_stabilizer_groups(unsigned d) {
  bool prime = d >= 2;
  for (unsigned k = 2; k * k <= d; ++k)
    if (d % k == 0) prime = false;
  if (!prime && d != 4)
    throw ValidationError("stabilizer enumeration supports prime d and d = 4, got d = " + std::to_string(d));
  const QuditSystem sys(d, 1);
  // Isotropic label sets of size d, each with a generating set.
  std::map<std::set<std::vector<int>>, std::vector<std::vector<int>>> subgroups;
  auto span = [d](const std::vector<std::vector<int>> &gens) {
    std::set<std::vector<int>> s{{0, 0}};
    bool grown = true;
    while (grown) {
      grown = false;
      std::vector<std::vector<int>> cur(s.begin(), s.end());
      for (const auto &x : cur)
        for (const auto &g : gens) {
          std::vector<int> y = {static_cast<int>((x[0] + g[0]) % d), static_cast<int>((x[1] + g[1]) % d)};
          if (s.insert(y).second) grown = true;
        }
    }
    return s;
  };
  for (unsigned a = 0; a < d; ++a)
    for (unsigned b = 0; b < d; ++b) {
      if (a == 0 && b == 0) continue;
      const std::vector<int> s1 = {static_cast<int>(a), static_cast<int>(b)};
      const auto one = span({s1});
      if (one.size() == d) {
        subgroups.emplace(one, std::vector<std::vector<int>>{s1});
        continue;
      }
      for (unsigned a2 = 0; a2 < d; ++a2)
        for (unsigned b2 = 0; b2 < d; ++b2) {
          const std::vector<int> s2 = {static_cast<int>(a2), static_cast<int>(b2)};
          if (symplectic_form(d, s1, s2) != 0) continue;
          const auto two = span({s1, s2});
          if (two.size() == d) subgroups.emplace(two, std::vector<std::vector<int>>{s1, s2});
        }
    }
  std::vector<StabilizerGroup> groups;
  std::vector<DensityState> states;
  for (const auto &[labels, gens] : subgroups) {
    for (unsigned va = 0; va < d; ++va)
      for (unsigned vb = 0; vb < d; ++vb) {
        StabilizerGroup g(sys, gens, {static_cast<int>(va), static_cast<int>(vb)});
        DensityState rho = stabilizer_state(g);
        bool dup = false;
        for (const auto &s : states)
          if ((s.matrix() * rho.matrix()).trace().real() > 1.0 - 1e-9) {
            dup = true;
            break;
          }
        if (dup) continue;
        states.push_back(std::move(rho));
        groups.push_back(std::move(g));
      }
  }
  return groups;
}

std::vector<DensityState> enumerate_single_qudit_stabilizers(unsigned d) {
  std::vector<DensityState> out;
  for (const auto &g : enumerate_single_qudit_stabilizer_groups(d)) out.push_back(stabilizer_state(g));
  return out;
}

StabilizerGroup parse_generator_lines(const QuditSystem &system, std::string_view text) {
  std::vector<std::vector<int>> gens;
  std::vector<int> phases;
  std::stringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string f;
    while (std::getline(ls, f, '|')) fields.push_back(f);
    if (fields.size() != 3)
      throw ValidationError("generator line " + std::to_string(lineno) + ": expected 'a1,...,an|b1,...,bn|phase'");
    const std::vector<int> a = parse_ints(fields[0]);
    const std::vector<int> b = parse_ints(fields[1]);
    const std::vector<int> ph = parse_ints(fields[2]);
    if (a.size() != system.n() || b.size() != system.n() || ph.size() != 1)
      throw ValidationError("generator line " + std::to_string(lineno) + ": wrong number of entries for n = " +
                            std::to_string(system.n()));
    std::vector<int> s(a);
    s.insert(s.end(), b.begin(), b.end());
    gens.push_back(std::move(s));
    phases.push_back(ph[0]);
  }
  if (gens.empty()) throw ValidationError("no generators given");
  return StabilizerGroup::from_eigenphases(system, std::move(gens), phases);
}

}  // namespace qmagic
