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

#include "qmagic/clifford.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qmagic/errors.hpp"
#include "qmagic/pauli.hpp"
#include "qmagic/random.hpp"

namespace qmagic {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::Fourier: return "FOURIER";
    case GateKind::Phase: return "PHASE";
    case GateKind::Sum: return "SUM";
    case GateKind::Shift: return "SHIFT";
    case GateKind::Clock: return "CLOCK";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  std::string up(name);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  for (GateKind k : {GateKind::Fourier, GateKind::Phase, GateKind::Sum, GateKind::Shift, GateKind::Clock})
    if (up == to_string(k)) return k;
  throw ValidationError("unknown Clifford generator '" + std::string(name) + "'");
}

unsigned arity(GateKind kind) { return kind == GateKind::Sum ? 2 : 1; }

DenseOperator clifford_generator(const QuditSystem &system, GateKind kind) {
  if (system.n() != arity(kind))
    throw ShapeError(std::string(to_string(kind)) + " needs a " + std::to_string(arity(kind)) + "-qudit system");
  const unsigned d = system.d();
  Matrix u = Matrix::Zero(static_cast<Eigen::Index>(system.dim()), static_cast<Eigen::Index>(system.dim()));
  switch (kind) {
    case GateKind::Fourier: {
      const double s = 1.0 / std::sqrt(static_cast<double>(d));
      for (unsigned r = 0; r < d; ++r)
        for (unsigned c = 0; c < d; ++c) u(r, c) = s * omega(d, static_cast<long>(r) * c);
      break;
    }
    case GateKind::Phase:
      for (unsigned j = 0; j < d; ++j) {
        const long jj = static_cast<long>(j);
        // Odd d: omega^{j^2/2} times (omega_D omega_{2d}^{-1})^{-j} = omega^{j(j-1)/2}.
        u(j, j) = system.even() ? root_2d(d, jj * jj) : omega(d, jj * (jj - 1) / 2);
      }
      break;
    case GateKind::Sum:
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) u(i * d + (i + j) % d, i * d + j) = 1.0;
      break;
    case GateKind::Shift: u = make_shift(system).matrix(); break;
    case GateKind::Clock: u = make_clock(system).matrix(); break;
  }
  DenseOperator out(system, std::move(u));
  out.require_unitary(1e-10);
  return out;
}

void validate_targets(const QuditSystem &system, const std::vector<unsigned> &targets, unsigned expected) {
  if (targets.size() != expected)
    throw ValidationError("expected " + std::to_string(expected) + " target qudit(s), got " +
                          std::to_string(targets.size()));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= system.n()) throw ValidationError("target qudit index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (targets[i] == targets[j]) throw ValidationError("target qudits must be distinct");
  }
}

DenseOperator embed(const QuditSystem &system, const Matrix &local, const std::vector<unsigned> &targets) {
  const unsigned d = system.d();
  const auto k = static_cast<unsigned>(targets.size());
  if (k == 0) throw ValidationError("embed: no target qudits");
  validate_targets(system, targets, k);
  const std::size_t ldim = checked_pow(d, k, system.dim());
  if (local.rows() != static_cast<Eigen::Index>(ldim) || local.cols() != static_cast<Eigen::Index>(ldim))
    throw ShapeError("embed: local operator shape does not match the target count");
  const std::size_t dim = system.dim();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t y = 0; y < dim; ++y) {
    std::vector<int> yd = digits(y, d, system.n());
    std::vector<int> yt(k);
    for (unsigned t = 0; t < k; ++t) yt[t] = yd[targets[t]];
    const std::size_t col = from_digits(yt, d);
    std::vector<int> xd = yd;
    for (std::size_t r = 0; r < ldim; ++r) {
      const cplx v = local(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col));
      if (v == cplx(0.0, 0.0)) continue;
      const std::vector<int> rd = digits(r, d, k);
      for (unsigned t = 0; t < k; ++t) xd[targets[t]] = rd[t];
      out(static_cast<Eigen::Index>(from_digits(xd, d)), static_cast<Eigen::Index>(y)) = v;
    }
  }
  return DenseOperator(system, std::move(out));
}

DenseOperator word_unitary(const QuditSystem &system, const GateWord &word) {
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(system.dim()), static_cast<Eigen::Index>(system.dim()));
  for (const CliffordStep &step : word) {
    validate_targets(system, step.targets, arity(step.kind));
    const QuditSystem local(system.d(), arity(step.kind));
    const DenseOperator g = embed(system, clifford_generator(local, step.kind).matrix(), step.targets);
    u = g.matrix() * u;
  }
  return DenseOperator(system, std::move(u));
}

GateWord random_clifford_word(const QuditSystem &system, std::size_t length, Rng &rng) {
  std::vector<GateKind> kinds = {GateKind::Fourier, GateKind::Phase, GateKind::Shift, GateKind::Clock};
  if (system.n() >= 2) kinds.push_back(GateKind::Sum);
  GateWord word;
  word.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const GateKind kind = kinds[rng.below(kinds.size())];
    CliffordStep step{kind, {}};
    const auto t0 = static_cast<unsigned>(rng.below(system.n()));
    step.targets.push_back(t0);
    if (kind == GateKind::Sum) {
      auto t1 = static_cast<unsigned>(rng.below(system.n() - 1));
      if (t1 >= t0) ++t1;
      step.targets.push_back(t1);
    }
    word.push_back(std::move(step));
  }
  return word;
}

}  // namespace qmagic
