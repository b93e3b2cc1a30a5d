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

#include "qmagic/gaussian_sim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "qmagic/errors.hpp"
#include "qmagic/gkp_bridge.hpp"
#include "qmagic/random.hpp"

namespace qmagic {

namespace {

Eigen::MatrixXd omega_matrix(unsigned n) {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  w.topRightCorner(n, n) = Eigen::MatrixXd::Identity(n, n);
  w.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return w;
}

double lattice_step(unsigned d) { return std::sqrt(std::numbers::pi / (2.0 * d)); }

}  // namespace

double symplectic_defect(const Eigen::MatrixXd &s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0) throw ShapeError("S must be a nonempty 2n x 2n matrix");
  const Eigen::MatrixXd w = omega_matrix(static_cast<unsigned>(s.rows() / 2));
  return (s.transpose() * w * s - w).cwiseAbs().maxCoeff();
}

GaussianCircuit::GaussianCircuit(Eigen::MatrixXd s, Eigen::VectorXd displacement, double tol)
    : s_(std::move(s)), disp_(std::move(displacement)) {
  if (s_.rows() != s_.cols() || s_.rows() % 2 != 0 || s_.rows() == 0)
    throw ShapeError("S must be a nonempty 2n x 2n matrix");
  if (disp_.size() != s_.rows()) throw ShapeError("displacement must have length 2n");
  if (!s_.allFinite() || !disp_.allFinite()) throw ValidationError("S and displacement must be finite");
  if (!(symplectic_defect(s_) <= tol)) throw ValidationError("S is not symplectic: ||S^T Omega S - Omega||_max > tol");
}

GaussianCircuit GaussianCircuit::identity(unsigned modes) {
  return GaussianCircuit(Eigen::MatrixXd::Identity(2 * modes, 2 * modes), Eigen::VectorXd::Zero(2 * modes));
}

GaussianCircuit compose(const GaussianCircuit &first, const GaussianCircuit &second) {
  if (first.modes() != second.modes()) throw ValidationError("compose: mode counts differ");
  // S2 (S1 (r - d1) - d2) = S2 S1 (r - d1 - S1^{-1} d2)
  const Eigen::VectorXd shift = first.S().lu().solve(second.displacement());
  return GaussianCircuit(second.S() * first.S(), first.displacement() + shift);
}

GaussianCircuit logical_clifford_symplectic(const QuditSystem &system, GateKind kind) {
  if (system.n() != arity(kind)) throw ShapeError("logical_clifford_symplectic: system size does not match the gate");
  std::vector<unsigned> targets(arity(kind));
  for (unsigned i = 0; i < targets.size(); ++i) targets[i] = i;
  return logical_clifford_symplectic(system, kind, targets);
}

GaussianCircuit logical_clifford_symplectic(const QuditSystem &system, GateKind kind,
                                            const std::vector<unsigned> &targets) {
  validate_targets(system, targets, arity(kind));
  const unsigned n = system.n();
  const unsigned d = system.d();
  const double c = lattice_step(d);
  const double alpha = std::sqrt(2.0 * std::numbers::pi / d);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  Eigen::VectorXd disp = Eigen::VectorXd::Zero(2 * n);
  const unsigned q0 = targets[0];
  const unsigned p0 = n + targets[0];
  switch (kind) {
    case GateKind::Fourier:  // (q, p) -> (p, -q)
      s(q0, q0) = 0.0;
      s(q0, p0) = 1.0;
      s(p0, q0) = -1.0;
      s(p0, p0) = 0.0;
      break;
    case GateKind::Phase:  // p -> p - q, plus a half-step offset for odd d
      s(p0, q0) = -1.0;
      if (d % 2 == 1) disp(p0) = -c;
      break;
    case GateKind::Shift: disp(q0) = -alpha; break;
    case GateKind::Clock: disp(p0) = alpha; break;
    case GateKind::Sum: {
      // q2 -> q2 + q1, p1 -> p1 - p2
      const unsigned q1 = targets[1];
      const unsigned p1 = n + targets[1];
      s(q1, q0) = 1.0;
      s(p0, p1) = -1.0;
      break;
    }
  }
  return GaussianCircuit(std::move(s), std::move(disp));
}

HomodyneSampler::HomodyneSampler(const DensityState &rho, const GaussianCircuit &circuit)
    : sys_(rho.system()), circuit_(circuit), coeffs_(gkp_wigner_coefficients(rho).values) {
  if (circuit.modes() != sys_.n()) throw ValidationError("Gaussian circuit mode count must equal n");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double a = std::abs(coeffs_[i]);
    if (a < kNormCutoff) continue;
    norm_ += a;
    index_.push_back(i);
    cum_.push_back(norm_);
  }
  if (index_.empty()) throw ValidationError("state has zero lattice norm");
  weight_ = norm_ * std::pow(sys_.d() / (8.0 * std::numbers::pi), sys_.n() / 2.0);
}

Eigen::VectorXd HomodyneSampler::image(const PhasePoint &u) const {
  const unsigned n = sys_.n();
  const double c = lattice_step(sys_.d());
  const std::vector<int> coords = u.coords();
  Eigen::VectorXd r(2 * n);
  for (unsigned i = 0; i < 2 * n; ++i) r(i) = c * coords[i] - circuit_.displacement()(i);
  // Fixed summation order keeps x bit-reproducible.
  Eigen::VectorXd x(n);
  for (unsigned row = 0; row < n; ++row) {
    double acc = 0.0;
    for (unsigned col = 0; col < 2 * n; ++col) acc += circuit_.S()(row, col) * r(col);
    x(row) = acc;
  }
  return x;
}

HomodyneSample HomodyneSampler::draw(Rng &rng) const {
  const double r = rng.uniform() * norm_;
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), r);
  const std::size_t k = std::min(static_cast<std::size_t>(it - cum_.begin()), cum_.size() - 1);
  const std::size_t idx = index_[k];
  HomodyneSample s;
  s.sampled_point = coeffs_.grid().point(idx);
  s.x = image(s.sampled_point);
  s.branch.assign(sys_.n(), 0);
  s.sign = coeffs_[idx].real() < 0.0 ? -1 : 1;
  s.weight = weight_;
  return s;
}

std::vector<HomodyneSample> simulate_homodyne(const DensityState &rho, const GaussianCircuit &circuit,
                                              std::uint64_t seed, std::size_t count) {
  const HomodyneSampler sampler(rho, circuit);
  Rng rng(seed);
  std::vector<HomodyneSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.draw(rng));
  return out;
}

PseudoProbabilityReport pseudo_probability_report(const DensityState &rho, const GaussianCircuit &circuit,
                                                  std::uint64_t num_samples, std::uint64_t seed) {
  const HomodyneSampler sampler(rho, circuit);
  PseudoProbabilityReport rep;
  rep.samples = num_samples;
  rep.caveat =
      "signed weights estimate a pseudo-probability on the unit-cell lattice; it is not normalizable and not a "
      "probability distribution";
  Rng rng(seed);
  std::map<std::size_t, HistogramBin> bins;
  for (std::uint64_t i = 0; i < num_samples; ++i) {
    const HomodyneSample s = sampler.draw(rng);
    const std::size_t key = sampler.coefficients().grid().index(s.sampled_point);
    auto it = bins.find(key);
    if (it == bins.end()) it = bins.emplace(key, HistogramBin{s.sampled_point, s.x, 0, 0.0}).first;
    it->second.count += 1;
    it->second.signed_weight += s.sign * s.weight;
  }
  for (auto &[key, bin] : bins) {
    bin.signed_weight /= static_cast<double>(num_samples);
    rep.bins.push_back(std::move(bin));
  }
  return rep;
}

}  // namespace qmagic
