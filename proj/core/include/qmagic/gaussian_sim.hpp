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

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qmagic/clifford.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

class Rng;

// Phase-space map r -> S (r - displacement) on (q_1..q_n, p_1..p_n).
class GaussianCircuit {
 public:
  // Throws ValidationError unless ||S^T Omega S - Omega||_max <= tol.
  GaussianCircuit(Eigen::MatrixXd s, Eigen::VectorXd displacement, double tol = 1e-9);

  static GaussianCircuit identity(unsigned modes);

  unsigned modes() const { return static_cast<unsigned>(s_.rows() / 2); }
  const Eigen::MatrixXd &S() const { return s_; }
  const Eigen::VectorXd &displacement() const { return disp_; }

 private:
  Eigen::MatrixXd s_;
  Eigen::VectorXd disp_;
};

double symplectic_defect(const Eigen::MatrixXd &s);
// `first`, then `second`.
GaussianCircuit compose(const GaussianCircuit &first, const GaussianCircuit &second);

// Gaussian unitary realizing a logical Clifford generator on the GKP code:
// FOURIER a quarter rotation, PHASE a shear, SUM a two-mode shear, SHIFT and
// CLOCK displacements by sqrt(2 pi/d). Conjugation moves the lattice weights
// exactly as clifford_coordinate_action moves O-basis labels.
GaussianCircuit logical_clifford_symplectic(const QuditSystem &system, GateKind kind);
GaussianCircuit logical_clifford_symplectic(const QuditSystem &system, GateKind kind,
                                            const std::vector<unsigned> &targets);

struct HomodyneSample {
  Eigen::VectorXd x;         // position block of the image point
  std::vector<long> branch;  // lattice winding; always 0 (unit cell)
  PhasePoint sampled_point;  // over Z_{2d}^{2n}
  int sign = 1;
  double weight = 0.0;
};

// Draws u over the unit cell with probability |x(u)|/||x||_1 and maps it
// through the circuit; shares the precomputed table between draws.
class HomodyneSampler {
 public:
  HomodyneSampler(const DensityState &rho, const GaussianCircuit &circuit);

  HomodyneSample draw(Rng &rng) const;
  // q-block of S (sqrt(pi/2d) u - displacement).
  Eigen::VectorXd image(const PhasePoint &u) const;
  const QuasiDistribution &coefficients() const { return coeffs_; }
  double weight() const { return weight_; }

 private:
  QuditSystem sys_;
  GaussianCircuit circuit_;
  QuasiDistribution coeffs_;
  std::vector<std::size_t> index_;
  std::vector<double> cum_;
  double norm_ = 0.0;
  double weight_ = 0.0;
};

std::vector<HomodyneSample> simulate_homodyne(const DensityState &rho, const GaussianCircuit &circuit,
                                              std::uint64_t seed, std::size_t count = 1);

struct HistogramBin {
  PhasePoint point;
  Eigen::VectorXd x;
  std::uint64_t count = 0;
  double signed_weight = 0.0;  // sum of sign * weight over hits, divided by num_samples
};

struct PseudoProbabilityReport {
  std::vector<HistogramBin> bins;  // ordered by lattice point
  std::uint64_t samples = 0;
  bool normalizable = false;
  std::string caveat;
};

PseudoProbabilityReport pseudo_probability_report(const DensityState &rho, const GaussianCircuit &circuit,
                                                  std::uint64_t num_samples, std::uint64_t seed);

}  // namespace qmagic
