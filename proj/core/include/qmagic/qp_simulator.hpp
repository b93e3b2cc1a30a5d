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
#include <optional>
#include <string>
#include <vector>

#include "qmagic/clifford.hpp"
#include "qmagic/measures.hpp"

namespace qmagic {

// A unitary acting on `targets`. Clifford generators carry their kind so the
// simulator can use the coordinate map instead of dense conjugation.
struct Gate {
  std::vector<unsigned> targets;
  std::optional<GateKind> clifford;
  Matrix local;
  std::string name;

  static Gate generator(const QuditSystem &system, GateKind kind, std::vector<unsigned> targets);
  static Gate unitary(const QuditSystem &system, Matrix local, std::vector<unsigned> targets,
                      std::string name = "UNITARY");
};

class MeasurementEffect {
 public:
  enum class Kind { Computational, Explicit };

  // 1 on the unmeasured qudits tensored with |outcome><outcome| on `qudits`.
  static MeasurementEffect computational(const QuditSystem &system, std::vector<unsigned> qudits,
                                         std::vector<int> outcome);
  // Positive semidefinite with eigenvalues <= 1 (to 1e-9).
  static MeasurementEffect explicit_operator(const DenseOperator &op);

  Kind kind() const { return kind_; }
  const std::vector<unsigned> &qudits() const { return qudits_; }
  const std::vector<int> &outcome() const { return outcome_; }
  DenseOperator dense(const QuditSystem &system) const;

 private:
  Kind kind_ = Kind::Computational;
  std::vector<unsigned> qudits_;
  std::vector<int> outcome_;
  std::optional<DenseOperator> op_;
};

class CircuitDescription {
 public:
  CircuitDescription(const QuditSystem &system, DensityState input, std::vector<Gate> gates,
                     MeasurementEffect measurement);

  const QuditSystem &system() const { return system_; }
  const DensityState &input() const { return input_; }
  const std::vector<Gate> &gates() const { return gates_; }
  const MeasurementEffect &measurement() const { return measurement_; }
  // Product of all gates, first gate rightmost.
  DenseOperator unitary() const;

 private:
  QuditSystem system_;
  DensityState input_;
  std::vector<Gate> gates_;
  MeasurementEffect measurement_;
};

enum class Frame { O, Chi };

struct EstimateReport {
  double estimate = 0.0;
  double epsilon = 0.0;
  double failure_prob = 0.0;
  std::uint64_t samples_used = 0;
  double forward_norm = 0.0;
  bool forward_norm_exact = true;
  std::uint64_t seed = 0;
  unsigned streams = 0;
  Frame frame = Frame::O;
  double sample_stddev = 0.0;
};

// Fixed default so reports do not depend on the host.
inline constexpr unsigned kDefaultStreams = 4;

QuasiDistribution frame_state_coeffs(const DensityState &rho);
// Column lambda' -> d^{-n} Tr(O_{lambda'} U O_lambda U^dagger) of a gate (restricted domain).
QuasiDistribution frame_unitary_coeffs(const QuditSystem &system, const Gate &gate, const PhasePoint &lambda);
// Tr(Pi O_lambda).
cplx frame_measurement_coeffs(const QuditSystem &system, const MeasurementEffect &effect, const PhasePoint &lambda);
double max_measurement_coeff(const QuditSystem &system, const MeasurementEffect &effect, Frame frame = Frame::O);

struct ForwardNorm {
  double value = 0.0;
  bool exact = true;  // false when a gate maximum came from sampled labels
  double state_norm = 0.0;
  std::vector<double> gate_norms;
  double measurement_norm = 0.0;
};
ForwardNorm forward_norm(const CircuitDescription &circuit, Frame frame = Frame::O);

// ceil(2 M^2 ln(2/p_fail) / epsilon^2).
std::uint64_t sample_count(double forward_norm, double epsilon, double p_fail);

struct TrajectoryStats {
  double mean = 0.0;
  double variance = 0.0;  // unbiased sample variance of one trajectory
  std::uint64_t count = 0;
};
// Mean of `samples` trajectories split over `streams` seeded streams.
TrajectoryStats run_trajectories(const CircuitDescription &circuit, Frame frame, std::uint64_t samples,
                                 std::uint64_t seed, unsigned streams = kDefaultStreams);

EstimateReport estimate_born(const CircuitDescription &circuit, double epsilon, double p_fail, std::uint64_t seed,
                             unsigned streams = kDefaultStreams);
EstimateReport estimate_born_char(const CircuitDescription &circuit, double epsilon, double p_fail,
                                  std::uint64_t seed, unsigned streams = kDefaultStreams);

}  // namespace qmagic
