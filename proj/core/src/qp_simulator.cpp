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

#include "qmagic/qp_simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>
#include <unordered_map>

#include "qmagic/covariance.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/operator_basis.hpp"
#include "qmagic/pauli.hpp"
#include "qmagic/random.hpp"

namespace qmagic {

Gate Gate::generator(const QuditSystem &system, GateKind kind, std::vector<unsigned> targets) {
  validate_targets(system, targets, arity(kind));
  Gate g;
  g.targets = std::move(targets);
  g.clifford = kind;
  g.local = clifford_generator(QuditSystem(system.d(), arity(kind)), kind).matrix();
  g.name = std::string(to_string(kind));
  return g;
}

Gate Gate::unitary(const QuditSystem &system, Matrix local, std::vector<unsigned> targets, std::string name) {
  const auto k = static_cast<unsigned>(targets.size());
  validate_targets(system, targets, k);
  if (k == 0) throw ValidationError("gate needs at least one target");
  const QuditSystem ls(system.d(), k);
  DenseOperator op(ls, std::move(local));
  if (!op.is_unitary(1e-9)) throw ValidationError("gate '" + name + "' is not unitary");
  Gate g;
  g.targets = std::move(targets);
  g.local = op.matrix();
  g.name = std::move(name);
  return g;
}

MeasurementEffect MeasurementEffect::computational(const QuditSystem &system, std::vector<unsigned> qudits,
                                                   std::vector<int> outcome) {
  if (qudits.size() != outcome.size()) throw ValidationError("measurement: one outcome per measured qudit is required");
  validate_targets(system, qudits, static_cast<unsigned>(qudits.size()));
  for (int o : outcome)
    if (o < 0 || o >= static_cast<int>(system.d())) throw ValidationError("measurement: outcome out of range");
  MeasurementEffect e;
  e.kind_ = Kind::Computational;
  e.qudits_ = std::move(qudits);
  e.outcome_ = std::move(outcome);
  return e;
}

MeasurementEffect MeasurementEffect::explicit_operator(const DenseOperator &op) {
  if (!op.is_hermitian(1e-9)) throw ValidationError("measurement operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(op.matrix(), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-9 || es.eigenvalues().maxCoeff() > 1.0 + 1e-9)
    throw ValidationError("measurement operator eigenvalues must lie in [0, 1]");
  MeasurementEffect e;
  e.kind_ = Kind::Explicit;
  e.op_ = op;
  return e;
}

DenseOperator MeasurementEffect::dense(const QuditSystem &system) const {
  if (kind_ == Kind::Explicit) {
    if (!(op_->system() == system)) throw ShapeError("measurement operator lives on a different system");
    return *op_;
  }
  const std::size_t dim = system.dim();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    const std::vector<int> xd = digits(x, system.d(), system.n());
    bool hit = true;
    for (std::size_t i = 0; i < qudits_.size(); ++i) hit = hit && xd[qudits_[i]] == outcome_[i];
    if (hit) m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return DenseOperator(system, std::move(m));
}

CircuitDescription::CircuitDescription(const QuditSystem &system, DensityState input, std::vector<Gate> gates,
                                       MeasurementEffect measurement)
    : system_(system), input_(std::move(input)), gates_(std::move(gates)), measurement_(std::move(measurement)) {
  if (!(input_.system() == system_)) throw ShapeError("circuit input lives on a different system");
  for (const Gate &g : gates_) {
    validate_targets(system_, g.targets, static_cast<unsigned>(g.targets.size()));
    const std::size_t ldim = checked_pow(system_.d(), static_cast<unsigned>(g.targets.size()), system_.dim());
    if (g.local.rows() != static_cast<Eigen::Index>(ldim) || g.local.cols() != static_cast<Eigen::Index>(ldim))
      throw ShapeError("gate '" + g.name + "' has the wrong shape for its targets");
  }
  if (measurement_.kind() == MeasurementEffect::Kind::Explicit) measurement_.dense(system_);
  else
    for (unsigned q : measurement_.qudits())
      if (q >= system_.n()) throw ValidationError("measured qudit out of range");
}

DenseOperator CircuitDescription::unitary() const {
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(system_.dim()), static_cast<Eigen::Index>(system_.dim()));
  for (const Gate &g : gates_) u = embed(system_, g.local, g.targets).matrix() * u;
  return DenseOperator(system_, std::move(u));
}

namespace {

constexpr double kZero = 1e-14;

// Sparse column over the gate's local restricted grid.
struct Column {
  std::vector<std::size_t> index;
  std::vector<cplx> value;
  std::vector<double> cum;
  double norm = 0.0;
};

// Dense local column for the local label `lc` (coordinates over k qudits).
std::vector<cplx> local_column(Frame frame, unsigned d, const Matrix &u, const std::vector<int> &lc) {
  const auto k = static_cast<unsigned>(lc.size() / 2);
  const QuditSystem ls(d, k);
  if (frame == Frame::O) {
    PhasePoint p;
    p.modulus = static_cast<int>(d);
    p.l.assign(lc.begin(), lc.begin() + k);
    p.m.assign(lc.begin() + k, lc.end());
    const Matrix v = u * o_operator(ls, p).matrix() * u.adjoint();
    std::vector<cplx> t = o_traces_against(ls, v, Domain::Restricted);
    for (cplx &c : t) c /= static_cast<double>(ls.dim());
    return t;
  }
  PauliLabel lab;
  lab.a.assign(lc.begin(), lc.begin() + k);
  lab.b.assign(lc.begin() + k, lc.end());
  const Matrix v = u * heisenberg_weyl(ls, lab).matrix() * u.adjoint();
  return weyl_coefficients(ls, v);
}

Column make_column(const std::vector<cplx> &dense) {
  Column c;
  double acc = 0.0;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    const double a = std::abs(dense[i]);
    if (a < kZero) continue;
    acc += a;
    c.index.push_back(i);
    c.value.push_back(dense[i]);
    c.cum.push_back(acc);
  }
  c.norm = acc;
  if (c.index.empty()) throw NumericalError("frame column is identically zero (frame inconsistency)");
  return c;
}

double column_norm(const std::vector<cplx> &dense) {
  double acc = 0.0;
  for (const cplx &v : dense)
    if (std::abs(v) >= kZero) acc += std::abs(v);
  return acc;
}

std::size_t pick(const std::vector<double> &cum, double r) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), r);
  const auto i = static_cast<std::size_t>(it - cum.begin());
  return std::min(i, cum.size() - 1);
}

// Closed-form measurement coefficient for a computational effect.
cplx computational_coeff(Frame frame, unsigned d, unsigned n, const MeasurementEffect &e, const std::vector<int> &c) {
  std::vector<int> outcome(n, -1);
  for (std::size_t i = 0; i < e.qudits().size(); ++i) outcome[e.qudits()[i]] = e.outcome()[i];
  cplx acc = 1.0;
  for (unsigned q = 0; q < n; ++q) {
    const long l = c[q];
    const long m = c[n + q];
    if (frame == Frame::O) {
      if (outcome[q] < 0) {
        // Tr O_{l,m}
        if (d % 2 == 0)
          acc *= (l % 2 == 0) ? (m % 2 == 0 ? 2.0 : 0.0) : 0.0;
        else
          acc *= ((l * m) % 2 == 0) ? 1.0 : -1.0;
      } else {
        // <i| O_{l,m} |i> = e^{-i pi ml/d} omega^{m i} if l = 2i mod d
        const long i = outcome[q];
        if (mod(l - 2 * i, d) != 0) return 0.0;
        acc *= root_2d(d, -m * l) * omega(d, m * i);
      }
    } else {
      // Tr P(a,b) = d [a = b = 0]; <i| P(a,b) |i> = [a = 0] omega^{b i}
      if (outcome[q] < 0) {
        if (l != 0 || m != 0) return 0.0;
        acc *= static_cast<double>(d);
      } else {
        if (l != 0) return 0.0;
        acc *= omega(d, m * outcome[q]);
      }
    }
    if (acc == cplx(0.0, 0.0)) return 0.0;
  }
  return acc;
}

std::vector<cplx> measurement_table(Frame frame, const QuditSystem &sys, const MeasurementEffect &e) {
  const Matrix pi = e.dense(sys).matrix();
  if (frame == Frame::O) return o_traces_against(sys, pi, Domain::Restricted);
  std::vector<cplx> w = weyl_coefficients(sys, pi);
  for (cplx &v : w) v = std::conj(v) * static_cast<double>(sys.dim());
  return w;
}

std::size_t local_index(const std::vector<int> &c, const std::vector<unsigned> &targets, unsigned n, unsigned d) {
  std::size_t r = 0;
  for (unsigned t : targets) r = r * d + static_cast<std::size_t>(c[t]);
  for (unsigned t : targets) r = r * d + static_cast<std::size_t>(c[n + t]);
  return r;
}

class Engine {
 public:
  Engine(const CircuitDescription &circuit, Frame frame)
      : circuit_(circuit), sys_(circuit.system()), frame_(frame), grid_(sys_, Domain::Restricted) {
    const unsigned d = sys_.d();
    // Input table.
    if (frame_ == Frame::O) {
      const QuasiDistribution x = x_distribution(circuit.input());
      for (std::size_t i = 0; i < x.size(); ++i) add_state(i, x[i], 1.0);
    } else {
      const QuasiDistribution chi = characteristic_fn(circuit.input());
      std::vector<int> c, cc(2 * sys_.n());
      for (std::size_t i = 0; i < chi.size(); ++i) {
        grid_.coords(i, c);
        for (std::size_t j = 0; j < c.size(); ++j) cc[j] = static_cast<int>(mod(-c[j], d));
        const std::size_t conj = grid_.index(cc);
        if (conj < i) continue;  // represented by its partner
        add_state(i, chi[i], conj == i ? 1.0 : 2.0);
      }
    }
    if (state_norm_ < kZero) throw ValidationError("input state has zero frame norm");
    for (const Gate &g : circuit.gates()) {
      if (frame_ == Frame::O && g.clifford)
        maps_.push_back(clifford_coordinate_action(sys_, *g.clifford, g.targets));
      else
        maps_.emplace_back(std::nullopt);
    }
    if (circuit.measurement().kind() == MeasurementEffect::Kind::Explicit)
      meas_table_ = measurement_table(frame_, sys_, circuit.measurement());
  }

  double state_norm() const { return state_norm_; }
  const PhaseGrid &grid() const { return grid_; }

  cplx measurement(const std::vector<int> &c) const {
    if (!meas_table_.empty()) return meas_table_[grid_.index(c)];
    return computational_coeff(frame_, sys_.d(), sys_.n(), circuit_.measurement(), c);
  }

  Column build_column(std::size_t g, std::size_t local) const {
    const Gate &gate = circuit_.gates()[g];
    const auto k = static_cast<unsigned>(gate.targets.size());
    std::vector<int> lc = digits(local, sys_.d(), 2 * k);
    return make_column(local_column(frame_, sys_.d(), gate.local, lc));
  }

  // One trajectory; caches hold memoized columns per gate.
  double trajectory(Rng &rng, std::vector<std::unordered_map<std::size_t, Column>> &cache) const {
    const unsigned d = sys_.d();
    const unsigned n = sys_.n();
    const std::size_t s = pick(state_cum_, rng.uniform() * state_norm_);
    std::vector<int> c, tmp;
    grid_.coords(state_index_[s], c);
    cplx w = state_norm_ * state_unit_[s];
    for (std::size_t g = 0; g < maps_.size(); ++g) {
      if (maps_[g]) {
        const int sign = reduce_coords(d, maps_[g]->apply(c), tmp);
        c.swap(tmp);
        w *= static_cast<double>(sign);
        continue;
      }
      const Gate &gate = circuit_.gates()[g];
      const std::size_t key = local_index(c, gate.targets, n, d);
      auto it = cache[g].find(key);
      if (it == cache[g].end()) it = cache[g].emplace(key, build_column(g, key)).first;
      const Column &col = it->second;
      const std::size_t j = pick(col.cum, rng.uniform() * col.norm);
      const cplx v = col.value[j];
      w *= v / std::abs(v) * col.norm;
      const auto k = static_cast<unsigned>(gate.targets.size());
      const std::vector<int> lc = digits(col.index[j], d, 2 * k);
      for (unsigned t = 0; t < k; ++t) {
        c[gate.targets[t]] = lc[t];
        c[n + gate.targets[t]] = lc[k + t];
      }
    }
    return (w * measurement(c)).real();
  }

  std::size_t gate_count() const { return maps_.size(); }

 private:
  void add_state(std::size_t i, cplx v, double weight) {
    const double a = std::abs(v);
    if (a < kZero) return;
    state_norm_ += weight * a;
    state_index_.push_back(i);
    state_unit_.push_back(v / a);
    state_cum_.push_back(state_norm_);
  }

  const CircuitDescription &circuit_;
  QuditSystem sys_;
  Frame frame_;
  PhaseGrid grid_;
  double state_norm_ = 0.0;
  std::vector<std::size_t> state_index_;
  std::vector<cplx> state_unit_;
  std::vector<double> state_cum_;
  std::vector<std::optional<SymplecticAffineMap>> maps_;
  std::vector<cplx> meas_table_;
};

// Neumaier-compensated sum.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  void merge(const Accumulator &o) {
    add(o.sum);
    comp += o.comp;
  }
  double value() const { return sum + comp; }
};

struct Partial {
  Accumulator s, s2;
  std::uint64_t count = 0;
};

double gate_max_norm(Frame frame, const QuditSystem &sys, const Gate &g, bool &exact) {
  if (g.clifford) return 1.0;
  const auto k = static_cast<unsigned>(g.targets.size());
  const std::size_t labels = checked_pow(sys.d(), 2 * k, std::size_t(1) << 40);
  constexpr std::size_t kExhaustive = 4096;
  constexpr std::size_t kSampled = 512;
  double best = 0.0;
  if (labels <= kExhaustive) {
    for (std::size_t i = 0; i < labels; ++i)
      best = std::max(best, column_norm(local_column(frame, sys.d(), g.local, digits(i, sys.d(), 2 * k))));
    return best;
  }
  exact = false;
  Rng rng(0);
  for (std::size_t s = 0; s < kSampled; ++s)
    best = std::max(best, column_norm(local_column(frame, sys.d(), g.local, digits(rng.below(labels), sys.d(), 2 * k))));
  return best;
}

}  // namespace

QuasiDistribution frame_state_coeffs(const DensityState &rho) { return x_distribution(rho, Domain::Restricted); }

QuasiDistribution frame_unitary_coeffs(const QuditSystem &system, const Gate &gate, const PhasePoint &lambda) {
  const PhaseGrid grid(system, Domain::Restricted);
  const std::vector<int> c = lambda.coords();
  if (c.size() != 2 * system.n()) throw ShapeError("frame_unitary_coeffs: point has the wrong qudit count");
  std::vector<cplx> out(grid.size(), 0.0);
  if (gate.clifford) {
    std::vector<int> red;
    const int sign = reduce_coords(system.d(), clifford_coordinate_action(system, *gate.clifford, gate.targets).apply(c), red);
    out[grid.index(red)] = static_cast<double>(sign);
    return QuasiDistribution(system, Domain::Restricted, std::move(out));
  }
  const unsigned n = system.n();
  const auto k = static_cast<unsigned>(gate.targets.size());
  std::vector<int> lc(2 * k);
  for (unsigned t = 0; t < k; ++t) {
    lc[t] = static_cast<int>(mod(c[gate.targets[t]], system.d()));
    lc[k + t] = static_cast<int>(mod(c[n + gate.targets[t]], system.d()));
  }
  const std::vector<cplx> local = local_column(Frame::O, system.d(), gate.local, lc);
  std::vector<int> full(c);
  for (int &v : full) v = static_cast<int>(mod(v, system.d()));
  for (std::size_t i = 0; i < local.size(); ++i) {
    const std::vector<int> li = digits(i, system.d(), 2 * k);
    for (unsigned t = 0; t < k; ++t) {
      full[gate.targets[t]] = li[t];
      full[n + gate.targets[t]] = li[k + t];
    }
    out[grid.index(full)] = local[i];
  }
  return QuasiDistribution(system, Domain::Restricted, std::move(out));
}

cplx frame_measurement_coeffs(const QuditSystem &system, const MeasurementEffect &effect, const PhasePoint &lambda) {
  const std::vector<int> c = lambda.coords();
  if (c.size() != 2 * system.n()) throw ShapeError("frame_measurement_coeffs: point has the wrong qudit count");
  if (effect.kind() == MeasurementEffect::Kind::Computational) {
    // Non-restricted coordinates: fold the sign first.
    std::vector<int> red;
    const int sign = reduce_coords(system.d(), c, red);
    return static_cast<double>(sign) * computational_coeff(Frame::O, system.d(), system.n(), effect, red);
  }
  return (effect.dense(system).matrix() * o_operator(system, lambda).matrix()).trace();
}

double max_measurement_coeff(const QuditSystem &system, const MeasurementEffect &effect, Frame frame) {
  if (effect.kind() == MeasurementEffect::Kind::Computational) {
    const auto unmeasured = static_cast<unsigned>(system.n() - effect.qudits().size());
    if (frame == Frame::Chi) return std::pow(static_cast<double>(system.d()), unmeasured);
    return system.even() ? std::pow(2.0, unmeasured) : 1.0;
  }
  double best = 0.0;
  for (const cplx &v : measurement_table(frame, system, effect)) best = std::max(best, std::abs(v));
  return best;
}

ForwardNorm forward_norm(const CircuitDescription &circuit, Frame frame) {
  const QuditSystem &sys = circuit.system();
  ForwardNorm f;
  if (frame == Frame::O)
    f.state_norm = lp_norm(x_distribution(circuit.input()), 1.0);
  else
    f.state_norm = lp_norm(characteristic_fn(circuit.input()), 1.0);
  f.value = f.state_norm;
  for (const Gate &g : circuit.gates()) {
    const double v = gate_max_norm(frame, sys, g, f.exact);
    f.gate_norms.push_back(v);
    f.value *= v;
  }
  f.measurement_norm = max_measurement_coeff(sys, circuit.measurement(), frame);
  f.value *= f.measurement_norm;
  return f;
}

std::uint64_t sample_count(double forward_norm, double epsilon, double p_fail) {
  if (!(epsilon > 0.0)) throw ValidationError("sample_count: epsilon must be positive");
  if (!(p_fail > 0.0 && p_fail < 1.0)) throw ValidationError("sample_count: p_fail must lie in (0, 1)");
  if (!(forward_norm >= 0.0) || !std::isfinite(forward_norm))
    throw ValidationError("sample_count: forward norm must be finite and non-negative");
  const double x = 2.0 * forward_norm * forward_norm * std::log(2.0 / p_fail) / (epsilon * epsilon);
  if (x > 1e18) throw ValidationError("sample_count: required sample count is astronomically large");
  // Values that are integers up to rounding noise are not bumped to the next integer.
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, x)) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(x));
}

TrajectoryStats run_trajectories(const CircuitDescription &circuit, Frame frame, std::uint64_t samples,
                                 std::uint64_t seed, unsigned streams) {
  if (streams == 0) throw ValidationError("stream count must be positive");
  const Engine engine(circuit, frame);
  TrajectoryStats out;
  if (samples == 0) return out;
  std::vector<Partial> parts(streams);
  std::vector<std::exception_ptr> errors(streams);
  auto work = [&](unsigned s) {
    try {
      Rng rng(seed, s);
      std::vector<std::unordered_map<std::size_t, Column>> cache(engine.gate_count());
      const std::uint64_t count = samples / streams + (s < samples % streams ? 1 : 0);
      Partial &p = parts[s];
      for (std::uint64_t i = 0; i < count; ++i) {
        const double v = engine.trajectory(rng, cache);
        p.s.add(v);
        p.s2.add(v * v);
      }
      p.count = count;
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned s = 1; s < streams; ++s) threads.emplace_back(work, s);
  work(0);
  for (auto &t : threads) t.join();
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
  // Fixed-order pairwise merge.
  while (parts.size() > 1) {
    std::vector<Partial> next;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
      Partial p = parts[i];
      if (i + 1 < parts.size()) {
        p.s.merge(parts[i + 1].s);
        p.s2.merge(parts[i + 1].s2);
        p.count += parts[i + 1].count;
      }
      next.push_back(p);
    }
    parts.swap(next);
  }
  const double k = static_cast<double>(samples);
  out.count = samples;
  out.mean = parts[0].s.value() / k;
  out.variance = samples > 1 ? std::max(0.0, (parts[0].s2.value() - k * out.mean * out.mean) / (k - 1.0)) : 0.0;
  return out;
}

namespace {

EstimateReport estimate(const CircuitDescription &circuit, Frame frame, double epsilon, double p_fail,
                        std::uint64_t seed, unsigned streams) {
  const ForwardNorm f = forward_norm(circuit, frame);
  EstimateReport r;
  r.epsilon = epsilon;
  r.failure_prob = p_fail;
  r.forward_norm = f.value;
  r.forward_norm_exact = f.exact;
  r.samples_used = sample_count(f.value, epsilon, p_fail);
  r.seed = seed;
  r.streams = streams;
  r.frame = frame;
  const TrajectoryStats st = run_trajectories(circuit, frame, r.samples_used, seed, streams);
  r.estimate = st.mean;
  r.sample_stddev = std::sqrt(st.variance);
  return r;
}

}  // namespace

EstimateReport estimate_born(const CircuitDescription &circuit, double epsilon, double p_fail, std::uint64_t seed,
                             unsigned streams) {
  return estimate(circuit, Frame::O, epsilon, p_fail, seed, streams);
}

EstimateReport estimate_born_char(const CircuitDescription &circuit, double epsilon, double p_fail,
                                  std::uint64_t seed, unsigned streams) {
  return estimate(circuit, Frame::Chi, epsilon, p_fail, seed, streams);
}

}  // namespace qmagic
