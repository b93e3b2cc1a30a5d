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

// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qmagic/covariance.hpp"
#include "qmagic/gaussian_sim.hpp"
#include "qmagic/gkp_bridge.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/qp_simulator.hpp"
#include "qmagic/random.hpp"
#include "qmagic/stabilizer.hpp"
#include "qmagic/states.hpp"

using namespace qmagic;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Half pure, half rank-2 mixed.
DensityState random_state(const QuditSystem &s, Rng &rng, int i) {
  return i % 2 == 0 ? haar_pure_state(s, rng) : random_mixed_state(s, rng, 2);
}

struct GridPoint {
  unsigned d, n;
};

std::vector<GridPoint> theorem_grid() {
  std::vector<GridPoint> g;
  for (unsigned d = 2; d <= 5; ++d)
    for (unsigned n = 1; n <= 2; ++n)
      if (checked_pow(d, n, 1u << 20) <= 25) g.push_back({d, n});
  return g;
}

const std::vector<double> kPs = {0.5, 1.0, 2.0, 3.0};

struct ChiSquare {
  double stat = 0.0;
  std::size_t dof = 0;
  double pvalue() const {
    if (dof == 0) return 1.0;
    return boost::math::cdf(boost::math::complement(boost::math::chi_squared(static_cast<double>(dof)), stat));
  }
};

// Goodness of fit; cells with expected count below 5 are pooled into one.
ChiSquare chi_square(const std::map<std::vector<int>, double> &expected,
                     const std::map<std::vector<int>, double> &observed, std::size_t n) {
  ChiSquare out;
  double pooled_e = 0, pooled_o = 0;
  std::size_t cells = 0;
  for (const auto &[pt, p] : expected) {
    const double e = p * static_cast<double>(n);
    const auto it = observed.find(pt);
    const double ob = it == observed.end() ? 0.0 : it->second;
    if (e < 5.0) {
      pooled_e += e;
      pooled_o += ob;
      continue;
    }
    out.stat += (ob - e) * (ob - e) / e;
    ++cells;
  }
  if (pooled_e > 0) {
    out.stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++cells;
  }
  out.dof = cells > 0 ? cells - 1 : 0;
  return out;
}

void criterion1(Outcome &o) {
  const auto t0 = Clock::now();
  Rng rng(1001);
  double worst = 0;
  std::size_t cases = 0;
  for (const GridPoint &g : theorem_grid()) {
    const QuditSystem s(g.d, g.n);
    for (int i = 0; i < 50; ++i) {
      const DensityState rho = random_state(s, rng, i);
      for (double p : kPs) {
        const TheoremReport r = verify_theorem1(rho, p);
        worst = std::max(worst, r.residual);
        if (r.wigner_lhs) worst = std::max(worst, std::abs(*r.wigner_lhs - r.lhs));
        ++cases;
      }
    }
  }
  const double secs = seconds_since(t0);
  o.require(worst < 1e-9, "residual " + std::to_string(worst));
  o.require(secs < 60, "runtime " + std::to_string(secs) + " s");
  o.detail << (o.pass ? "" : "; ") << cases << " cases, max residual " << worst << ", " << secs << " s";
}

// |<P>| over the four qubit Paulis by dense multiplication.
double t_state_m2_oracle() {
  const Matrix rho = t_state(QuditSystem(2, 1)).matrix();
  Matrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, cplx(0, -1), cplx(0, 1), 0;
  z << 1, 0, 0, -1;
  double s4 = 0;
  for (const Matrix &p : {Matrix(Matrix::Identity(2, 2)), x, y, z}) s4 += std::pow(std::abs((rho * p).trace()), 4);
  // M_2 = -log(sum <P>^4 / d)
  return -std::log(s4 / 2.0);
}

void criterion2(Outcome &o) {
  Rng rng(1002);
  double worst = 0, worst_renyi = 0;
  for (const GridPoint &g : theorem_grid()) {
    const QuditSystem s(g.d, g.n);
    for (int i = 0; i < 50; ++i) {
      const DensityState rho = random_state(s, rng, i);
      for (double p : kPs) worst = std::max(worst, verify_theorem2(rho, p).residual);
      if (g.d == 2 && i % 2 == 0) {
        const TheoremReport r = verify_theorem2(rho, 4.0);
        worst_renyi = std::max(worst_renyi, std::abs(*r.renyi_reconstructed - stabilizer_renyi(rho, 2.0)));
      }
    }
  }
  const double oracle = t_state_m2_oracle();
  const DensityState t = t_state(QuditSystem(2, 1));
  const double direct = stabilizer_renyi(t, 2.0);
  const double recon = *verify_theorem2(t, 4.0).renyi_reconstructed;
  o.require(worst < 1e-9, "residual " + std::to_string(worst));
  o.require(worst_renyi < 1e-8, "M2 reconstruction " + std::to_string(worst_renyi));
  o.require(std::abs(oracle - std::log(4.0 / 3.0)) < 1e-9, "oracle M2(T)");
  o.require(std::abs(direct - oracle) < 1e-9 && std::abs(recon - oracle) < 1e-9, "M2(T) mismatch");
  o.detail << (o.pass ? "" : "; ") << "max residual " << worst << ", M2 reconstruction error " << worst_renyi
           << ", M2(T) = " << direct << " (oracle " << oracle << ")";
}

void criterion3(Outcome &o) {
  Rng rng(1003);
  double inv = 0, mult = 0, stab = 0, min_pure = 1e9;
  for (unsigned d = 2; d <= 5; ++d) {
    const QuditSystem s(d, 2);
    for (int i = 0; i < 50; ++i) {
      const DensityState rho = haar_pure_state(s, rng);
      const DenseOperator u = word_unitary(s, random_clifford_word(s, 10, rng));
      inv = std::max(inv, std::abs(magic_negativity(evolve(u, rho)) - magic_negativity(rho)));
    }
    const QuditSystem q(d, 1);
    for (int i = 0; i < 20; ++i) {
      const DensityState a = random_state(q, rng, i), b = random_state(q, rng, i + 1);
      mult = std::max(mult, std::abs(magic_negativity(tensor(a, b)) - magic_negativity(a) * magic_negativity(b)));
    }
    for (const DensityState &st : enumerate_single_qudit_stabilizers(d))
      stab = std::max(stab, std::abs(magic_negativity(st) - 1.0));
    for (int i = 0; i < 200; ++i) min_pure = std::min(min_pure, magic_negativity(haar_pure_state(q, rng)));
  }
  o.require(inv < 1e-9, "Clifford invariance " + std::to_string(inv));
  o.require(mult < 1e-9, "multiplicativity " + std::to_string(mult));
  o.require(stab < 1e-9, "stabilizer minimum " + std::to_string(stab));
  o.require(min_pure >= 1 - 1e-9, "pure lower bound " + std::to_string(min_pure));
  o.detail << (o.pass ? "" : "; ") << "invariance " << inv << ", multiplicativity " << mult << ", stabilizer |norm-1| "
           << stab << ", min pure norm " << min_pure;
}

void criterion4(Outcome &o) {
  Rng rng(1004);
  double worst = 0;
  for (unsigned d = 2; d <= 5; ++d)
    for (unsigned n : {1u, 2u}) {
      const QuditSystem s(d, n);
      for (int i = 0; i < 10; ++i) {
        const DensityState rho = random_state(s, rng, i);
        const QuasiDistribution c = gkp_wigner_coefficients(rho).values;
        const std::vector<cplx> ref = oracle::dense_x(s, rho.matrix(), Domain::Full);
        for (std::size_t k = 0; k < ref.size(); ++k) worst = std::max(worst, std::abs(c[k] - ref[k]));
      }
    }
  std::size_t states = 0;
  bool flat = true;
  const auto check_flat = [&](const DensityState &st, unsigned d, unsigned n) {
    const std::size_t dn = checked_pow(d, n, 1u << 30);
    const QuasiDistribution x = x_distribution(st);
    bool ok = x.count_nonzero() == dn;
    for (const cplx &v : x.values())
      if (std::abs(v) > 1e-12) ok = ok && std::abs(std::abs(v) - 1.0 / static_cast<double>(dn)) < 1e-10;
    ok = ok && gkp_wigner_coefficients(st).values.count_nonzero() == checked_pow(4 * d, n, 1u << 30);
    flat = flat && ok;
    ++states;
  };
  for (unsigned d = 2; d <= 5; ++d)
    for (const DensityState &st : enumerate_single_qudit_stabilizers(d)) check_flat(st, d, 1);
  for (unsigned d = 2; d <= 5; ++d) {
    const QuditSystem s(d, 2);
    const StabilizerGroup bell = parse_generator_lines(s, "1,1|0,0|0\n0,0|1," + std::to_string(d - 1) + "|0");
    for (int i = 0; i < 10; ++i) {
      const DenseOperator u = word_unitary(s, random_clifford_word(s, 10, rng));
      check_flat(evolve(u, stabilizer_state(bell)), d, 2);
    }
  }
  o.require(worst < 1e-10, "dense vs lattice " + std::to_string(worst));
  o.require(flat, "flatness");
  o.detail << (o.pass ? "" : "; ") << "dense vs lattice max diff " << worst << ", " << states
           << " stabilizer states flat with (4d)^n peaks";
}

void criterion5(Outcome &o) {
  Rng rng(1005);
  double norm_gap = 0, perm_gap = 0, op_gap = 0;
  for (unsigned d : {3u, 5u})
    for (unsigned n : {1u, 2u}) {
      const QuditSystem s(d, n);
      const WignerPermutation perm = wigner_permutation(s);
      const PhaseGrid rg(s, Domain::Restricted);
      // Operator identity sign * O_u = A(target) checked densely.
      for (std::size_t i = 0; i < rg.size(); ++i) {
        const PhasePoint a = rg.point(perm.target[i]);
        const Matrix lhs = static_cast<double>(perm.sign[i]) * o_operator(s, rg.point(i)).matrix();
        op_gap = std::max(op_gap, max_abs_diff(lhs, phase_point_operator(s, a.l, a.m).matrix()));
      }
      for (int k = 0; k < 20; ++k) {
        const DensityState rho = random_state(s, rng, k);
        const QuasiDistribution x = x_distribution(rho);
        const QuasiDistribution w = discrete_wigner(rho);
        for (std::size_t i = 0; i < x.size(); ++i)
          perm_gap = std::max(perm_gap, std::abs(x[i] - static_cast<double>(perm.sign[i]) * w[perm.target[i]]));
        for (double p : kPs) norm_gap = std::max(norm_gap, std::abs(lp_norm(x, p) - lp_norm(w, p)));
      }
    }
  o.require(norm_gap < 1e-9, "norm gap " + std::to_string(norm_gap));
  o.require(perm_gap < 1e-12 && op_gap < 1e-12, "permutation relation");
  o.detail << (o.pass ? "" : "; ") << "max |‖x‖_p - ‖W‖_p| " << norm_gap << ", entrywise " << perm_gap
           << ", operator " << op_gap;
}

void criterion6(Outcome &o) {
  const auto t0 = Clock::now();
  const QuditSystem q(2, 1);
  const CircuitDescription c(q, zero_state(q),
                             {Gate::generator(q, GateKind::Fourier, {0}), Gate::unitary(q, t_gate_matrix(), {0}, "T"),
                              Gate::generator(q, GateKind::Fourier, {0})},
                             MeasurementEffect::computational(q, {0}, {0}));
  const double exact = std::pow(std::cos(std::numbers::pi / 8), 2);
  const double dense = oracle::dense_born(c);
  int within = 0;
  std::uint64_t samples = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const EstimateReport r = estimate_born(c, 0.02, 0.05, seed);
    samples = r.samples_used;
    if (std::abs(r.estimate - exact) <= 0.02) ++within;
  }
  // Dense column-sum oracle for the forward norm.
  double t_max = 0;
  const PhaseGrid g(q, Domain::Restricted);
  for (std::size_t i = 0; i < g.size(); ++i)
    t_max = std::max(t_max, oracle::l1(oracle::dense_column(q, t_gate_matrix(), g.point(i))));
  const double state = oracle::l1(oracle::dense_x(q, zero_state(q).matrix(), Domain::Restricted));
  double meas = 0;
  const Matrix pi = c.measurement().dense(q).matrix();
  for (std::size_t i = 0; i < g.size(); ++i)
    meas = std::max(meas, std::abs((pi * o_operator(q, g.point(i)).matrix()).trace()));
  const double oracle_norm = state * t_max * meas;
  const ForwardNorm fn = forward_norm(c);
  const std::uint64_t k738 = sample_count(1.0, 0.1, 0.05);
  const double secs = seconds_since(t0);
  o.require(std::abs(dense - exact) < 1e-12, "dense Born");
  o.require(within >= 190, std::to_string(within) + "/200 within epsilon");
  o.require(std::abs(fn.value - oracle_norm) < 1e-12 && std::abs(t_max - std::numbers::sqrt2) < 1e-12,
            "forward norm");
  o.require(k738 == 738, "K = " + std::to_string(k738));
  o.require(secs < 300, "runtime");
  o.detail << (o.pass ? "" : "; ") << within << "/200 runs within 0.02 of " << exact << " (K = " << samples
           << "), forward norm " << fn.value << " = oracle " << oracle_norm << ", K(1,0.1,0.05) = " << k738 << ", "
           << secs << " s";
}

void criterion7(Outcome &o) {
  std::size_t effects = 0;
  bool ok = true;
  std::ostringstream bad;
  for (unsigned d : {2u, 3u})
    for (unsigned n = 1; n <= 3; ++n) {
      const QuditSystem s(d, n);
      const PhaseGrid g(s, Domain::Restricted);
      std::vector<Matrix> ops(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) ops[i] = o_operator(s, g.point(i)).matrix();
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<unsigned> qs;
        for (unsigned j = 0; j < n; ++j)
          if (mask & (1u << j)) qs.push_back(j);
        const unsigned k = static_cast<unsigned>(qs.size());
        const std::size_t outcomes = checked_pow(d, k, 1u << 20);
        for (std::size_t oc = 0; oc < outcomes; ++oc) {
          const std::vector<int> digs = digits(oc, d, k);
          const MeasurementEffect e = MeasurementEffect::computational(s, qs, digs);
          const Matrix pi = e.dense(s).matrix();
          double dense_max = 0;
          for (const Matrix &op : ops) dense_max = std::max(dense_max, std::abs((pi * op).trace()));
          const double expect = d % 2 == 0 ? std::pow(2.0, n - k) : 1.0;
          const double fast = max_measurement_coeff(s, e);
          if (std::abs(dense_max - expect) > 1e-12 || std::abs(fast - expect) > 1e-12) {
            ok = false;
            bad << " d=" << d << " n=" << n << " k=" << k;
          }
          ++effects;
        }
      }
    }
  o.require(ok, "max |x_Pi| mismatch at" + bad.str());
  o.detail << (o.pass ? "" : "; ") << effects << " computational effects (d=2,3; n<=3): max |Tr(Pi O)| = 2^{n-k} for d=2, 1 for d=3";
}

void criterion8(Outcome &o) {
  Rng rng(1008);
  double min_p = 1.0;
  ChiSquare total;
  bool support = true;
  bool on_lattice = true;
  std::size_t runs = 0;
  for (unsigned d : {2u, 3u})
    for (unsigned n : {1u, 2u})
      for (int trial = 0; trial < 3; ++trial) {
        const QuditSystem s(d, n);
        const GateWord w = random_clifford_word(s, 10, rng);
        GaussianCircuit c = GaussianCircuit::identity(n);
        for (const CliffordStep &st : w) c = compose(c, logical_clifford_symplectic(s, st.kind, st.targets));
        const SymplecticAffineMap f = word_coordinate_action(s, w);
        const DensityState rho = random_state(s, rng, trial);
        const HomodyneSampler sampler(rho, c);
        // Exact distribution of the covariance-mapped lattice point.
        const QuasiDistribution &x = sampler.coefficients();
        double norm = 0;
        for (const cplx &v : x.values()) norm += std::abs(v) > kNormCutoff ? std::abs(v) : 0.0;
        std::map<std::vector<int>, double> expected, observed;
        for (std::size_t i = 0; i < x.size(); ++i)
          if (std::abs(x[i]) > kNormCutoff) expected[f.apply(x.grid().point(i).coords())] += std::abs(x[i]) / norm;
        const double step = std::sqrt(std::numbers::pi / (2.0 * d));
        Rng draw(5000 + runs);
        const std::size_t N = 10000;
        for (std::size_t i = 0; i < N; ++i) {
          const HomodyneSample smp = sampler.draw(draw);
          // Exact image of the sampled point: q-block of S (step u - disp).
          Eigen::VectorXd r(2 * n);
          for (unsigned j = 0; j < n; ++j) {
            r(j) = step * smp.sampled_point.l[j];
            r(n + j) = step * smp.sampled_point.m[j];
          }
          const Eigen::VectorXd img = c.S() * (r - c.displacement());
          std::vector<int> pt(2 * n);
          for (unsigned j = 0; j < 2 * n; ++j) {
            const double k = img(j) / step;
            if (std::abs(k - std::round(k)) > 1e-9) on_lattice = false;
            pt[j] = static_cast<int>(mod(std::lround(k), 2L * d));
          }
          for (unsigned j = 0; j < n; ++j)
            if (smp.x(j) != img(j)) on_lattice = false;
          observed[pt] += 1;
        }
        for (const auto &[pt, ob] : observed) support = support && expected.count(pt) == 1;
        const ChiSquare cs = chi_square(expected, observed, N);
        min_p = std::min(min_p, cs.pvalue());
        total.stat += cs.stat;
        total.dof += cs.dof;
        ++runs;
      }
  // One test over the whole suite: statistics and degrees of freedom add.
  const double p = total.pvalue();
  o.require(p > 0.01, "chi-square p = " + std::to_string(p));
  o.require(support, "sample outside the mapped support");
  o.require(on_lattice, "off-lattice coordinate");
  o.detail << (o.pass ? "" : "; ") << runs << " Clifford circuits x 10^4 samples, chi-square " << total.stat << " on "
           << total.dof << " dof, p = " << p << " (smallest single-circuit p " << min_p
           << "); all coordinates on the mapped lattice";
}

void criterion9(Outcome &o) {
  std::ostringstream vals;
  for (unsigned d : {2u, 4u, 6u}) {
    const double v = magic_negativity(maximally_mixed(QuditSystem(d, 1)));
    vals << " d=" << d << ": " << v << " (target " << 1.0 / d << ")";
    o.require(std::abs(v - 1.0 / d) < 1e-12, "I/d norm at d=" + std::to_string(d) + " is " + std::to_string(v) +
                                                  ", not " + std::to_string(1.0 / d));
  }
  const DensityState t = t_state(QuditSystem(2, 1));
  const QuditSystem q2(2, 2);
  const CircuitDescription single(QuditSystem(2, 1), t, {}, MeasurementEffect::computational(QuditSystem(2, 1), {0}, {0}));
  const CircuitDescription hidden(q2, tensor(t, maximally_mixed(QuditSystem(2, 1))), {},
                                  MeasurementEffect::computational(q2, {0}, {0}));
  const double a = forward_norm(single).state_norm, b = forward_norm(hidden).state_norm;
  o.require(b < a * 1.0, "hiding: " + std::to_string(b) + " >= " + std::to_string(a));
  o.detail << (o.pass ? "" : "; ") << "I/d norms" << vals.str() << "; ‖x_{T⊗I/2}‖₁ = " << b << " < ‖x_T‖₁ = " << a;
}

}  // namespace

int main() {
  const std::vector<std::function<void(Outcome &)>> criteria = {criterion1, criterion2, criterion3,
                                                                 criterion4, criterion5, criterion6,
                                                                 criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i](o);
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("criterion %zu: %s — %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
