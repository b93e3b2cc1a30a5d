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

#include "commands.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "inputs.hpp"
#include "qmagic/errors.hpp"
#include "qmagic/gkp_bridge.hpp"
#include "qmagic/measures.hpp"
#include "qmagic/operator_basis.hpp"
#include "qmagic/pauli.hpp"
#include "qmagic/qp_simulator.hpp"
#include "qmagic/gaussian_sim.hpp"
#include "qmagic/random.hpp"
#include "qmagic/stabilizer.hpp"
#include "qmagic/states.hpp"

namespace qmagic::cli {

namespace {

json header(const std::string &command) { return json{{"schema_version", kSchemaVersion}, {"command", command}}; }

void emit(std::ostream &out, const json &j) { out << j.dump() << '\n'; }

std::string format_real(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

json point_to_json(const PhasePoint &p) { return json{{"l", p.l}, {"m", p.m}}; }

struct Common {
  unsigned d = 2;
  unsigned n = 1;
  long long dim_cap = 0;  // 0: default or QMAGIC_DIM_CAP
  bool verbose = false;

  QuditSystem system() const {
    if (dim_cap < 0) throw ValidationError("--dim-cap must be positive");
    return dim_cap > 0 ? QuditSystem(d, n, static_cast<std::size_t>(dim_cap)) : QuditSystem(d, n);
  }
  std::size_t cap() const { return dim_cap > 0 ? static_cast<std::size_t>(dim_cap) : default_dimension_cap(); }
};

struct StateOptions {
  std::string state;
  std::vector<std::string> product;
  std::string generators;
  std::string vector;
  std::string matrix;

  void add(CLI::App *sub) {
    auto *s = sub->add_option("--state", state, "named state: zero, plus, mixed, T");
    auto *p = sub->add_option("--product", product, "per-qudit state names")->delimiter(',');
    auto *g = sub->add_option("--generators", generators, "file with generator lines a1,..|b1,..|phase");
    auto *v = sub->add_option("--vector", vector, "JSON file with a state vector");
    auto *m = sub->add_option("--matrix", matrix, "JSON file with a density matrix");
    const std::vector<CLI::Option *> all = {s, p, g, v, m};
    for (auto *a : all)
      for (auto *b : all)
        if (a != b) a->excludes(b);
  }

  DensityState load(const QuditSystem &sys) const {
    if (!product.empty()) return state_from_json(sys, json{{"product", product}});
    if (!generators.empty()) return state_from_json(sys, json{{"generators", read_text(generators)}});
    if (!vector.empty()) return state_from_json(sys, json{{"vector", read_json(vector)}});
    if (!matrix.empty()) return state_from_json(sys, json{{"matrix", read_json(matrix)}});
    return named_state(sys, state.empty() ? "zero" : state);
  }
};

void add_common(CLI::App *sub, Common &c, bool with_n = true) {
  sub->add_option("--d", c.d, "local dimension")->required();
  if (with_n) sub->add_option("--n", c.n, "number of qudits");
  sub->add_flag("-v,--verbose", c.verbose, "human-readable summary on stderr");
}

// --- basis ---------------------------------------------------------------

struct BasisArgs {
  Common c;
  std::vector<int> l, m;
  std::string kind = "o";
};

void cmd_basis(const BasisArgs &a, std::ostream &out, std::ostream &) {
  const QuditSystem sys = a.c.system();
  std::vector<int> l = a.l.empty() ? std::vector<int>(sys.n(), 0) : a.l;
  std::vector<int> m = a.m.empty() ? std::vector<int>(sys.n(), 0) : a.m;
  if (l.size() != sys.n() || m.size() != sys.n()) throw ValidationError("--l and --m need one entry per qudit");
  json j = header("basis");
  j["d"] = sys.d();
  j["n"] = sys.n();
  j["kind"] = a.kind;
  Matrix op;
  if (a.kind == "o") {
    const PhasePoint p{l, m, 0};
    op = o_operator(sys, p).matrix();
    j["l"] = l;
    j["m"] = m;
    j["trace"] = complex_to_json(o_trace(sys, p));
  } else if (a.kind == "weyl") {
    const PauliLabel lab = PauliLabel::canonical(sys, {l.begin(), l.end()}, {m.begin(), m.end()});
    op = heisenberg_weyl(sys, lab).matrix();
    j["a"] = lab.a;
    j["b"] = lab.b;
    j["trace"] = complex_to_json(op.trace());
  } else if (a.kind == "phase-point") {
    op = phase_point_operator(sys, l, m).matrix();
    j["a1"] = l;
    j["a2"] = m;
    j["trace"] = complex_to_json(op.trace());
  } else {
    throw ValidationError("--kind must be o, weyl or phase-point");
  }
  const DenseOperator dop(sys, op);
  j["hermitian"] = dop.is_hermitian();
  j["unitary"] = dop.is_unitary();
  j["matrix"] = matrix_to_json(op);
  emit(out, j);
}

// --- measure -------------------------------------------------------------

struct MeasureArgs {
  Common c;
  StateOptions s;
  std::vector<double> alpha = {2.0};
  bool wigner = false;
  bool coefficients = false;
  std::string log_base = "e";
};

void cmd_measure(const MeasureArgs &a, std::ostream &out, std::ostream &err) {
  const QuditSystem sys = a.c.system();
  if (a.log_base != "e" && a.log_base != "2") throw ValidationError("--log-base must be e or 2");
  if (a.wigner && sys.even())
    throw EvenDimensionError("the discrete Wigner function (and its negativity) is defined for odd d only; got d = " +
                             std::to_string(sys.d()));
  const DensityState rho = a.s.load(sys);
  const double scale = a.log_base == "2" ? 1.0 / std::log(2.0) : 1.0;
  json j = header("measure");
  j["d"] = sys.d();
  j["n"] = sys.n();
  j["log_base"] = a.log_base;
  j["purity"] = rho.purity();
  j["negativity"] = magic_negativity(rho);
  json renyi = json::object();
  for (double al : a.alpha) renyi[format_real(al)] = stabilizer_renyi(rho, al) * scale;
  j["renyi"] = renyi;
  const Hyperpolyhedral h = is_hyperpolyhedral(rho);
  j["hyperpolyhedral"] = {{"is_hyperpolyhedral", h.is_hyperpolyhedral}, {"value", h.value}};
  if (a.wigner) j["wigner_negativity"] = wigner_negativity(rho);
  if (a.coefficients) {
    const QuasiDistribution x = x_distribution(rho);
    json xs = json::array();
    for (std::size_t i = 0; i < x.size(); ++i) {
      json e = point_to_json(x.grid().point(i));
      e["value"] = x[i].real();
      xs.push_back(std::move(e));
    }
    j["x"] = std::move(xs);
  }
  if (a.c.verbose) {
    err << std::left << std::setw(20) << "negativity" << j["negativity"].get<double>() << '\n';
    for (const auto &[k, v] : renyi.items()) err << std::setw(20) << ("M_" + k) << v.get<double>() << '\n';
    err << std::setw(20) << "hyperpolyhedral" << (h.is_hyperpolyhedral ? "yes" : "no") << '\n';
  }
  emit(out, j);
}

// --- wigner / char -------------------------------------------------------

struct DistArgs {
  Common c;
  StateOptions s;
  bool nonzero = false;
};

void cmd_wigner(const DistArgs &a, std::ostream &out, std::ostream &) {
  const QuditSystem sys = a.c.system();
  if (sys.even())
    throw EvenDimensionError("the discrete Wigner function is defined for odd d only; got d = " +
                             std::to_string(sys.d()));
  const QuasiDistribution w = discrete_wigner(a.s.load(sys));
  json j = header("wigner");
  j["d"] = sys.d();
  j["n"] = sys.n();
  json vals = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (a.nonzero && std::abs(w[i]) < kNormCutoff) continue;
    const PhasePoint p = w.grid().point(i);
    vals.push_back({{"a1", p.l}, {"a2", p.m}, {"value", w[i].real()}});
  }
  j["values"] = std::move(vals);
  j["l1"] = lp_norm(w, 1.0);
  emit(out, j);
}

void cmd_char(const DistArgs &a, std::ostream &out, std::ostream &) {
  const QuditSystem sys = a.c.system();
  const QuasiDistribution chi = characteristic_fn(a.s.load(sys));
  json j = header("char");
  j["d"] = sys.d();
  j["n"] = sys.n();
  json vals = json::array();
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (a.nonzero && std::abs(chi[i]) < kNormCutoff) continue;
    const PhasePoint p = chi.grid().point(i);
    vals.push_back({{"a", p.l}, {"b", p.m}, {"value", complex_to_json(chi[i])}});
  }
  j["values"] = std::move(vals);
  j["l1"] = lp_norm(chi, 1.0);
  emit(out, j);
}

// --- gkp-check -----------------------------------------------------------

struct GkpCheckArgs {
  std::vector<unsigned> d, n;
  std::vector<double> p;
  std::string theorem = "both";
  unsigned states = 3;
  std::uint64_t seed = 0;
  bool csv = false;
  bool verbose = false;
  long long dim_cap = 0;
  StateOptions s;
  bool has_state() const {
    return !s.state.empty() || !s.product.empty() || !s.generators.empty() || !s.vector.empty() || !s.matrix.empty();
  }
};

void cmd_gkp_check(const GkpCheckArgs &a, std::ostream &out, std::ostream &err) {
  if (a.theorem != "1" && a.theorem != "2" && a.theorem != "both") throw ValidationError("--theorem must be 1, 2 or both");
  const std::vector<unsigned> ds = a.d.empty() ? std::vector<unsigned>{2, 3, 4, 5} : a.d;
  const std::vector<double> ps = a.p.empty() ? std::vector<double>{0.5, 1.0, 2.0, 3.0} : a.p;
  for (double p : ps)
    if (!(p > 0.0) || !std::isfinite(p)) throw ValidationError("grid p values must be positive");
  for (unsigned d : ds)
    if (d < 2) throw ValidationError("grid d values must be >= 2");
  if (a.states == 0 && !a.has_state()) throw ValidationError("--states must be positive");
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned d : ds) {
    if (a.n.empty()) {
      for (unsigned n : {1u, 2u})
        if (checked_pow(d, n, 1u << 30) <= 25) cells.emplace_back(d, n);
    } else {
      for (unsigned n : a.n) {
        if (n < 1) throw ValidationError("grid n values must be >= 1");
        cells.emplace_back(d, n);
      }
    }
  }
  Common cap;
  cap.dim_cap = a.dim_cap;
  json results = json::array();
  double worst = 0.0;
  Rng rng(a.seed);
  for (const auto &[d, n] : cells) {
    cap.d = d;
    cap.n = n;
    const QuditSystem sys = cap.system();
    std::vector<DensityState> states;
    if (a.has_state()) {
      states.push_back(a.s.load(sys));
    } else {
      for (unsigned i = 0; i < a.states; ++i) states.push_back(haar_pure_state(sys, rng));
    }
    for (std::size_t si = 0; si < states.size(); ++si)
      for (double p : ps)
        for (int th : {1, 2}) {
          if ((th == 1 && a.theorem == "2") || (th == 2 && a.theorem == "1")) continue;
          const TheoremReport r = th == 1 ? verify_theorem1(states[si], p) : verify_theorem2(states[si], p);
          json e = {{"d", d}, {"n", n}, {"p", p}, {"theorem", th}, {"state", si},
                    {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", r.residual}};
          if (r.wigner_lhs) e["wigner_lhs"] = *r.wigner_lhs;
          if (r.renyi_direct) e["renyi_direct"] = *r.renyi_direct;
          if (r.renyi_reconstructed) e["renyi_reconstructed"] = *r.renyi_reconstructed;
          worst = std::max(worst, r.residual);
          results.push_back(std::move(e));
        }
  }
  if (a.csv) {
    out << "d,n,p,theorem,state,lhs,rhs,residual\n";
    out << std::setprecision(17);
    for (const json &e : results)
      out << e["d"].get<unsigned>() << ',' << e["n"].get<unsigned>() << ',' << e["p"].get<double>() << ','
          << e["theorem"].get<int>() << ',' << e["state"].get<std::size_t>() << ',' << e["lhs"].get<double>() << ','
          << e["rhs"].get<double>() << ',' << e["residual"].get<double>() << '\n';
  } else {
    json j = header("gkp-check");
    j["seed"] = a.seed;
    j["results"] = std::move(results);
    j["max_residual"] = worst;
    j["pass"] = worst < 1e-9;
    emit(out, j);
  }
  if (a.verbose) err << "gkp-check: " << cells.size() << " grid cells, max residual " << worst << '\n';
}

// --- simulate ------------------------------------------------------------

struct SimulateArgs {
  std::string circuit;
  std::string frame = "o";
  double epsilon = 0.05;
  double p_fail = 0.05;
  std::uint64_t seed = 0;
  unsigned streams = kDefaultStreams;
  bool exact = false;
  long long dim_cap = 0;
};

void cmd_simulate(const SimulateArgs &a, std::ostream &out, std::ostream &) {
  if (a.frame != "o" && a.frame != "chi") throw ValidationError("--frame must be o or chi");
  Common cap;
  cap.dim_cap = a.dim_cap;
  const CircuitDescription c = circuit_from_json(read_json(a.circuit), cap.cap());
  const EstimateReport r = a.frame == "o" ? estimate_born(c, a.epsilon, a.p_fail, a.seed, a.streams)
                                          : estimate_born_char(c, a.epsilon, a.p_fail, a.seed, a.streams);
  json j = header("simulate");
  j["d"] = c.system().d();
  j["n"] = c.system().n();
  j["frame"] = a.frame;
  j["estimate"] = r.estimate;
  j["epsilon"] = r.epsilon;
  j["failure_prob"] = r.failure_prob;
  j["samples_used"] = r.samples_used;
  j["forward_norm"] = r.forward_norm;
  j["forward_norm_exact"] = r.forward_norm_exact;
  j["seed"] = r.seed;
  j["streams"] = r.streams;
  j["sample_stddev"] = r.sample_stddev;
  if (a.exact) {
    const Matrix u = c.unitary().matrix();
    j["exact"] = (c.measurement().dense(c.system()).matrix() * u * c.input().matrix() * u.adjoint()).trace().real();
  }
  emit(out, j);
}

// --- gkp-sim -------------------------------------------------------------

struct GkpSimArgs {
  std::string circuit;
  long long samples = -1;
  long long seed = -1;
  bool histogram = false;
  long long dim_cap = 0;
};

void cmd_gkp_sim(const GkpSimArgs &a, std::ostream &out, std::ostream &) {
  Common cap;
  cap.dim_cap = a.dim_cap;
  GkpSimSpec spec = gkp_sim_from_json(read_json(a.circuit), cap.cap());
  if (a.samples >= 0) spec.samples = static_cast<std::uint64_t>(a.samples);
  if (a.seed >= 0) spec.seed = static_cast<std::uint64_t>(a.seed);
  if (a.histogram) {
    const PseudoProbabilityReport rep = pseudo_probability_report(spec.input, spec.circuit, spec.samples, spec.seed);
    json j = header("gkp-sim");
    j["samples"] = rep.samples;
    j["seed"] = spec.seed;
    j["normalizable"] = rep.normalizable;
    j["caveat"] = rep.caveat;
    json bins = json::array();
    for (const HistogramBin &b : rep.bins) {
      json e = point_to_json(b.point);
      e["x"] = std::vector<double>(b.x.data(), b.x.data() + b.x.size());
      e["count"] = b.count;
      e["signed_weight"] = b.signed_weight;
      bins.push_back(std::move(e));
    }
    j["bins"] = std::move(bins);
    emit(out, j);
    return;
  }
  // One sampler, one stream: sample i is the i-th draw for this seed.
  const HomodyneSampler sampler(spec.input, spec.circuit);
  Rng rng(spec.seed);
  for (std::uint64_t i = 0; i < spec.samples; ++i) {
    const HomodyneSample s = sampler.draw(rng);
    json j = {{"schema_version", kSchemaVersion},
              {"x", std::vector<double>(s.x.data(), s.x.data() + s.x.size())},
              {"branch", s.branch},
              {"point", point_to_json(s.sampled_point)},
              {"sign", s.sign},
              {"weight", s.weight}};
    emit(out, j);
  }
}

// --- enumerate-stabilizers -----------------------------------------------

struct EnumerateArgs {
  unsigned d = 2;
};

void cmd_enumerate(const EnumerateArgs &a, std::ostream &out, std::ostream &) {
  const auto groups = enumerate_single_qudit_stabilizer_groups(a.d);
  json j = header("enumerate-stabilizers");
  j["d"] = a.d;
  j["count"] = groups.size();
  json states = json::array();
  for (const StabilizerGroup &g : groups) {
    json gens = json::array();
    for (const auto &s : g.generators()) gens.push_back(s);
    const DensityState rho = stabilizer_state(g);
    states.push_back({{"generators", gens}, {"phase_vector", g.phase_vector()}, {"negativity", magic_negativity(rho)}});
  }
  j["states"] = std::move(states);
  emit(out, j);
}

std::string error_type(const std::exception &e) {
  if (dynamic_cast<const DimensionCapError *>(&e)) return "DimensionCapError";
  if (dynamic_cast<const ShapeError *>(&e)) return "ShapeError";
  if (dynamic_cast<const EvenDimensionError *>(&e)) return "EvenDimensionError";
  if (dynamic_cast<const NonCommutingGenerators *>(&e)) return "NonCommutingGenerators";
  if (dynamic_cast<const DependentGenerators *>(&e)) return "DependentGenerators";
  if (dynamic_cast<const ValidationError *>(&e)) return "ValidationError";
  if (dynamic_cast<const NumericalError *>(&e)) return "NumericalError";
  return "InternalError";
}

int report_error(std::ostream &err, const std::string &type, const std::string &message, int code) {
  err << json{{"schema_version", kSchemaVersion}, {"error", {{"type", type}, {"message", message}, {"exit_code", code}}}}
             .dump()
      << '\n';
  return code;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"qmagic: magic measures, GKP lattice identities and quasiprobability simulation for qudits", "qmagic"};
  app.require_subcommand(1);
  long long dim_cap = 0;
  app.add_option("--dim-cap", dim_cap, "maximum Hilbert-space dimension d^n (default 4096 or QMAGIC_DIM_CAP)");
  app.fallthrough();

  std::function<void()> action;

  BasisArgs basis;
  auto *sb = app.add_subcommand("basis", "print an operator of the O_{l,m}, Heisenberg-Weyl or phase-point basis");
  add_common(sb, basis.c);
  sb->add_option("--l", basis.l, "first coordinate per qudit (a or a1 for the other kinds)")->delimiter(',');
  sb->add_option("--m", basis.m, "second coordinate per qudit (b or a2 for the other kinds)")->delimiter(',');
  sb->add_option("--kind", basis.kind, "o, weyl or phase-point");
  sb->callback([&] { action = [&] { cmd_basis(basis, out, err); }; });

  MeasureArgs measure;
  auto *sm = app.add_subcommand("measure", "magic measures of a state");
  add_common(sm, measure.c);
  measure.s.add(sm);
  sm->add_option("--alpha", measure.alpha, "stabilizer Renyi orders")->delimiter(',');
  sm->add_flag("--wigner", measure.wigner, "also report the Wigner negativity (odd d)");
  sm->add_flag("--coefficients", measure.coefficients, "include the x distribution");
  sm->add_option("--log-base", measure.log_base, "e (nats) or 2 (bits)");
  sm->callback([&] { action = [&] { cmd_measure(measure, out, err); }; });

  DistArgs wig;
  auto *sw = app.add_subcommand("wigner", "discrete Wigner function (odd d)");
  add_common(sw, wig.c);
  wig.s.add(sw);
  sw->add_flag("--nonzero", wig.nonzero, "omit zero entries");
  sw->callback([&] { action = [&] { cmd_wigner(wig, out, err); }; });

  DistArgs chr;
  auto *sc = app.add_subcommand("char", "discrete characteristic function");
  add_common(sc, chr.c);
  chr.s.add(sc);
  sc->add_flag("--nonzero", chr.nonzero, "omit zero entries");
  sc->callback([&] { action = [&] { cmd_char(chr, out, err); }; });

  GkpCheckArgs gkc;
  auto *sg = app.add_subcommand("gkp-check", "verify the GKP cell-norm identities over a (d, n, p) grid");
  sg->add_option("--d", gkc.d, "local dimensions")->delimiter(',');
  sg->add_option("--n", gkc.n, "qudit counts")->delimiter(',');
  sg->add_option("--p", gkc.p, "norm orders")->delimiter(',');
  sg->add_option("--theorem", gkc.theorem, "1 (Wigner cells), 2 (characteristic cells) or both");
  sg->add_option("--states", gkc.states, "random pure states per grid cell");
  sg->add_option("--seed", gkc.seed, "seed for the random states");
  sg->add_flag("--csv", gkc.csv, "CSV instead of JSON");
  sg->add_flag("-v,--verbose", gkc.verbose, "summary on stderr");
  gkc.s.add(sg);
  sg->callback([&] { action = [&] { cmd_gkp_check(gkc, out, err); }; });

  SimulateArgs sim;
  auto *ss = app.add_subcommand("simulate", "estimate a Born probability by quasiprobability sampling");
  ss->add_option("circuit", sim.circuit, "circuit JSON file (- for stdin)")->required();
  ss->add_option("--frame", sim.frame, "o (operator basis) or chi (Heisenberg-Weyl)");
  ss->add_option("--epsilon", sim.epsilon, "additive precision");
  ss->add_option("--p-fail", sim.p_fail, "failure probability");
  ss->add_option("--seed", sim.seed, "random seed");
  ss->add_option("--streams", sim.streams, "independent sampling streams");
  ss->add_flag("--exact", sim.exact, "also report the exact probability (dense)");
  ss->callback([&] { action = [&] { cmd_simulate(sim, out, err); }; });

  GkpSimArgs gsim;
  auto *sgs = app.add_subcommand("gkp-sim", "sample homodyne outcomes of a Gaussian circuit on a GKP state");
  sgs->add_option("circuit", gsim.circuit, "circuit JSON file (- for stdin)")->required();
  sgs->add_option("--samples", gsim.samples, "number of samples (overrides the file)");
  sgs->add_option("--seed", gsim.seed, "random seed (overrides the file)");
  sgs->add_flag("--histogram", gsim.histogram, "aggregate into a signed lattice histogram");
  sgs->callback([&] { action = [&] { cmd_gkp_sim(gsim, out, err); }; });

  EnumerateArgs en;
  auto *se = app.add_subcommand("enumerate-stabilizers", "list all single-qudit stabilizer states");
  se->add_option("--d", en.d, "prime d or 4")->required();
  se->callback([&] { action = [&] { cmd_enumerate(en, out, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    return report_error(err, "UsageError", e.what(), kExitValidation);
  }

  for (Common *c : {&basis.c, &measure.c, &wig.c, &chr.c}) c->dim_cap = dim_cap;
  gkc.dim_cap = sim.dim_cap = gsim.dim_cap = dim_cap;
  try {
    if (dim_cap < 0) throw ValidationError("--dim-cap must be positive");
    action();
  } catch (const ValidationError &e) {
    return report_error(err, error_type(e), e.what(), kExitValidation);
  } catch (const NumericalError &e) {
    return report_error(err, error_type(e), e.what(), kExitNumerical);
  } catch (const std::exception &e) {
    return report_error(err, error_type(e), e.what(), kExitInternal);
  }
  return kExitOk;
}

}  // namespace qmagic::cli
