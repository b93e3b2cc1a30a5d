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

#include "inputs.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "qmagic/errors.hpp"
#include "qmagic/stabilizer.hpp"
#include "qmagic/states.hpp"

namespace qmagic::cli {

namespace {

template <class T>
T get_field(const json &j, const char *key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    throw ValidationError(std::string("field '") + key + "' has the wrong type");
  }
}

std::vector<unsigned> targets_from_json(const json &j) {
  const auto t = get_field<std::vector<long>>(j, "targets");
  std::vector<unsigned> out;
  for (long v : t) {
    if (v < 0) throw ValidationError("targets must be non-negative");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

// Short names accepted in circuit files besides the canonical generator names.
GateKind gate_kind_from_name(const QuditSystem &sys, const std::string &name) {
  static const std::map<std::string, GateKind> aliases = {{"R", GateKind::Fourier}, {"P", GateKind::Phase},
                                                          {"X", GateKind::Shift},   {"Z", GateKind::Clock}};
  static const std::map<std::string, GateKind> qubit_aliases = {
      {"H", GateKind::Fourier}, {"S", GateKind::Phase}, {"CNOT", GateKind::Sum}, {"CX", GateKind::Sum}};
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  if (auto it = qubit_aliases.find(name); it != qubit_aliases.end()) {
    if (sys.d() != 2) throw ValidationError("gate '" + name + "' is a qubit name; use the generator name for d > 2");
    return it->second;
  }
  return parse_gate_kind(name);
}

Gate gate_from_json(const QuditSystem &sys, const json &g) {
  if (!g.is_object()) throw ValidationError("each gate must be an object");
  const std::vector<unsigned> targets = targets_from_json(g);
  if (g.contains("unitary")) {
    const std::string name = g.value("name", std::string("UNITARY"));
    return Gate::unitary(sys, matrix_from_json(g.at("unitary")), targets, name);
  }
  const std::string name = get_field<std::string>(g, "gate");
  if (name == "T" || name == "t") {
    if (sys.d() != 2) throw ValidationError("the T gate is a qubit gate (d = 2)");
    return Gate::unitary(sys, t_gate_matrix(), targets, "T");
  }
  return Gate::generator(sys, gate_kind_from_name(sys, name), targets);
}

MeasurementEffect measurement_from_json(const QuditSystem &sys, const json &m) {
  if (m.is_null()) {
    std::vector<unsigned> all(sys.n());
    for (unsigned i = 0; i < sys.n(); ++i) all[i] = i;
    return MeasurementEffect::computational(sys, all, std::vector<int>(sys.n(), 0));
  }
  if (!m.is_object()) throw ValidationError("measurement must be an object");
  if (m.contains("operator")) return MeasurementEffect::explicit_operator(DenseOperator(sys, matrix_from_json(m.at("operator"))));
  const auto qudits = targets_from_json(json{{"targets", get_field<std::vector<long>>(m, "qudits")}});
  // A scalar outcome applies to every measured qudit.
  const std::vector<int> outcome = m.contains("outcome") && m.at("outcome").is_number_integer()
                                       ? std::vector<int>(qudits.size(), m.at("outcome").get<int>())
                                       : get_field<std::vector<int>>(m, "outcome");
  return MeasurementEffect::computational(sys, qudits, outcome);
}

}  // namespace

std::string read_text(const std::string &path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string &path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error &e) {
    throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
  }
}

cplx complex_from_json(const json &j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ValidationError("complex entries must be numbers or [re, im] pairs");
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

Matrix matrix_from_json(const json &j) {
  if (!j.is_array() || j.empty()) throw ValidationError("a matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ValidationError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_from_json(j[r][c]);
  }
  return m;
}

json matrix_to_json(const Matrix &m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

DensityState state_from_json(const QuditSystem &sys, const json &j) {
  if (j.is_null()) return zero_state(sys);
  if (j.is_string()) return named_state(sys, j.get<std::string>());
  if (!j.is_object() || j.size() != 1)
    throw ValidationError("input must be a state name or an object with exactly one of state, product, generators, "
                          "vector, matrix");
  const auto &[key, value] = *j.items().begin();
  if (key == "state") return named_state(sys, get_field<std::string>(j, "state"));
  if (key == "product") {
    const auto names = get_field<std::vector<std::string>>(j, "product");
    if (names.size() != sys.n()) throw ValidationError("product needs one state name per qudit");
    const QuditSystem one(sys.d(), 1);
    DensityState rho = named_state(one, names[0]);
    for (std::size_t i = 1; i < names.size(); ++i) rho = tensor(rho, named_state(one, names[i]));
    return rho;
  }
  if (key == "generators") {
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else {
      for (const std::string &line : get_field<std::vector<std::string>>(j, "generators")) text += line + "\n";
    }
    return stabilizer_state(parse_generator_lines(sys, text));
  }
  if (key == "vector") {
    if (!value.is_array()) throw ValidationError("vector must be an array");
    Vector psi(static_cast<Eigen::Index>(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i) psi(static_cast<Eigen::Index>(i)) = complex_from_json(value[i]);
    return DensityState::from_vector(sys, psi);
  }
  if (key == "matrix") return DensityState(sys, matrix_from_json(value));
  throw ValidationError("unknown input kind '" + key + "'");
}

QuditSystem system_from_json(const json &j, std::size_t dim_cap) {
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  const long d = get_field<long>(j, "d");
  const long n = j.contains("n") ? get_field<long>(j, "n") : 1;
  if (d < 2 || n < 1) throw ValidationError("need d >= 2 and n >= 1");
  return QuditSystem(static_cast<unsigned>(d), static_cast<unsigned>(n), dim_cap);
}

CircuitDescription circuit_from_json(const json &j, std::size_t dim_cap) {
  const QuditSystem sys = system_from_json(j, dim_cap);
  std::vector<Gate> gates;
  if (j.contains("gates")) {
    if (!j.at("gates").is_array()) throw ValidationError("gates must be an array");
    for (const json &g : j.at("gates")) gates.push_back(gate_from_json(sys, g));
  }
  return CircuitDescription(sys, state_from_json(sys, j.value("input", json())), std::move(gates),
                            measurement_from_json(sys, j.value("measurement", json())));
}

GkpSimSpec gkp_sim_from_json(const json &j, std::size_t dim_cap) {
  const QuditSystem sys = system_from_json(j, dim_cap);
  const unsigned n = sys.n();
  GaussianCircuit circuit = GaussianCircuit::identity(n);
  if (j.contains("S")) {
    const auto s = get_field<std::vector<double>>(j, "S");
    if (s.size() != 4u * n * n) throw ShapeError("S must hold (2n)^2 entries in row-major order");
    Eigen::MatrixXd m(2 * n, 2 * n);
    for (unsigned r = 0; r < 2 * n; ++r)
      for (unsigned c = 0; c < 2 * n; ++c) m(r, c) = s[r * 2 * n + c];
    Eigen::VectorXd disp = Eigen::VectorXd::Zero(2 * n);
    if (j.contains("displacement")) {
      const auto dv = get_field<std::vector<double>>(j, "displacement");
      if (dv.size() != 2 * n) throw ShapeError("displacement must have 2n entries");
      for (unsigned i = 0; i < 2 * n; ++i) disp(i) = dv[i];
    }
    circuit = GaussianCircuit(m, disp);
  } else if (j.contains("gates")) {
    if (!j.at("gates").is_array()) throw ValidationError("gates must be an array");
    for (const json &g : j.at("gates")) {
      if (g.is_string()) {
        if (n != 1) throw ValidationError("gate names without targets need n = 1");
        circuit = compose(circuit, logical_clifford_symplectic(sys, gate_kind_from_name(sys, g.get<std::string>()), {0}));
        continue;
      }
      const GateKind kind = gate_kind_from_name(sys, get_field<std::string>(g, "gate"));
      circuit = compose(circuit, logical_clifford_symplectic(sys, kind, targets_from_json(g)));
    }
  }
  const long samples = j.contains("samples") ? get_field<long>(j, "samples") : 1;
  if (samples < 0) throw ValidationError("samples must be non-negative");
  const std::uint64_t seed = j.contains("seed") ? get_field<std::uint64_t>(j, "seed") : 0;
  return {sys, state_from_json(sys, j.value("input", json())), circuit, static_cast<std::uint64_t>(samples), seed};
}

}  // namespace qmagic::cli
