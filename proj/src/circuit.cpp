// Copyright 2026 The mcprep Authors
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

#include "mcprep/circuit.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace mcprep {

namespace {

struct KindInfo {
  GateKind kind;
  const char *name;
  unsigned arity;
  unsigned n_angles;
};

constexpr std::array<KindInfo, 9> kKinds{{
    {GateKind::X, "X", 1, 0},
    {GateKind::Ry, "Ry", 1, 1},
    {GateKind::Rz, "Rz", 1, 1},
    {GateKind::PhasedX, "PhasedX", 1, 2},
    {GateKind::CNOT, "CNOT", 2, 0},
    {GateKind::ZZMax, "ZZMax", 2, 0},
    {GateKind::SWAP, "SWAP", 2, 0},
    {GateKind::G2, "G2", 2, 1},
    {GateKind::G4, "G4", 4, 1},
}};

const KindInfo &info(GateKind kind) {
  for (const KindInfo &k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw CircuitError("unknown gate kind");
}

}  // namespace

std::string kind_name(GateKind kind) { return info(kind).name; }

GateKind kind_from_name(const std::string &name) {
  for (const KindInfo &k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw CircuitError("unknown gate kind '" + name + "'");
}

unsigned kind_arity(GateKind kind) { return info(kind).arity; }
unsigned kind_n_angles(GateKind kind) { return info(kind).n_angles; }

Angle Angle::symbol(std::string name, double scale) {
  if (name.empty()) throw CircuitError("empty parameter name");
  Angle a;
  a.symbol_ = std::move(name);
  a.scale_ = scale;
  return a;
}

double Angle::value() const {
  if (is_symbolic()) {
    throw CircuitError("parameter '" + symbol_ + "' is unbound");
  }
  return value_;
}

Angle Angle::operator-() const { return scaled(-1.0); }

Angle Angle::scaled(double factor) const {
  Angle a = *this;
  if (is_symbolic()) {
    a.scale_ *= factor;
  } else {
    a.value_ *= factor;
  }
  return a;
}

Angle Angle::bound(const std::map<std::string, double> &assignment) const {
  if (!is_symbolic()) return *this;
  auto it = assignment.find(symbol_);
  if (it == assignment.end()) {
    throw CircuitError("no value for parameter '" + symbol_ + "'");
  }
  return Angle(scale_ * it->second);
}

Gate Gate::x(unsigned q) { return {GateKind::X, {q}, {}, {}}; }
Gate Gate::ry(unsigned q, Angle a) { return {GateKind::Ry, {q}, {}, {a}}; }
Gate Gate::rz(unsigned q, Angle a) { return {GateKind::Rz, {q}, {}, {a}}; }
Gate Gate::phased_x(unsigned q, Angle alpha, Angle beta) {
  return {GateKind::PhasedX, {q}, {}, {alpha, beta}};
}
Gate Gate::cnot(unsigned control, unsigned target) {
  return {GateKind::CNOT, {control, target}, {}, {}};
}
Gate Gate::zzmax(unsigned a, unsigned b) {
  return {GateKind::ZZMax, {a, b}, {}, {}};
}
Gate Gate::swap(unsigned a, unsigned b) {
  return {GateKind::SWAP, {a, b}, {}, {}};
}
Gate Gate::g2(unsigned a, unsigned b, Angle theta) {
  return {GateKind::G2, {a, b}, {}, {theta}};
}
Gate Gate::g4(unsigned a, unsigned b, unsigned c, unsigned d, Angle theta) {
  return {GateKind::G4, {a, b, c, d}, {}, {theta}};
}

std::vector<unsigned> Gate::qubits() const {
  std::vector<unsigned> out;
  out.reserve(controls.size() + targets.size());
  for (const Control &c : controls) out.push_back(c.qubit);
  out.insert(out.end(), targets.begin(), targets.end());
  return out;
}

unsigned Gate::arity() const {
  return static_cast<unsigned>(controls.size() + targets.size());
}

bool Gate::has_symbols() const {
  return std::any_of(angles.begin(), angles.end(),
                     [](const Angle &a) { return a.is_symbolic(); });
}

Gate Gate::inverse() const {
  Gate g = *this;
  switch (kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::SWAP:
      break;
    case GateKind::ZZMax:
      // No single-gate inverse in this kind set; see Circuit::inverse.
      throw CircuitError("ZZMax has no single-gate inverse");
    default:
      g.angles[0] = -angles[0];
  }
  return g;
}

void Gate::check(unsigned n_qubits) const {
  if (targets.size() != kind_arity(kind)) {
    throw CircuitError(kind_name(kind) + " needs " +
                       std::to_string(kind_arity(kind)) + " targets");
  }
  if (angles.size() != kind_n_angles(kind)) {
    throw CircuitError(kind_name(kind) + " needs " +
                       std::to_string(kind_n_angles(kind)) + " angles");
  }
  std::vector<unsigned> qs = qubits();
  for (unsigned q : qs) {
    if (q >= n_qubits) {
      throw CircuitError(label() + " uses qubit " + std::to_string(q) +
                         " outside a " + std::to_string(n_qubits) +
                         "-qubit register");
    }
  }
  std::sort(qs.begin(), qs.end());
  if (std::adjacent_find(qs.begin(), qs.end()) != qs.end()) {
    throw CircuitError(label() + " repeats a qubit");
  }
}

std::string Gate::label() const {
  std::ostringstream os;
  if (!controls.empty()) os << 'C' << controls.size() << '-';
  os << kind_name(kind) << '(';
  for (std::size_t i = 0; i < targets.size(); ++i) {
    os << (i ? "," : "") << targets[i];
  }
  os << ')';
  return os.str();
}

Gate control_wrap(const Gate &g, const std::vector<Control> &controls) {
  Gate out = g;
  for (const Control &c : controls) {
    const std::vector<unsigned> used = out.qubits();
    if (std::find(used.begin(), used.end(), c.qubit) != used.end()) {
      throw CircuitError("control on qubit " + std::to_string(c.qubit) +
                         " overlaps " + g.label());
    }
    out.controls.push_back(c);
  }
  return out;
}

Circuit::Circuit(unsigned n_qubits) : n_(n_qubits) {
  if (n_qubits == 0) throw CircuitError("circuit needs at least one qubit");
}

Circuit &Circuit::add(const Gate &g) {
  g.check(n_);
  gates_.push_back(g);
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  if (other.n_ != n_) throw CircuitError("appending circuits of unequal width");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit out(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    if (it->kind == GateKind::ZZMax && it->controls.empty()) {
      // ZZMax^-1 = ZZMax^3, and ZZMax^2 is Z x Z up to phase.
      out.gates_.push_back(*it);
      for (unsigned q : it->targets) out.gates_.push_back(Gate::rz(q, kPi));
      continue;
    }
    out.gates_.push_back(it->inverse());
  }
  return out;
}

std::set<std::string> Circuit::parameters() const {
  std::set<std::string> out;
  for (const Gate &g : gates_) {
    for (const Angle &a : g.angles) {
      if (a.is_symbolic()) out.insert(a.name());
    }
  }
  return out;
}

Circuit bind_parameters(
    const Circuit &c, const std::map<std::string, double> &assignment) {
  const std::set<std::string> params = c.parameters();
  for (const auto &[name, value] : assignment) {
    if (!params.count(name)) {
      throw CircuitError("circuit has no parameter '" + name + "'");
    }
  }
  Circuit out(c.n_qubits());
  for (Gate g : c.gates()) {
    for (Angle &a : g.angles) a = a.bound(assignment);
    out.add(g);
  }
  return out;
}

unsigned ResourceCount::count(const std::string &kind) const {
  auto it = tallies.find(kind);
  return it == tallies.end() ? 0 : it->second;
}

ResourceCount count_resources(const Circuit &c) {
  ResourceCount r;
  std::vector<unsigned> level(c.n_qubits(), 0);
  for (const Gate &g : c.gates()) {
    std::string key = kind_name(g.kind);
    if (!g.controls.empty()) {
      key = "C" + std::to_string(g.controls.size()) + "-" + key;
    }
    ++r.tallies[key];
    ++r.total;
    const unsigned arity = g.arity();
    if (arity == 2) ++r.two_qubit_total;
    if (arity > 2) ++r.multi_qubit_total;
    unsigned layer = 0;
    for (unsigned q : g.qubits()) layer = std::max(layer, level[q]);
    ++layer;
    for (unsigned q : g.qubits()) level[q] = layer;
    r.depth = std::max(r.depth, layer);
  }
  return r;
}

}  // namespace mcprep
