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

#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcprep {

inline constexpr double kPi = 3.14159265358979323846;

class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateKind { X, Ry, Rz, PhasedX, CNOT, ZZMax, SWAP, G2, G4 };

std::string kind_name(GateKind kind);
GateKind kind_from_name(const std::string &name);
unsigned kind_arity(GateKind kind);
unsigned kind_n_angles(GateKind kind);

/**
 * Rotation angle in radians: either a constant or scale * symbol.
 */
class Angle {
 public:
  Angle() = default;
  Angle(double value) : value_(value) {}  // NOLINT(runtime/explicit)
  static Angle symbol(std::string name, double scale = 1.0);

  bool is_symbolic() const { return !symbol_.empty(); }
  const std::string &name() const { return symbol_; }
  double scale() const { return scale_; }
  double value() const;

  Angle operator-() const;
  Angle scaled(double factor) const;
  Angle bound(const std::map<std::string, double> &assignment) const;

 private:
  double value_ = 0.0;
  std::string symbol_;
  double scale_ = 1.0;
};

struct Control {
  unsigned qubit;
  bool state;
  bool operator==(const Control &) const = default;
};

/**
 * A gate with its kind-specific targets plus any external controls.
 *
 * CNOT targets are {control, target}. G2 on (a, b) rotates |01> into
 * |10>: |01> -> cos|01> - sin|10>, |10> -> sin|01> + cos|10>. G4 on
 * (a, b, c, d) does the same between the patterns 0011 and 1100.
 */
struct Gate {
  GateKind kind;
  std::vector<unsigned> targets;
  std::vector<Control> controls;
  std::vector<Angle> angles;

  static Gate x(unsigned q);
  static Gate ry(unsigned q, Angle a);
  static Gate rz(unsigned q, Angle a);
  static Gate phased_x(unsigned q, Angle alpha, Angle beta);
  static Gate cnot(unsigned control, unsigned target);
  static Gate zzmax(unsigned a, unsigned b);
  static Gate swap(unsigned a, unsigned b);
  static Gate g2(unsigned a, unsigned b, Angle theta);
  static Gate g4(unsigned a, unsigned b, unsigned c, unsigned d, Angle theta);

  /** All qubits touched, controls first. */
  std::vector<unsigned> qubits() const;
  unsigned arity() const;
  bool has_symbols() const;
  Gate inverse() const;
  /** Throws CircuitError if indices clash or exceed n_qubits. */
  void check(unsigned n_qubits) const;
  std::string label() const;
};

Gate control_wrap(const Gate &g, const std::vector<Control> &controls);

class Circuit {
 public:
  explicit Circuit(unsigned n_qubits = 1);

  unsigned n_qubits() const { return n_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit &add(const Gate &g);
  Circuit &append(const Circuit &other);
  Circuit inverse() const;
  std::set<std::string> parameters() const;

 private:
  unsigned n_;
  std::vector<Gate> gates_;
};

Circuit bind_parameters(
    const Circuit &c, const std::map<std::string, double> &assignment);

struct ResourceCount {
  std::map<std::string, unsigned> tallies;
  unsigned total = 0;
  unsigned two_qubit_total = 0;
  unsigned multi_qubit_total = 0;  // three or more qubits
  unsigned depth = 0;

  unsigned count(const std::string &kind) const;
};

/**
 * Tallies keyed by kind name; gates with k external controls are keyed
 * "C<k>-<kind>". two_qubit_total counts gates touching exactly two qubits.
 */
ResourceCount count_resources(const Circuit &c);

}  // namespace mcprep
