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

#include <string>
#include <vector>

#include "mcprep/circuit.hpp"

namespace mcprep {

enum class GateSet {
  ZZNative,  // ZZMax, PhasedX, Rz
  CXNative,  // CNOT, Ry, Rz, X
};

std::string gateset_name(GateSet set);
GateSet gateset_from_name(const std::string &name);
bool in_gateset(const Gate &g, GateSet set);

/** Uncontrolled G2 body in CNOT/Ry/X form, exact including phase. */
std::vector<Gate> g2_template(unsigned a, unsigned b, const Angle &theta);
/** Uncontrolled G4 body: 14 CNOTs, exact including phase. */
std::vector<Gate> g4_template(
    unsigned a, unsigned b, unsigned c, unsigned d, const Angle &theta);

/**
 * Expands g into the target set without any cleanup. Symbolic angles are
 * carried through. The result equals g up to global phase.
 *
 * Controlled gates are expanded by controlling every template gate;
 * multi-controlled X uses a Gray-code phase polynomial (2^m - 2 CNOTs on m
 * qubits, no ancillas) and 0-state controls are X-conjugated.
 */
std::vector<Gate> decompose_gate(const Gate &g, GateSet target);

/** decompose_gate over a whole circuit; no peephole. */
Circuit expand(const Circuit &c, GateSet target);

/**
 * Cancels inverse pairs, merges same-axis rotations and drops identity
 * rotations until nothing changes. Looks past gates that commute.
 */
Circuit peephole(const Circuit &c);

/** Throws CircuitError when symbolic parameters remain. */
Circuit compile(const Circuit &c, GateSet target);

}  // namespace mcprep
