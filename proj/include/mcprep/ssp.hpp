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
#include "mcprep/config.hpp"

namespace mcprep {

/**
 * One merge of the uncompute direction: CNOTs from the pivot onto the
 * other differing qubits turn x2 into x1 with the pivot flipped, then a
 * controlled Ry(-2 angle) on the pivot folds x2 into x1.
 */
struct MergeStep {
  OnConfig x1;  // survivor, pivot bit 0
  OnConfig x2;  // absorbed, pivot bit 1
  std::vector<unsigned> differing;
  unsigned pivot = 0;
  std::vector<unsigned> cnot_targets;
  std::vector<Control> controls;
  double angle = 0.0;  // merge angle in (-pi, pi]
};

struct MergeChoice {
  std::size_t first;   // index into the sorted support
  std::size_t second;
  unsigned pivot;
};

/**
 * Pair with the fewest differing qubits, then the fewest rotation
 * controls, then the lexicographically smallest. support must be sorted.
 */
MergeChoice select_merge_pair(const std::vector<OnConfig> &support);

/** Greedy minimal control set separating x1 from the rest of support. */
std::vector<Control> distinguishing_controls(
    const std::vector<OnConfig> &support, const OnConfig &x1,
    unsigned pivot);

/** atan2(c2, c1): the rotation that leaves sqrt(c1^2 + c2^2) on x1. */
double merge_angle(double c1, double c2);

struct SspPlan {
  unsigned n_qubits = 0;
  std::vector<MergeStep> steps;
  OnConfig survivor;
};

SspPlan plan_ssp(const StateSpec &spec);

/** U_SSP with constant angles: U_SSP |0...0> is the spec state. */
Circuit synthesize_ssp(const StateSpec &spec);

/** Same gate structure with rotation angles named prefix0, prefix1, ... */
Circuit ssp_ansatz(const std::vector<OnConfig> &configs,
                   const std::string &prefix = "t");

/** Builds U_SSP from a plan with the given forward Ry angles. */
Circuit ssp_circuit(const SspPlan &plan, const std::vector<Angle> &ry_angles);

}  // namespace mcprep
