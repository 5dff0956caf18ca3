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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcprep/circuit.hpp"
#include "mcprep/config.hpp"

namespace mcprep {

class SynthesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SwapStep {
  unsigned first;   // occupied in the running reference
  unsigned second;  // empty in the running reference
  std::vector<Control> controls;
};

/** Controlled-SWAP ladder around a central G2 for excitations above 2. */
struct HighOrderGadget {
  std::vector<SwapStep> swaps;
  /** Central pair, ordered (occupied, empty) in the fully swapped reference. */
  unsigned central_first = 0;
  unsigned central_second = 0;
  std::vector<Control> central_controls;
  bool k_matches_ref = false;
  /** Central controls came from the minority rule rather than Algorithm 1. */
  bool minority_central = false;
  /**
   * The Algorithm 1 style central controls were missing or would have
   * rotated an earlier configuration. The minority controls are used if
   * they isolate the rotation, else every qubit outside the central pair
   * controls on its value in the swapped reference.
   */
  bool safety_fallback = false;
};

struct RotationEntry {
  /** Partner configuration x_e. */
  OnConfig partner;
  /** Differing qubits, ascending. */
  std::vector<unsigned> targets;
  unsigned order = 0;  // excitation rank, targets.size() / 2
  std::vector<Control> controls;
  std::optional<HighOrderGadget> gadget;
};

struct RotationPlan {
  OnConfig reference;
  std::vector<RotationEntry> entries;

  std::size_t external_control_count() const;
};

/**
 * Sequence of Givens rotations for an ordered list of configurations; the
 * first one is the reference. External controls keep every rotation off
 * the configurations already placed.
 *
 * Each control search adds the lowest qualifying qubit for every earlier
 * configuration the rotation would otherwise touch (the union over p).
 */
RotationPlan plan_rotations(const std::vector<OnConfig> &configs);

/** Gadget for the last configuration of configs; hamming(x1, xe) > 4. */
HighOrderGadget plan_high_order(const std::vector<OnConfig> &configs);

/**
 * theta_d with cos/sin products reproducing the coefficients when the
 * reference is rotated towards each partner in turn. The sign of c_1 is
 * absorbed as a global phase.
 */
std::vector<double> angles_from_coefficients(const std::vector<double> &c);

/** Gates for one plan entry at the given angle (no reference X gates). */
std::vector<Gate> entry_gates(const RotationPlan &plan, std::size_t e,
                              const Angle &theta);

/** X gates preparing the reference, then the rotations. */
Circuit gr_circuit(const RotationPlan &plan, const std::vector<Angle> &angles,
                   bool include_reference = true);

struct GrOptions {
  bool include_reference = true;
};

/** Circuit with constant angles preparing the ordered spec. */
Circuit synthesize_gr(const StateSpec &spec, const GrOptions &opts = {});

/** Same structure with angles named prefix0, prefix1, ... */
Circuit gr_ansatz(const std::vector<OnConfig> &configs,
                  const std::string &prefix = "t");

/**
 * Checks on basis states that entry e maps the running reference onto
 * itself plus its partner and leaves every earlier partner alone.
 * Returns an empty string when the plan is sound.
 */
std::string check_plan_support(const RotationPlan &plan);

}  // namespace mcprep
