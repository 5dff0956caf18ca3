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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcprep/circuit.hpp"
#include "mcprep/config.hpp"
#include "mcprep/pauli.hpp"

namespace mcprep {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Lines of "<coefficient> <pauli word>". '#' starts a comment; blank lines
 * are skipped; repeated words are summed.
 */
PauliSum parse_hamiltonian(std::string_view text);
/** One term per line, coefficients with 17 significant digits. */
std::string render_hamiltonian(const PauliSum &h);

struct ParsedSpec {
  StateSpec spec;
  /** The file asked for its order to be kept (reference first). */
  bool ordered = false;
};

/**
 * Lines of "<coefficient> <bit string>", leftmost character is qubit 0.
 * A line holding just "ordered" keeps the file order for GR; otherwise the
 * largest coefficient is moved to the front. The result is validated.
 */
ParsedSpec parse_state_spec(std::string_view text);
std::string render_state_spec(const StateSpec &spec, bool ordered = false);

/**
 * Circuit JSON. Numeric angles are in units of pi; a symbolic angle is
 * the string "<k>*<name>" meaning k * pi * name radians, or just "<name>"
 * when k * pi is one.
 */
nlohmann::json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &j);

/** Lines of "a [b] -> c [d]": annihilated modes, then created modes. */
std::vector<ExcitationOp> parse_excitations(std::string_view text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

}  // namespace mcprep
