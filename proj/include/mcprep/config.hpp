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

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcprep {

/** Largest register the bit-packed configuration can hold. */
constexpr unsigned kMaxQubits = 62;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Occupation-number configuration on n qubits.
 *
 * Character i of the textual form is qubit i. The packed index puts qubit
 * 0 in the most significant position, so index() is the binary value of
 * the text and also the statevector index of the basis state.
 */
class OnConfig {
 public:
  OnConfig() = default;
  OnConfig(unsigned n_qubits, std::uint64_t index);

  static OnConfig parse(std::string_view bits);

  unsigned size() const { return n_; }
  std::uint64_t index() const { return bits_; }
  bool operator[](unsigned q) const;
  OnConfig flipped(unsigned q) const;
  OnConfig with(unsigned q, bool value) const;
  unsigned weight() const;
  std::string str() const;

  /** Mask of qubit q within index(). */
  std::uint64_t mask(unsigned q) const { return std::uint64_t{1} << (n_ - 1 - q); }

  // Same-width comparison is lexicographic on the text.
  auto operator<=>(const OnConfig &) const = default;

 private:
  unsigned n_ = 0;
  std::uint64_t bits_ = 0;
};

unsigned hamming(const OnConfig &x, const OnConfig &y);
std::vector<unsigned> xor_support(const OnConfig &x, const OnConfig &y);

/** Second-quantized single or double excitation a†_c... a_a... */
struct ExcitationOp {
  std::vector<unsigned> annihilate;
  std::vector<unsigned> create;

  /** Checked constructor; throws ConfigError on a malformed operator. */
  static ExcitationOp make(
      std::vector<unsigned> annihilate, std::vector<unsigned> create);

  unsigned rank() const { return static_cast<unsigned>(create.size()); }
  std::string str() const;
};

/**
 * Applies op to the determinant x. Annihilators act first, then creators,
 * each in ascending mode order; every operator picks up (-1) to the number
 * of occupied modes with a lower index.
 */
std::optional<std::pair<OnConfig, int>> apply_excitation(
    const ExcitationOp &op, const OnConfig &x);

/** Closed-shell reference: first n_elec qubits occupied. */
OnConfig hartree_fock(unsigned n_qubits, unsigned n_elec);

/**
 * Spin-conserving singles and doubles out of the closed-shell reference,
 * with qubit 2k spin up and 2k+1 spin down of orbital k.
 */
std::vector<ExcitationOp> cisd_excitations(unsigned n_orb, unsigned n_elec);

/** Reference followed by every CISD configuration, no duplicates. */
std::vector<OnConfig> generate_cisd_configs(unsigned n_orb, unsigned n_elec);

struct SpecEntry {
  double coefficient;
  OnConfig config;
};

struct StateSpec {
  unsigned n_qubits = 0;
  std::vector<SpecEntry> entries;

  std::vector<OnConfig> configs() const;
  std::vector<double> coefficients() const;
  std::size_t size() const { return entries.size(); }
};

/** Accepted gap between the input norm squared and one before rescaling. */
constexpr double kSpecNormTolerance = 1e-3;
constexpr double kPruneThreshold = 1e-14;

/**
 * Prunes tiny entries, checks distinctness and a shared weight, and rescales
 * so that the squared norm is one. Entry order is kept.
 */
StateSpec validate_spec(const StateSpec &spec);

/** Stable move of the largest |c| entry to the front. */
StateSpec largest_first(const StateSpec &spec);

}  // namespace mcprep
