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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcprep/circuit.hpp"
#include "mcprep/config.hpp"
#include "mcprep/pauli.hpp"

namespace mcprep {

using cplx = std::complex<double>;
using Amplitudes = std::vector<cplx>;

class SimError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Dense ceiling for full-register paths. */
constexpr unsigned kMaxDenseQubits = 14;
/** Ceiling for plain statevector simulation. */
constexpr unsigned kMaxSimQubits = 24;

class StateVector {
 public:
  explicit StateVector(unsigned n_qubits);  // |0...0>
  static StateVector basis(const OnConfig &x);
  static StateVector from_spec(const StateSpec &spec);
  /** Normalizes; throws on a zero vector. */
  static StateVector from_amplitudes(unsigned n_qubits, Amplitudes amps);

  unsigned n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  const Amplitudes &amplitudes() const { return amps_; }
  cplx operator[](std::uint64_t i) const { return amps_[i]; }
  double norm() const;

  /** Gate application is unitary, so the norm is kept. */
  void apply(const Gate &g);

 private:
  StateVector(unsigned n_qubits, Amplitudes amps);
  unsigned n_;
  Amplitudes amps_;
};

/** Applies a constant-angle gate in place on raw amplitudes. */
void apply_gate(Amplitudes &amps, unsigned n_qubits, const Gate &g);

StateVector run_circuit(const Circuit &c, const StateVector &input);
StateVector run_circuit(const Circuit &c);

cplx inner(const StateVector &a, const StateVector &b);
cplx inner(const Amplitudes &a, const Amplitudes &b);
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);

/** H |psi>, unnormalized. */
Amplitudes apply_pauli_sum(const PauliSum &h, const Amplitudes &psi);

double expectation(const StateVector &psi, const PauliSum &h);
/** Re <a|H|b>. */
cplx matrix_element(const StateVector &a, const PauliSum &h,
                    const StateVector &b);

/** <H>, ..., <H^m_max> by repeated application. */
std::vector<double> moments(
    const StateVector &psi, const PauliSum &h, unsigned m_max);

/**
 * e^{-itH} psi by a Taylor series on steps with |dt| * |H|_1 <= 1/2.
 * Throws SimError if a step fails to converge.
 */
StateVector evolve(const StateVector &psi, const PauliSum &h, double t);

struct Spectrum {
  std::vector<double> values;
  std::optional<Eigen::MatrixXcd> vectors;  // columns follow values
};

Eigen::MatrixXcd dense_matrix(const PauliSum &h);
Eigen::MatrixXcd circuit_unitary(const Circuit &c);

Spectrum exact_spectrum(const PauliSum &h, bool with_vectors = false);
/** Spectrum of H restricted to span(configs); vectors are in that basis. */
Spectrum subspace_diag(const PauliSum &h, const std::vector<OnConfig> &configs,
                       bool with_vectors = false);
/** All configurations of a given weight, ascending. */
std::vector<OnConfig> weight_sector(unsigned n_qubits, unsigned weight);

/** (E_min, E_max) by dense diagonalization or Lanczos for wide registers. */
std::pair<double, double> spectral_range(const PauliSum &h);

/** Largest |amplitude| outside the given configurations. */
double support_leakage(const StateVector &psi,
                       const std::vector<OnConfig> &configs);
/** Largest |amplitude| on a basis state of another Hamming weight. */
double weight_leakage(const StateVector &psi, unsigned weight);

/** max |A - e^{i phi} B| with the phase fixed at the largest entry of B. */
double distance_up_to_phase(const Eigen::MatrixXcd &a,
                            const Eigen::MatrixXcd &b);

}  // namespace mcprep
