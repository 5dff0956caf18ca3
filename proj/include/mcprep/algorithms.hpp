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
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcprep/circuit.hpp"
#include "mcprep/config.hpp"
#include "mcprep/pauli.hpp"
#include "mcprep/statevector.hpp"

namespace mcprep {

// ---------------------------------------------------------------------------
// Connected moments

class DegenerateCumulants : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ZeroThirdCumulant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct CumulantSet {
  std::vector<double> c;  // c[0] is the first cumulant
  double operator[](std::size_t m) const { return c.at(m - 1); }
};

/** Connected moments from <H>, <H^2>, ... */
CumulantSet cumulants(const std::vector<double> &moments);

constexpr double kNearEigenstate = 1e-12;
constexpr double kCumulantGuard = 1e-14;

/**
 * c1 - c2^2 / (c3^2 - c2 c4) * (sqrt(3 c3^2 - 2 c2 c4) - c3). Returns c1
 * when c2 < 1e-12.
 */
double qcm4(const CumulantSet &c);
/** c1 - c2^2 / c3, or c1 when c2 < 1e-12. */
double cmx2(const CumulantSet &c);

// ---------------------------------------------------------------------------
// VQE

enum class PrepMethod { GR, SSP };
std::string method_name(PrepMethod m);
PrepMethod method_from_name(const std::string &name);

struct VqeOptions {
  unsigned restarts = 3;
  std::uint64_t seed = 20240611;
  unsigned max_iterations = 500;
  double gradient_tolerance = 1e-8;
  double fd_step = 1e-6;
};

struct VqeResult {
  std::vector<double> theta;
  double energy = 0.0;
  StateVector state{1};
  bool converged = false;
  unsigned iterations = 0;
  unsigned evaluations = 0;
};

/** Minimize <psi(theta)|H|psi(theta)> for a symbolic ansatz circuit. */
VqeResult vqe_minimize(const Circuit &ansatz, const PauliSum &h,
                       const std::vector<double> &theta0,
                       const VqeOptions &opts = {});

/** Ansatz over configs for the given method, then vqe_minimize. */
VqeResult vqe_minimize(const std::vector<OnConfig> &configs, PrepMethod method,
                       const PauliSum &h, const VqeOptions &opts = {});

/** Ordered parameter names of an ansatz: t0, t1, ... by numeric suffix. */
std::vector<std::string> ordered_parameters(const Circuit &ansatz);

// ---------------------------------------------------------------------------
// QCELS

class TauBoundViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct QcelsSeries {
  double tau = 0.0;
  std::vector<cplx> z;  // z[n] = <psi| e^{-i n tau H} |psi>
  double shift = 0.0;   // identity coefficient removed before evolving
};

/** Z_n for n = 0..N-1 on the identity-free Hamiltonian. */
QcelsSeries qcels_series(const StateVector &psi, const PauliSum &h, double tau,
                         unsigned n);

/**
 * Z_n from the ancilla state (|0>|psi> + |1> U^n |psi>) / sqrt 2 via
 * <X x I> + i <Y x I>, ancilla on qubit 0.
 */
std::vector<cplx> qcels_hadamard_series(const StateVector &psi,
                                        const PauliSum &h, double tau,
                                        unsigned n);

/** Objective |sum_n Z_n e^{i n tau E}|^2 / N^2. */
double qcels_objective(const QcelsSeries &s, double e);

/** argmax of the objective on (-pi/tau, pi/tau), shift added back. */
double qcels_estimate(const QcelsSeries &s);

// ---------------------------------------------------------------------------
// Q-SCEOM

struct ElementResources {
  std::size_t i = 0, j = 0;
  unsigned hamming = 0;
  unsigned gr_two_qubit = 0;
  unsigned ssp_two_qubit = 0;
  unsigned gr_total = 0;
  unsigned ssp_total = 0;
};

struct MMatrix {
  Eigen::MatrixXd m;
  double e_gr = 0.0;
  std::vector<OnConfig> configs;  // G_I |HF> per row
  std::vector<int> signs;
  /** Largest |M_IJ - M_JI| if both triangles were computed, else 0. */
  double asymmetry = 0.0;
};

struct SceomOptions {
  PrepMethod prep = PrepMethod::SSP;
  /** Evaluate the lower triangle too, to measure symmetry directly. */
  bool both_triangles = false;
};

MMatrix sceom_m_matrix(const PauliSum &h, const OnConfig &hf,
                       const std::vector<ExcitationOp> &excitations,
                       const Circuit &u, const SceomOptions &opts = {});

std::vector<double> sceom_energies(const MMatrix &m);

/**
 * Two-qubit counts of the ket preparation circuits: single configurations
 * on the diagonal, (s_I x_I + s_J x_J)/sqrt 2 off it, in ZZ-native form.
 */
std::vector<ElementResources> sceom_resources(
    const OnConfig &hf, const std::vector<ExcitationOp> &excitations);

/**
 * Layers of uncontrolled G2 on same-spin neighbours and G4 on orbital
 * pairs, angles named prefix0, prefix1, ...
 */
Circuit givens_fabric(unsigned n_orb, unsigned layers,
                      const std::string &prefix = "f");

}  // namespace mcprep
