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

#include "mcprep/statevector.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <unordered_map>

namespace mcprep {

namespace {

using Mat2 = std::array<cplx, 4>;  // row major

void check_width(unsigned n) {
  if (n == 0 || n > kMaxSimQubits) {
    throw SimError("unsupported register width " + std::to_string(n));
  }
}

std::uint64_t bit_of(unsigned n, unsigned q) {
  return std::uint64_t{1} << (n - 1 - q);
}

Mat2 one_qubit_matrix(const Gate &g) {
  const cplx i1(0, 1);
  switch (g.kind) {
    case GateKind::X:
      return {0, 1, 1, 0};
    case GateKind::Ry: {
      const double t = g.angles[0].value() / 2;
      return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)};
    }
    case GateKind::Rz: {
      const double t = g.angles[0].value() / 2;
      return {std::exp(-i1 * t), 0, 0, std::exp(i1 * t)};
    }
    case GateKind::PhasedX: {
      const double c = std::cos(g.angles[0].value() / 2);
      const double s = std::sin(g.angles[0].value() / 2);
      const double b = g.angles[1].value();
      return {c, -i1 * s * std::exp(-i1 * b), -i1 * s * std::exp(i1 * b), c};
    }
    default:
      throw SimError("not a one-qubit kind");
  }
}

// Rotation between the basis pair (lo, hi) restricted to targets:
// lo -> cos lo - sin hi, hi -> sin lo + cos hi.
void givens(Amplitudes &a, std::uint64_t cmask, std::uint64_t cval,
            std::uint64_t tmask, std::uint64_t lo, std::uint64_t hi,
            double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    if ((i & cmask) != cval || (i & tmask) != lo) continue;
    const std::uint64_t j = (i & ~tmask) | hi;
    const cplx vlo = a[i], vhi = a[j];
    a[i] = c * vlo + s * vhi;
    a[j] = -s * vlo + c * vhi;
  }
}

}  // namespace

void apply_gate(Amplitudes &a, unsigned n, const Gate &g) {
  std::uint64_t cmask = 0, cval = 0;
  for (const Control &c : g.controls) {
    cmask |= bit_of(n, c.qubit);
    if (c.state) cval |= bit_of(n, c.qubit);
  }
  const std::vector<unsigned> &t = g.targets;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::PhasedX: {
      const Mat2 m = one_qubit_matrix(g);
      const std::uint64_t tb = bit_of(n, t[0]);
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & tb) || (i & cmask) != cval) continue;
        const cplx v0 = a[i], v1 = a[i | tb];
        a[i] = m[0] * v0 + m[1] * v1;
        a[i | tb] = m[2] * v0 + m[3] * v1;
      }
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t cb = bit_of(n, t[0]), tb = bit_of(n, t[1]);
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & tb) || (i & cmask) != cval || !(i & cb)) continue;
        std::swap(a[i], a[i | tb]);
      }
      break;
    }
    case GateKind::ZZMax: {
      const std::uint64_t ab = bit_of(n, t[0]), bb = bit_of(n, t[1]);
      const cplx even = std::exp(cplx(0, -kPi / 4));
      const cplx odd = std::exp(cplx(0, kPi / 4));
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & cmask) != cval) continue;
        a[i] *= (bool(i & ab) == bool(i & bb)) ? even : odd;
      }
      break;
    }
    case GateKind::SWAP: {
      const std::uint64_t ab = bit_of(n, t[0]), bb = bit_of(n, t[1]);
      for (std::uint64_t i = 0; i < a.size(); ++i) {
        if ((i & cmask) != cval || !(i & ab) || (i & bb)) continue;
        std::swap(a[i], a[i ^ (ab | bb)]);
      }
      break;
    }
    case GateKind::G2: {
      const std::uint64_t ab = bit_of(n, t[0]), bb = bit_of(n, t[1]);
      givens(a, cmask, cval, ab | bb, bb, ab, g.angles[0].value());
      break;
    }
    case GateKind::G4: {
      const std::uint64_t m0 = bit_of(n, t[0]) | bit_of(n, t[1]);
      const std::uint64_t m1 = bit_of(n, t[2]) | bit_of(n, t[3]);
      givens(a, cmask, cval, m0 | m1, m1, m0, g.angles[0].value());
      break;
    }
  }
}

StateVector::StateVector(unsigned n_qubits) : n_(n_qubits) {
  check_width(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, cplx(0));
  amps_[0] = 1;
}

StateVector::StateVector(unsigned n_qubits, Amplitudes amps)
    : n_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(const OnConfig &x) {
  StateVector s(x.size());
  s.amps_[0] = 0;
  s.amps_[x.index()] = 1;
  return s;
}

StateVector StateVector::from_spec(const StateSpec &spec) {
  Amplitudes a(std::size_t{1} << spec.n_qubits, cplx(0));
  check_width(spec.n_qubits);
  for (const SpecEntry &e : spec.entries) a[e.config.index()] = e.coefficient;
  return from_amplitudes(spec.n_qubits, std::move(a));
}

StateVector StateVector::from_amplitudes(unsigned n_qubits, Amplitudes amps) {
  check_width(n_qubits);
  if (amps.size() != (std::size_t{1} << n_qubits)) {
    throw SimError("amplitude count does not match the register");
  }
  double nrm = 0;
  for (const cplx &v : amps) nrm += std::norm(v);
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) throw SimError("zero state vector");
  for (cplx &v : amps) v /= nrm;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const {
  double s = 0;
  for (const cplx &v : amps_) s += std::norm(v);
  return std::sqrt(s);
}

void StateVector::apply(const Gate &g) {
  g.check(n_);
  apply_gate(amps_, n_, g);
}

StateVector run_circuit(const Circuit &c, const StateVector &input) {
  if (c.n_qubits() != input.n_qubits()) {
    throw SimError("circuit and state widths differ");
  }
  if (!c.parameters().empty()) {
    throw SimError("circuit has unbound parameter '" +
                   *c.parameters().begin() + "'");
  }
  StateVector out = input;
  for (const Gate &g : c.gates()) out.apply(g);
  return out;
}

StateVector run_circuit(const Circuit &c) {
  return run_circuit(c, StateVector(c.n_qubits()));
}

cplx inner(const Amplitudes &a, const Amplitudes &b) {
  if (a.size() != b.size()) throw SimError("state sizes differ");
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

cplx inner(const StateVector &a, const StateVector &b) {
  return inner(a.amplitudes(), b.amplitudes());
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
  return std::min(1.0, std::norm(inner(a, b)));
}

Amplitudes apply_pauli_sum(const PauliSum &h, const Amplitudes &psi) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  if (psi.size() != dim) throw SimError("Hamiltonian and state widths differ");
  Amplitudes out(dim, cplx(0));
  for (const auto &[w, c] : h.terms()) {
    const std::uint64_t x = w.x(), z = w.z();
    const cplx base =
        c * word_action_phase(PauliWord(h.n_qubits(), x, z), 0);
    for (std::uint64_t b = 0; b < dim; ++b) {
      if (psi[b] == cplx(0)) continue;
      const bool odd = std::popcount(b & z) & 1;
      out[b ^ x] += (odd ? -base : base) * psi[b];
    }
  }
  return out;
}

double expectation(const StateVector &psi, const PauliSum &h) {
  const cplx v = inner(psi.amplitudes(), apply_pauli_sum(h, psi.amplitudes()));
  return v.real();
}

cplx matrix_element(const StateVector &a, const PauliSum &h,
                    const StateVector &b) {
  return inner(a.amplitudes(), apply_pauli_sum(h, b.amplitudes()));
}

std::vector<double> moments(
    const StateVector &psi, const PauliSum &h, unsigned m_max) {
  if (m_max == 0 || m_max > 8) throw SimError("moment order must be in 1..8");
  std::vector<Amplitudes> phi{psi.amplitudes()};
  const unsigned need = (m_max + 1) / 2;
  for (unsigned k = 1; k <= need; ++k) {
    phi.push_back(apply_pauli_sum(h, phi.back()));
  }
  std::vector<double> out;
  for (unsigned m = 1; m <= m_max; ++m) {
    out.push_back(inner(phi[(m + 1) / 2], phi[m / 2]).real());
  }
  return out;
}

StateVector evolve(const StateVector &psi, const PauliSum &h, double t) {
  if (h.n_qubits() != psi.n_qubits()) {
    throw SimError("Hamiltonian and state widths differ");
  }
  const double bound = h.l1_norm();
  if (t == 0.0 || bound == 0.0) {
    // Only the identity part, if any, survives: a pure phase.
    Amplitudes a = psi.amplitudes();
    const cplx ph = std::exp(cplx(0, -t * h.identity_coefficient()));
    for (cplx &v : a) v *= ph;
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(a));
  }
  const auto steps =
      static_cast<std::size_t>(std::ceil(std::abs(t) * bound / 0.5));
  const double dt = t / static_cast<double>(steps);
  Amplitudes cur = psi.amplitudes();
  constexpr unsigned kMaxTerms = 60;
  for (std::size_t s = 0; s < steps; ++s) {
    Amplitudes acc = cur, term = cur;
    bool done = false;
    for (unsigned k = 1; k <= kMaxTerms; ++k) {
      term = apply_pauli_sum(h, term);
      const cplx f(0, -dt / k);
      double tn = 0;
      for (cplx &v : term) {
        v *= f;
        tn += std::norm(v);
      }
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
      if (std::sqrt(tn) < 1e-17) {
        done = true;
        break;
      }
    }
    if (!done) throw SimError("Taylor series did not converge");
    cur = std::move(acc);
  }
  return StateVector::from_amplitudes(psi.n_qubits(), std::move(cur));
}

Eigen::MatrixXcd dense_matrix(const PauliSum &h) {
  if (h.n_qubits() > kMaxDenseQubits) {
    throw SimError("register too wide for a dense matrix");
  }
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &[w, c] : h.terms()) {
    for (std::uint64_t b = 0; b < dim; ++b) {
      m(b ^ w.x(), b) += c * word_action_phase(w, b);
    }
  }
  return m;
}

Eigen::MatrixXcd circuit_unitary(const Circuit &c) {
  if (c.n_qubits() > 10) throw SimError("register too wide for a unitary");
  const std::size_t dim = std::size_t{1} << c.n_qubits();
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    Amplitudes a(dim, cplx(0));
    a[col] = 1;
    for (const Gate &g : c.gates()) apply_gate(a, c.n_qubits(), g);
    for (std::size_t r = 0; r < dim; ++r) u(r, col) = a[r];
  }
  return u;
}

namespace {

// Dense eigendecomposition beyond this many qubits is not attempted: a
// 2^13 complex matrix already needs a gigabyte.
constexpr unsigned kMaxEigenQubits = 12;

Spectrum diagonalize(const Eigen::MatrixXcd &m, bool with_vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw SimError("eigensolver failed");
  Spectrum s;
  s.values.assign(es.eigenvalues().data(),
                  es.eigenvalues().data() + es.eigenvalues().size());
  if (with_vectors) s.vectors = es.eigenvectors();
  return s;
}

}  // namespace

Spectrum exact_spectrum(const PauliSum &h, bool with_vectors) {
  if (h.n_qubits() > kMaxEigenQubits) {
    throw SimError("register too wide for exact diagonalization");
  }
  return diagonalize(dense_matrix(h), with_vectors);
}

Spectrum subspace_diag(const PauliSum &h, const std::vector<OnConfig> &configs,
                       bool with_vectors) {
  if (configs.empty()) throw SimError("empty configuration subspace");
  if (configs.size() > (std::size_t{1} << kMaxEigenQubits)) {
    throw SimError("configuration subspace too large");
  }
  std::unordered_map<std::uint64_t, std::size_t> where;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    if (configs[i].size() != h.n_qubits()) {
      throw SimError("configuration width does not match Hamiltonian");
    }
    if (!where.emplace(configs[i].index(), i).second) {
      throw SimError("repeated configuration " + configs[i].str());
    }
  }
  const std::size_t d = configs.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const std::uint64_t b = configs[j].index();
    for (const auto &[w, c] : h.terms()) {
      auto it = where.find(b ^ w.x());
      if (it != where.end()) m(it->second, j) += c * word_action_phase(w, b);
    }
  }
  return diagonalize(m, with_vectors);
}

std::vector<OnConfig> weight_sector(unsigned n_qubits, unsigned weight) {
  if (n_qubits > kMaxSimQubits) throw SimError("register too wide");
  std::vector<OnConfig> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n_qubits); ++i) {
    if (static_cast<unsigned>(std::popcount(i)) == weight) {
      out.emplace_back(n_qubits, i);
    }
  }
  return out;
}

namespace {

// Extreme Ritz values from full-reorthogonalized Lanczos. Stops once the
// residual bound |beta_k s_k| of both extreme Ritz pairs is negligible, or
// when the stored basis would pass about 1 GiB.
std::pair<double, double> lanczos_range(const PauliSum &h) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  const std::size_t budget = (std::size_t{1} << 30) / (dim * sizeof(cplx));
  const std::size_t m = std::min<std::size_t>({dim, 600, std::max<std::size_t>(budget, 40)});
  const double tol = 1e-11 * std::max(1.0, h.l1_norm());
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  Amplitudes v(dim);
  for (cplx &x : v) x = nd(rng);
  double nv = std::sqrt(inner(v, v).real());
  for (cplx &x : v) x /= nv;
  std::vector<Amplitudes> basis{v};
  std::vector<double> alpha, beta;
  auto ritz = [&](std::size_t d, bool vectors) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      t(i, i) = alpha[i];
      if (i + 1 < d) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(
        t, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  };
  for (std::size_t k = 0; k < m; ++k) {
    Amplitudes w = apply_pauli_sum(h, basis.back());
    alpha.push_back(inner(basis.back(), w).real());
    for (int pass = 0; pass < 2; ++pass) {
      for (const Amplitudes &b : basis) {
        const cplx p = inner(b, w);
        for (std::size_t i = 0; i < dim; ++i) w[i] -= p * b[i];
      }
    }
    const double nb = std::sqrt(inner(w, w).real());
    if (nb < 1e-12 || k + 1 == m) break;
    if (k >= 20 && k % 10 == 0) {
      const auto es = ritz(alpha.size(), true);
      const auto &s = es.eigenvectors();
      const Eigen::Index last = s.rows() - 1;
      if (std::abs(nb * s(last, 0)) < tol &&
          std::abs(nb * s(last, last)) < tol) {
        break;
      }
    }
    beta.push_back(nb);
    for (cplx &x : w) x /= nb;
    basis.push_back(std::move(w));
  }
  const auto es = ritz(alpha.size(), false);
  return {es.eigenvalues()(0), es.eigenvalues()(alpha.size() - 1)};
}

}  // namespace

std::pair<double, double> spectral_range(const PauliSum &h) {
  if (h.n_qubits() <= 10) {
    const Spectrum s = exact_spectrum(h);
    return {s.values.front(), s.values.back()};
  }
  return lanczos_range(h);
}

double support_leakage(const StateVector &psi,
                       const std::vector<OnConfig> &configs) {
  std::vector<bool> in(psi.dim(), false);
  for (const OnConfig &x : configs) in.at(x.index()) = true;
  double worst = 0;
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    if (!in[i]) worst = std::max(worst, std::abs(psi[i]));
  }
  return worst;
}

double weight_leakage(const StateVector &psi, unsigned weight) {
  double worst = 0;
  for (std::uint64_t i = 0; i < psi.dim(); ++i) {
    if (static_cast<unsigned>(std::popcount(i)) != weight) {
      worst = std::max(worst, std::abs(psi[i]));
    }
  }
  return worst;
}

double distance_up_to_phase(const Eigen::MatrixXcd &a,
                            const Eigen::MatrixXcd &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw SimError("matrix shapes differ");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) < 1e-300) return (a - b).cwiseAbs().maxCoeff();
  const cplx ph = a(r, c) / b(r, c);
  return (a - (ph / std::abs(ph)) * b).cwiseAbs().maxCoeff();
}

}  // namespace mcprep
