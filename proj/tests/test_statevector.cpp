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

#include <catch2/catch_amalgamated.hpp>

#include "mcprep/statevector.hpp"
#include "oracles.hpp"

using namespace mcprep;

namespace {

oracle::Vec as_vec(const StateVector &s) {
  oracle::Vec v(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) v(i) = s[i];
  return v;
}

StateVector random_state(std::mt19937_64 &rng, unsigned n) {
  std::normal_distribution<double> nd;
  Amplitudes a(std::size_t{1} << n);
  for (auto &x : a) x = cplx(nd(rng), nd(rng));
  return StateVector::from_amplitudes(n, a);
}

}  // namespace

TEST_CASE("basis states index qubit 0 as the leftmost bit", "[sim]") {
  const StateVector s = StateVector::basis(OnConfig::parse("100"));
  CHECK(s[4] == cplx(1));
  StateVector t(3);
  t.apply(Gate::x(0));
  CHECK(t[4] == cplx(1));
}

TEST_CASE("every gate kind matches the dense oracle", "[sim]") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  const unsigned n = 5;
  std::vector<Gate> gates = {
      Gate::x(2), Gate::ry(0, u(rng)), Gate::rz(4, u(rng)),
      Gate::phased_x(3, u(rng), u(rng)), Gate::cnot(4, 1), Gate::zzmax(0, 3),
      Gate::swap(1, 4), Gate::g2(3, 0, u(rng)), Gate::g4(4, 0, 2, 1, u(rng)),
      control_wrap(Gate::g2(1, 2, u(rng)), {{0, true}, {4, false}}),
      control_wrap(Gate::g4(0, 1, 3, 4, u(rng)), {{2, false}}),
      control_wrap(Gate::swap(0, 1), {{2, true}}),
      control_wrap(Gate::ry(3, u(rng)), {{1, false}, {2, true}}),
      control_wrap(Gate::zzmax(0, 1), {{4, true}}),
      control_wrap(Gate::phased_x(2, u(rng), u(rng)), {{3, true}}),
  };
  for (const Gate &g : gates) {
    INFO(g.label());
    const StateVector psi = random_state(rng, n);
    StateVector out = psi;
    out.apply(g);
    const oracle::Vec want = oracle::gate_matrix(g, n) * as_vec(psi);
    CHECK((as_vec(out) - want).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("expectations and moments match dense powers", "[sim]") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const unsigned n = 2 + t % 4;
    const PauliSum h = oracle::random_pauli_sum(rng, n, 8);
    const StateVector psi = random_state(rng, n);
    const oracle::Mat m = oracle::sum_matrix(h);
    const oracle::Vec v = as_vec(psi);
    const auto mu = moments(psi, h, 6);
    oracle::Vec w = v;
    for (unsigned k = 1; k <= 6; ++k) {
      w = m * w;
      const double want = v.dot(w).real();
      CHECK(std::abs(mu[k - 1] - want) < 1e-10 * std::max(1.0, std::abs(want)));
    }
    CHECK(std::abs(expectation(psi, h) - mu[0]) < 1e-12);
  }
}

TEST_CASE("time evolution matches the dense exponential", "[sim]") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 5; ++t) {
    const PauliSum h = oracle::random_pauli_sum(rng, 4, 10);
    const StateVector psi = random_state(rng, 4);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::sum_matrix(h));
    for (double time : {0.1, -0.7, 3.0}) {
      const oracle::Vec phase =
          (es.eigenvalues().cast<oracle::cplx>() * oracle::cplx(0, -time))
              .array()
              .exp();
      const oracle::Vec want = es.eigenvectors() * phase.asDiagonal() *
                               es.eigenvectors().adjoint() * as_vec(psi);
      CHECK((as_vec(evolve(psi, h, time)) - want).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("spectra from dense, subspace and Lanczos paths agree", "[sim]") {
  std::mt19937_64 rng(53);
  const PauliSum h = oracle::random_pauli_sum(rng, 5, 12);
  Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::sum_matrix(h));
  const Spectrum s = exact_spectrum(h);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    CHECK(std::abs(s.values[i] - es.eigenvalues()(i)) < 1e-10);
  }
  const auto [lo, hi] = spectral_range(h);
  CHECK(std::abs(lo - es.eigenvalues()(0)) < 1e-10);
  CHECK(std::abs(hi - es.eigenvalues()(31)) < 1e-10);

  // Lanczos path on a wider register.
  const PauliSum w = oracle::random_pauli_sum(rng, 11, 30);
  const Spectrum ws = exact_spectrum(w);
  const auto [wlo, whi] = spectral_range(w);
  CHECK(std::abs(wlo - ws.values.front()) < 1e-8);
  CHECK(std::abs(whi - ws.values.back()) < 1e-8);

  // Full weight sector equals the block of the dense matrix.
  const auto sector = weight_sector(5, 2);
  CHECK(sector.size() == 10);
  const Spectrum sub = subspace_diag(h, sector);
  oracle::Mat block(10, 10);
  const oracle::Mat m = oracle::sum_matrix(h);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) block(i, j) = m(sector[i].index(), sector[j].index());
  }
  Eigen::SelfAdjointEigenSolver<oracle::Mat> bs(block);
  for (int i = 0; i < 10; ++i) {
    CHECK(std::abs(sub.values[i] - bs.eigenvalues()(i)) < 1e-10);
  }
}

TEST_CASE("leakage measures and fidelity", "[sim]") {
  StateSpec spec{3, {{0.6, OnConfig::parse("110")}, {0.8, OnConfig::parse("011")}}};
  const StateVector s = StateVector::from_spec(spec);
  CHECK(support_leakage(s, spec.configs()) == 0.0);
  CHECK(weight_leakage(s, 2) == 0.0);
  CHECK(support_leakage(s, {OnConfig::parse("110")}) == Catch::Approx(0.8));
  CHECK(weight_leakage(s, 1) == Catch::Approx(0.8));
  StateVector t = s;
  t.apply(Gate::rz(0, 1.3));  // relative phase, fidelity < 1
  CHECK(fidelity_up_to_phase(s, s) == Catch::Approx(1.0));
  CHECK(fidelity_up_to_phase(s, t) < 1.0);
}

TEST_CASE("width and parameter errors", "[sim]") {
  Circuit c(2);
  c.add(Gate::ry(0, Angle::symbol("t")));
  CHECK_THROWS_AS(run_circuit(c), SimError);
  CHECK_THROWS_AS(run_circuit(Circuit(3), StateVector(2)), SimError);
  CHECK_THROWS_AS(moments(StateVector(2), PauliSum(2), 9), SimError);
  CHECK_THROWS_AS(StateVector::from_amplitudes(1, {0, 0}), SimError);
}
