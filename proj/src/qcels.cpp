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

#include <cmath>
#include <sstream>

#include "mcprep/algorithms.hpp"

namespace mcprep {

QcelsSeries qcels_series(const StateVector &psi, const PauliSum &h, double tau,
                         unsigned n) {
  if (n == 0) throw std::invalid_argument("QCELS needs at least one sample");
  if (!(tau > 0)) throw TauBoundViolation("time step must be positive");
  const PauliSum hc = h.without_identity();
  QcelsSeries s;
  s.tau = tau;
  s.shift = h.identity_coefficient();
  if (!hc.empty()) {
    const auto [lo, hi] = spectral_range(hc);
    if (hi - lo > 0 && tau >= 2 * kPi / (hi - lo)) {
      std::ostringstream os;
      os << "time step " << tau << " violates tau < 2 pi / (Emax - Emin) = "
         << 2 * kPi / (hi - lo);
      throw TauBoundViolation(os.str());
    }
  }
  StateVector phi = psi;
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0) phi = evolve(phi, hc, tau);
    s.z.push_back(inner(psi, phi));
  }
  return s;
}

std::vector<cplx> qcels_hadamard_series(const StateVector &psi,
                                        const PauliSum &h, double tau,
                                        unsigned n) {
  const PauliSum hc = h.without_identity();
  const unsigned nq = psi.n_qubits();
  const std::string rest(nq, 'I');
  PauliSum xo(nq + 1), yo(nq + 1);
  xo.add(PauliWord::parse("X" + rest), 1.0);
  yo.add(PauliWord::parse("Y" + rest), 1.0);
  const std::size_t dim = psi.dim();
  std::vector<cplx> out;
  StateVector phi = psi;
  for (unsigned k = 0; k < n; ++k) {
    if (k > 0) phi = evolve(phi, hc, tau);
    // Ancilla is the most significant index bit.
    Amplitudes a(2 * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      a[i] = psi[i];
      a[dim + i] = phi[i];
    }
    const StateVector anc = StateVector::from_amplitudes(nq + 1, std::move(a));
    out.emplace_back(expectation(anc, xo), expectation(anc, yo));
  }
  return out;
}

namespace {

cplx series_sum(const QcelsSeries &s, double e) {
  cplx acc = 0;
  for (std::size_t k = 0; k < s.z.size(); ++k) {
    acc += s.z[k] * std::exp(cplx(0, k * s.tau * e));
  }
  return acc;
}

double objective_slope(const QcelsSeries &s, double e) {
  cplx acc = 0, d = 0;
  for (std::size_t k = 0; k < s.z.size(); ++k) {
    const cplx term = s.z[k] * std::exp(cplx(0, k * s.tau * e));
    acc += term;
    d += cplx(0, k * s.tau) * term;
  }
  return 2 * (std::conj(acc) * d).real();
}

}  // namespace

double qcels_objective(const QcelsSeries &s, double e) {
  const double n = static_cast<double>(s.z.size());
  return std::norm(series_sum(s, e - s.shift)) / (n * n);
}

double qcels_estimate(const QcelsSeries &s) {
  if (s.z.empty()) throw std::invalid_argument("empty QCELS series");
  const std::size_t grid = 10 * s.z.size();
  const double lo = -kPi / s.tau;
  const double step = 2 * kPi / s.tau / static_cast<double>(grid);
  auto f = [&](double e) { return std::norm(series_sum(s, e)); };
  std::size_t best = 0;
  double fbest = -1;
  for (std::size_t k = 0; k < grid; ++k) {
    const double v = f(lo + (k + 0.5) * step);
    if (v > fbest) {
      fbest = v;
      best = k;
    }
  }
  const double centre = lo + (best + 0.5) * step;
  double a = centre - step, b = centre + step;
  const double a0 = a, b0 = b;

  // Golden section on the bracketing window.
  const double r = (std::sqrt(5.0) - 1) / 2;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 300 && b - a > 1e-10; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  double e = (a + b) / 2;

  // The peak is flat to double precision well before 1e-10, so finish on
  // the sign change of the analytic slope.
  double sa = objective_slope(s, a0), sb = objective_slope(s, b0);
  if (sa > 0 && sb < 0) {
    double l = a0, h = b0;
    for (int it = 0; it < 200 && h - l > 1e-14 * std::max(1.0, std::abs(l));
         ++it) {
      const double m = (l + h) / 2;
      (objective_slope(s, m) > 0 ? l : h) = m;
    }
    const double root = (l + h) / 2;
    if (f(root) >= f(e) * (1 - 1e-12)) e = root;
  }
  return e + s.shift;
}

}  // namespace mcprep
