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

#include <algorithm>
#include <cmath>
#include <cctype>
#include <random>
#include <set>

#include "mcprep/algorithms.hpp"
#include "mcprep/givens.hpp"
#include "mcprep/ssp.hpp"

namespace mcprep {

std::string method_name(PrepMethod m) {
  return m == PrepMethod::GR ? "gr" : "ssp";
}

PrepMethod method_from_name(const std::string &name) {
  if (name == "gr" || name == "GR") return PrepMethod::GR;
  if (name == "ssp" || name == "SSP") return PrepMethod::SSP;
  throw std::invalid_argument("unknown preparation method '" + name + "'");
}

std::vector<std::string> ordered_parameters(const Circuit &ansatz) {
  const std::set<std::string> names = ansatz.parameters();
  std::vector<std::string> out(names.begin(), names.end());
  // Natural order so t10 follows t9.
  auto split = [](const std::string &s) {
    std::size_t k = s.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
    const long idx = k < s.size() ? std::stol(s.substr(k)) : -1;
    return std::make_pair(s.substr(0, k), idx);
  };
  std::sort(out.begin(), out.end(), [&](const auto &a, const auto &b) {
    return split(a) < split(b);
  });
  return out;
}

namespace {

using Vec = Eigen::VectorXd;

struct Objective {
  const Circuit &ansatz;
  const PauliSum &h;
  std::vector<std::string> names;
  unsigned evaluations = 0;

  StateVector state(const Vec &x) const {
    std::map<std::string, double> m;
    for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = x[i];
    return run_circuit(bind_parameters(ansatz, m));
  }
  double operator()(const Vec &x) {
    ++evaluations;
    return expectation(state(x), h);
  }
  Vec gradient(const Vec &x, double step) {
    Vec g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      Vec a = x, b = x;
      a[i] += step;
      b[i] -= step;
      g[i] = ((*this)(a) - (*this)(b)) / (2 * step);
    }
    return g;
  }
};

// BFGS with Armijo backtracking.
VqeResult bfgs(Objective &f, Vec x, const VqeOptions &opts) {
  const Eigen::Index p = x.size();
  double fx = f(x);
  Vec g = f.gradient(x, opts.fd_step);
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(p, p);
  VqeResult r;
  unsigned it = 0;
  for (; it < opts.max_iterations; ++it) {
    if (g.lpNorm<Eigen::Infinity>() < opts.gradient_tolerance) {
      r.converged = true;
      break;
    }
    Vec d = -hinv * g;
    if (g.dot(d) >= 0) {
      hinv.setIdentity();
      d = -g;
    }
    double alpha = 1.0;
    Vec xn;
    double fn = fx;
    bool accepted = false;
    for (int k = 0; k < 60; ++k) {
      xn = x + alpha * d;
      fn = f(xn);
      if (fn <= fx + 1e-4 * alpha * g.dot(d)) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;  // no representable descent left
    const Vec gn = f.gradient(xn, opts.fd_step);
    const Vec s = xn - x, y = gn - g;
    const double sy = s.dot(y);
    if (sy > 1e-16) {
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(p, p);
      hinv = (id - rho * s * y.transpose()) * hinv *
                 (id - rho * y * s.transpose()) +
             rho * s * s.transpose();
    }
    x = xn;
    fx = fn;
    g = gn;
  }
  if (!r.converged && g.lpNorm<Eigen::Infinity>() < opts.gradient_tolerance) {
    r.converged = true;
  }
  r.theta.assign(x.data(), x.data() + p);
  r.energy = fx;
  r.iterations = it;
  return r;
}

}  // namespace

VqeResult vqe_minimize(const Circuit &ansatz, const PauliSum &h,
                       const std::vector<double> &theta0,
                       const VqeOptions &opts) {
  if (h.n_qubits() != ansatz.n_qubits()) {
    throw std::invalid_argument("Hamiltonian and ansatz widths differ");
  }
  Objective f{ansatz, h, ordered_parameters(ansatz)};
  if (theta0.size() != f.names.size()) {
    throw std::invalid_argument("initial point has the wrong dimension");
  }
  Vec x = Eigen::Map<const Vec>(theta0.data(),
                                static_cast<Eigen::Index>(theta0.size()));
  VqeResult r = bfgs(f, x, opts);
  r.state = f.state(Eigen::Map<const Vec>(
      r.theta.data(), static_cast<Eigen::Index>(r.theta.size())));
  r.evaluations = f.evaluations;
  return r;
}

VqeResult vqe_minimize(const std::vector<OnConfig> &configs, PrepMethod method,
                       const PauliSum &h, const VqeOptions &opts) {
  const Circuit ansatz =
      method == PrepMethod::GR ? gr_ansatz(configs) : ssp_ansatz(configs);
  const std::size_t p = ansatz.parameters().size();
  if (p == 0) {
    VqeResult r;
    r.state = run_circuit(ansatz);
    r.energy = expectation(r.state, h);
    r.converged = true;
    return r;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  VqeResult best;
  bool have = false;
  for (unsigned k = 0; k < std::max(1U, opts.restarts); ++k) {
    std::vector<double> x0(p);
    for (double &v : x0) v = u(rng);
    VqeResult r = vqe_minimize(ansatz, h, x0, opts);
    if (!have || r.energy < best.energy) {
      const unsigned evals = have ? best.evaluations : 0;
      best = std::move(r);
      best.evaluations += evals;
      have = true;
    } else {
      best.evaluations += r.evaluations;
    }
  }
  return best;
}

}  // namespace mcprep
