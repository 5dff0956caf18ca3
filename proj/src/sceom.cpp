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

#include <Eigen/Eigenvalues>
#include <cmath>

#include "mcprep/algorithms.hpp"
#include "mcprep/compile.hpp"
#include "mcprep/givens.hpp"
#include "mcprep/ssp.hpp"

namespace mcprep {

namespace {

struct Kets {
  std::vector<OnConfig> configs;
  std::vector<int> signs;
};

Kets excite_all(const OnConfig &hf,
                const std::vector<ExcitationOp> &excitations) {
  Kets k;
  for (const ExcitationOp &op : excitations) {
    auto r = apply_excitation(op, hf);
    if (!r) {
      throw std::invalid_argument("excitation " + op.str() +
                                  " annihilates the reference " + hf.str());
    }
    k.configs.push_back(r->first);
    k.signs.push_back(r->second);
  }
  return k;
}

StateSpec pair_spec(const OnConfig &a, int sa, const OnConfig &b, int sb) {
  if (a == b) {
    throw std::invalid_argument("two excitations give the same configuration " +
                                a.str());
  }
  const double r = 1.0 / std::sqrt(2.0);
  return StateSpec{a.size(), {{sa * r, a}, {sb * r, b}}};
}

Circuit prep_circuit(const StateSpec &spec, PrepMethod m) {
  return m == PrepMethod::GR ? synthesize_gr(spec) : synthesize_ssp(spec);
}

Circuit single_config(const OnConfig &x) {
  Circuit c(x.size());
  for (unsigned q = 0; q < x.size(); ++q) {
    if (x[q]) c.add(Gate::x(q));
  }
  return c;
}

}  // namespace

MMatrix sceom_m_matrix(const PauliSum &h, const OnConfig &hf,
                       const std::vector<ExcitationOp> &excitations,
                       const Circuit &u, const SceomOptions &opts) {
  if (u.n_qubits() != hf.size() || h.n_qubits() != hf.size()) {
    throw std::invalid_argument("register widths differ");
  }
  const Kets k = excite_all(hf, excitations);
  auto energy = [&](Circuit prep) {
    prep.append(u);
    return expectation(run_circuit(prep), h);
  };
  MMatrix out;
  out.configs = k.configs;
  out.signs = k.signs;
  out.e_gr = energy(single_config(hf));
  const std::size_t d = k.configs.size();
  out.m = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    out.m(i, i) = energy(single_config(k.configs[i])) - out.e_gr;
  }
  auto off = [&](std::size_t i, std::size_t j) {
    const StateSpec s =
        pair_spec(k.configs[i], k.signs[i], k.configs[j], k.signs[j]);
    const double mij = energy(prep_circuit(s, opts.prep)) - out.e_gr;
    return mij - out.m(i, i) / 2 - out.m(j, j) / 2;
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      out.m(i, j) = off(i, j);
      if (opts.both_triangles) {
        out.m(j, i) = off(j, i);
        out.asymmetry = std::max(out.asymmetry, std::abs(out.m(i, j) - out.m(j, i)));
      } else {
        out.m(j, i) = out.m(i, j);
      }
    }
  }
  return out;
}

std::vector<double> sceom_energies(const MMatrix &m) {
  const double asym = (m.m - m.m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-6) {
    throw std::invalid_argument("M matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
      (m.m + m.m.transpose()) / 2, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(),
          es.eigenvalues().data() + es.eigenvalues().size()};
}

std::vector<ElementResources> sceom_resources(
    const OnConfig &hf, const std::vector<ExcitationOp> &excitations) {
  const Kets k = excite_all(hf, excitations);
  std::vector<ElementResources> out;
  for (std::size_t i = 0; i < k.configs.size(); ++i) {
    for (std::size_t j = i; j < k.configs.size(); ++j) {
      ElementResources r;
      r.i = i;
      r.j = j;
      r.hamming = hamming(k.configs[i], k.configs[j]);
      Circuit gr(hf.size()), ssp(hf.size());
      if (i == j) {
        gr = ssp = single_config(k.configs[i]);
      } else {
        const StateSpec s =
            pair_spec(k.configs[i], k.signs[i], k.configs[j], k.signs[j]);
        gr = synthesize_gr(s);
        ssp = synthesize_ssp(s);
      }
      const ResourceCount rg = count_resources(compile(gr, GateSet::ZZNative));
      const ResourceCount rs = count_resources(compile(ssp, GateSet::ZZNative));
      r.gr_two_qubit = rg.two_qubit_total;
      r.ssp_two_qubit = rs.two_qubit_total;
      r.gr_total = rg.total;
      r.ssp_total = rs.total;
      out.push_back(r);
    }
  }
  return out;
}

Circuit givens_fabric(unsigned n_orb, unsigned layers,
                      const std::string &prefix) {
  if (n_orb < 2 || layers == 0) {
    throw std::invalid_argument("fabric needs two orbitals and one layer");
  }
  Circuit c(2 * n_orb);
  unsigned k = 0;
  auto name = [&]() { return Angle::symbol(prefix + std::to_string(k++)); };
  for (unsigned l = 0; l < layers; ++l) {
    for (unsigned o = 0; o + 1 < n_orb; ++o) {
      const unsigned u0 = 2 * o, d0 = 2 * o + 1, u1 = 2 * o + 2, d1 = 2 * o + 3;
      c.add(Gate::g4(u0, d0, u1, d1, name()));
      c.add(Gate::g2(u0, u1, name()));
      c.add(Gate::g2(d0, d1, name()));
    }
  }
  return c;
}

}  // namespace mcprep
