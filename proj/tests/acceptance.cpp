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

// Prints one PASS/FAIL line per acceptance criterion; exit status is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "mcprep/algorithms.hpp"
#include "mcprep/cli.hpp"
#include "mcprep/compile.hpp"
#include "mcprep/givens.hpp"
#include "mcprep/io.hpp"
#include "mcprep/ssp.hpp"
#include "oracles.hpp"

using namespace mcprep;
namespace fs = std::filesystem;

namespace {

const std::string kData = MCPREP_TEST_DATA;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

std::string fmt(double v) {
  char b[32];
  std::snprintf(b, sizeof b, "%.3g", v);
  return b;
}

unsigned two_qubit(const Circuit &c, GateSet gs) {
  return count_resources(compile(c, gs)).two_qubit_total;
}

// Largest amplitude on basis states the predicate rejects.
double stray_amplitude(const StateVector &s,
                       const std::function<bool(std::uint64_t)> &allowed) {
  double worst = 0;
  for (std::uint64_t i = 0; i < s.dim(); ++i) {
    if (!allowed(i)) worst = std::max(worst, std::abs(s[i]));
  }
  return worst;
}

struct Check {
  double fidelity = 0, support = 0, weight = 0;
};

Check check_state(const Circuit &c, const StateSpec &spec) {
  const StateVector out = run_circuit(c);
  std::set<std::uint64_t> sup;
  for (const auto &e : spec.entries) sup.insert(e.config.index());
  const unsigned w = spec.entries.front().config.weight();
  Check r;
  r.fidelity = fidelity_up_to_phase(out, StateVector::from_spec(spec));
  r.support = stray_amplitude(out, [&](std::uint64_t i) { return sup.count(i) > 0; });
  r.weight = stray_amplitude(out, [&](std::uint64_t i) {
    return static_cast<unsigned>(__builtin_popcountll(i)) == w;
  });
  return r;
}

StateSpec load(const std::string &name) {
  return parse_state_spec(read_file(kData + "/" + name)).spec;
}

// Random equal-weight spec; D is clamped to the sector size.
StateSpec random_spec(std::mt19937_64 &rng, unsigned n, unsigned d) {
  std::uniform_int_distribution<unsigned> wd(1, n - 1);
  const unsigned w = wd(rng);
  const auto sector = weight_sector(n, w);
  d = std::min<unsigned>(d, sector.size());
  std::vector<OnConfig> pick = sector;
  std::shuffle(pick.begin(), pick.end(), rng);
  std::normal_distribution<double> nd;
  StateSpec s{n, {}};
  double n2 = 0;
  for (unsigned k = 0; k < d; ++k) {
    s.entries.push_back({nd(rng), pick[k]});
    n2 += s.entries.back().coefficient * s.entries.back().coefficient;
  }
  for (auto &e : s.entries) e.coefficient /= std::sqrt(n2);
  return validate_spec(s);
}

// A plan entry whose control set cannot be replaced by any single control.
std::string one_control_counterexample(const StateSpec &spec) {
  const RotationPlan plan = plan_rotations(spec.configs());
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    const RotationEntry &en = plan.entries[e];
    if (en.gadget || en.controls.size() < 2) continue;
    bool single_ok = false;
    for (unsigned q = 0; q < spec.n_qubits && !single_ok; ++q) {
      if (std::find(en.targets.begin(), en.targets.end(), q) != en.targets.end()) continue;
      for (bool st : {false, true}) {
        RotationPlan alt = plan;
        alt.entries[e].controls = {{q, st}};
        if (check_plan_support(alt).empty()) {
          single_ok = true;
          break;
        }
      }
    }
    if (single_ok) continue;
    std::ostringstream o;
    o << "ordered spec";
    for (const auto &c : spec.configs()) o << ' ' << c.str();
    o << "; rotation " << e + 1 << " (" << plan.reference.str() << " -> "
      << en.partner.str() << ") needs " << en.controls.size() << " controls";
    return o.str();
  }
  return "";
}

std::string counterexample;

// ---------------------------------------------------------------------------

void ac1(Outcome &o) {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<unsigned> nd(2, 10), dd(1, 8);
  double worst_f = 0, worst_s = 0, worst_w = 0;
  for (int t = 0; t < 1000; ++t) {
    const StateSpec s = random_spec(rng, nd(rng), dd(rng));
    const Circuit gr = synthesize_gr(s), ssp = synthesize_ssp(s);
    for (const Circuit &c : {gr, ssp, compile(gr, GateSet::ZZNative),
                             compile(ssp, GateSet::ZZNative), compile(gr, GateSet::CXNative),
                             compile(ssp, GateSet::CXNative)}) {
      const Check r = check_state(c, s);
      worst_f = std::max(worst_f, 1 - r.fidelity);
      worst_s = std::max(worst_s, r.support);
      worst_w = std::max(worst_w, r.weight);
    }
    if (counterexample.empty()) counterexample = one_control_counterexample(s);
  }
  o.require(worst_f <= 1e-9, "fidelity");
  o.require(worst_s <= 1e-10, "support leakage");
  o.require(worst_w <= 1e-10, "weight sector");
  o.detail << "1000 specs, raw and compiled, worst 1-F " << fmt(worst_f) << ", stray amplitude "
           << fmt(worst_s) << ", off-sector " << fmt(worst_w);
}

void ac2(Outcome &o) {
  const StateSpec s = load("fig3_4q_90.txt");
  const unsigned ssp = two_qubit(synthesize_ssp(s), GateSet::ZZNative);
  const unsigned gr = two_qubit(synthesize_gr(s), GateSet::ZZNative);
  const RotationPlan plan = plan_rotations(s.configs());
  std::vector<Control> all;
  for (const auto &e : plan.entries) all.insert(all.end(), e.controls.begin(), e.controls.end());
  o.require(ssp >= 3 && ssp <= 7, "SSP count");
  o.require(gr >= 0.7 * 44 && gr <= 1.3 * 44, "GR count");
  o.require(all.size() == 1 && all[0].qubit == 1 && all[0].state, "control");
  o.detail << "SSP " << ssp << " (5+-2), GR " << gr << " (44+-30%), controls "
           << all.size();
  if (all.size() == 1) o.detail << " on q" << all[0].qubit << "=" << all[0].state;
}

void ac3(Outcome &o) {
  const char *rows[] = {"000", "020", "040", "060", "080", "090"};
  const unsigned ssp_ref[] = {17, 17, 17, 17, 13, 11};
  const unsigned gr_ref[] = {128, 128, 128, 128, 40, 32};
  for (int r = 0; r < 6; ++r) {
    const StateSpec s = load(std::string("table1_") + rows[r] + ".txt");
    const Circuit gr = compile(synthesize_gr(s), GateSet::ZZNative);
    const Circuit ssp = compile(synthesize_ssp(s), GateSet::ZZNative);
    const unsigned g = count_resources(gr).two_qubit_total;
    const unsigned p = count_resources(ssp).two_qubit_total;
    const double f = std::min(check_state(gr, s).fidelity, check_state(ssp, s).fidelity);
    o.require(f >= 1 - 1e-9, std::string("fidelity row ") + rows[r]);
    o.require(p >= 0.7 * ssp_ref[r] && p <= 1.3 * ssp_ref[r], std::string("SSP row ") + rows[r]);
    o.require(g >= 0.7 * gr_ref[r] && g <= 1.3 * gr_ref[r], std::string("GR row ") + rows[r]);
    o.require(p < g, std::string("SSP<GR row ") + rows[r]);
    o.detail << rows[r] << ": SSP " << p << "/" << ssp_ref[r] << " GR " << g << "/"
             << gr_ref[r] << (r < 5 ? "; " : "");
  }
}

void ac4(Outcome &o) {
  const StateSpec s = load("fig7.txt");
  const Circuit raw = synthesize_ssp(s);
  const unsigned zz = two_qubit(raw, GateSet::ZZNative);
  const unsigned cx = two_qubit(raw, GateSet::CXNative);
  Circuit g4(4);
  g4.add(Gate::g4(0, 1, 2, 3, 0.37));
  const unsigned t = two_qubit(g4, GateSet::ZZNative);
  o.require(zz >= 2 && zz <= 4, "SSP count");
  o.require(check_state(compile(raw, GateSet::ZZNative), s).fidelity >= 1 - 1e-9, "fidelity");
  o.require(t == 14, "G4 template");
  o.detail << "SSP two-qubit ZZ " << zz << ", CX " << cx << "; G4 template " << t;
}

void ac5(Outcome &o) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  double worst = 0;
  auto against = [&](const Gate &g, unsigned n) {
    Circuit c(n);
    c.add(g);
    const oracle::Mat want = oracle::gate_matrix(g, n);
    for (GateSet gs : {GateSet::ZZNative, GateSet::CXNative}) {
      worst = std::max(worst, oracle::phase_distance(oracle::circuit_matrix(compile(c, gs)), want));
    }
  };
  for (int t = 0; t < 10; ++t) {
    against(Gate::g2(0, 1, u(rng)), 2);
    against(Gate::g2(2, 0, u(rng)), 3);
    against(Gate::g4(0, 1, 2, 3, u(rng)), 4);
    against(Gate::g4(3, 1, 0, 4, u(rng)), 5);
    against(control_wrap(Gate::g2(1, 3, u(rng)), {{0, true}}), 4);
    against(control_wrap(Gate::g2(0, 4, u(rng)), {{1, false}, {2, true}, {3, true}}), 5);
    against(control_wrap(Gate::g4(0, 2, 3, 5, u(rng)), {{1, true}, {4, false}}), 6);
    against(control_wrap(Gate::ry(2, u(rng)), {{0, false}, {1, true}}), 3);
    against(control_wrap(Gate::swap(0, 2), {{1, true}, {3, false}}), 4);
  }
  against(Gate::cnot(0, 1), 2);
  against(Gate::cnot(2, 0), 3);
  against(Gate::zzmax(1, 2), 3);
  against(Gate::swap(0, 1), 2);

  // Excitation rank three: the gadget rotates exactly span{a, b}.
  const OnConfig a = OnConfig::parse("1110000"), b = OnConfig::parse("0000111");
  const RotationPlan plan = plan_rotations({a, b});
  o.require(plan.entries.size() == 1 && plan.entries[0].gadget.has_value(), "gadget used");
  for (int t = 0; t < 5; ++t) {
    const double th = u(rng);
    const Circuit c = gr_circuit(plan, {Angle(th)}, false);
    const oracle::Mat m = oracle::circuit_matrix(c);
    oracle::Vec ca = oracle::Vec::Zero(m.rows()), cb = ca;
    ca(a.index()) = std::cos(th);
    ca(b.index()) = std::sin(th);
    cb(a.index()) = -std::sin(th);
    cb(b.index()) = std::cos(th);
    worst = std::max(worst, (m.col(a.index()) - ca).cwiseAbs().maxCoeff());
    worst = std::max(worst, (m.col(b.index()) - cb).cwiseAbs().maxCoeff());
    for (GateSet gs : {GateSet::ZZNative, GateSet::CXNative}) {
      worst = std::max(worst, oracle::phase_distance(oracle::circuit_matrix(compile(c, gs)), m));
    }
  }
  o.require(worst < 1e-10, "deviation");
  o.detail << "max deviation " << fmt(worst);
}

void ac6(Outcome &o) {
  std::mt19937_64 rng(66);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> cu(-1, 1);
  double mom = 0, eig = 0, two = 0;
  for (int t = 0; t < 200; ++t) {
    const unsigned n = 1 + t % 6;
    PauliSum h(n);
    std::uniform_int_distribution<int> l(0, 3);
    for (int k = 0; k < 8; ++k) {
      std::string w(n, 'I');
      for (char &c : w) c = "IXYZ"[l(rng)];
      h.add(PauliWord::parse(w), cu(rng));
    }
    if (h.empty()) h.add(PauliWord::identity(n), 0.5);
    const oracle::Mat hm = oracle::sum_matrix(h);
    Amplitudes amp(std::size_t{1} << n);
    for (auto &x : amp) x = cplx(nd(rng), nd(rng));
    const StateVector psi = StateVector::from_amplitudes(n, amp);
    oracle::Vec v(psi.dim());
    for (std::size_t i = 0; i < psi.dim(); ++i) v(i) = psi[i];
    const auto mu = moments(psi, h, 4);
    oracle::Vec w = v;
    for (int k = 0; k < 4; ++k) {
      w = hm * w;
      mom = std::max(mom, std::abs(mu[k] - v.dot(w).real()));
    }
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(hm);
    const oracle::Vec g = es.eigenvectors().col(0);
    const StateVector gs = StateVector::from_amplitudes(n, Amplitudes(g.data(), g.data() + g.size()));
    const CumulantSet c = cumulants(moments(gs, h, 4));
    for (int k = 1; k < 4; ++k) eig = std::max(eig, std::abs(c.c[k]));
    // Two-eigenvector support with a real gap.
    const auto &ev = es.eigenvalues();
    Eigen::Index j = ev.size() - 1;
    if (ev(j) - ev(0) < 1e-3) continue;
    const oracle::Vec mix = 0.7 * g + std::sqrt(0.51) * es.eigenvectors().col(j);
    const StateVector ms =
        StateVector::from_amplitudes(n, Amplitudes(mix.data(), mix.data() + mix.size()));
    two = std::max(two, std::abs(qcm4(cumulants(moments(ms, h, 4))) - ev(0)));
  }
  // H = Z on sqrt(0.9)|0> + sqrt(0.1)|1>.
  PauliSum z(1);
  z.add(PauliWord::parse("Z"), 1.0);
  const CumulantSet wc =
      cumulants(moments(StateVector::from_amplitudes(1, {std::sqrt(0.9), std::sqrt(0.1)}), z, 4));
  const double want[] = {0.8, 0.36, -0.576, 0.6624};
  double worked = 0;
  for (int k = 0; k < 4; ++k) worked = std::max(worked, std::abs(wc.c[k] - want[k]));
  worked = std::max({worked, std::abs(qcm4(wc) + 1.0), std::abs(cmx2(wc) - 1.025)});
  bool guard = false;
  try {
    qcm4(CumulantSet{{0.0, 1.0, 0.0, 1.0}});
  } catch (const DegenerateCumulants &) {
    guard = true;
  }
  o.require(mom < 1e-9, "moments");
  o.require(eig < 1e-9, "eigenstate cumulants");
  o.require(two < 1e-9, "QCM4 two-state");
  o.require(worked < 1e-12, "worked example");
  o.require(guard, "guard");
  o.detail << "moments " << fmt(mom) << ", eigenstate " << fmt(eig) << ", QCM4 two-state "
           << fmt(two) << ", worked " << fmt(worked) << ", guard " << (guard ? "raised" : "silent");
}

void ac7(Outcome &o) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> nd;
  double recover = 0;
  bool monotone = true, faster = true, rejected = true;
  std::ostringstream runs;
  for (unsigned n : {4u, 6u, 8u}) {
    const PauliSum h = oracle::random_pauli_sum(rng, n, 3 * n);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::sum_matrix(h));
    const std::size_t d = std::size_t{1} << n;
    const double e0 = es.eigenvalues()(0), range = es.eigenvalues()(d - 1) - e0;
    const double tau = kPi / range;
    const oracle::Vec g = es.eigenvectors().col(0);
    auto as_state = [&](const oracle::Vec &v) {
      return StateVector::from_amplitudes(n, Amplitudes(v.data(), v.data() + v.size()));
    };
    recover = std::max(recover, std::abs(qcels_estimate(qcels_series(as_state(g), h, tau, 8)) - e0));
    try {
      qcels_series(as_state(g), h, 1.01 * 2 * kPi / range, 8);
      rejected = false;
    } catch (const TauBoundViolation &) {
    }
    // Orthogonal remainder shared by every fidelity.
    oracle::Vec r(d);
    for (std::size_t i = 0; i < d; ++i) r(i) = oracle::cplx(nd(rng), nd(rng));
    r -= g * g.dot(r);
    r.normalize();
    auto error_at = [&](double f, unsigned steps) {
      const oracle::Vec v = std::sqrt(f) * g + std::sqrt(1 - f) * r;
      return std::abs(qcels_estimate(qcels_series(as_state(v), h, tau, steps)) - e0);
    };
    const unsigned fixed = 16;
    const double e67 = error_at(0.67, fixed), e95 = error_at(0.95, fixed),
                 e999 = error_at(0.999, fixed);
    monotone = monotone && e67 > e95 && e95 > e999;
    auto steps_to = [&](double f) {
      for (unsigned s = 2; s <= 400; ++s) {
        if (error_at(f, s) <= 1e-3 * range) return s;
      }
      return 401u;
    };
    const unsigned s95 = steps_to(0.95), s999 = steps_to(0.999);
    faster = faster && s999 < s95 && s999 <= 400;
    runs << " n=" << n << " err(T=" << fmt(tau * (fixed - 1)) << ") " << fmt(e67) << ">"
         << fmt(e95) << ">" << fmt(e999) << " Tmax 0.95:" << fmt(tau * (s95 - 1))
         << " 0.999:" << fmt(tau * (s999 - 1)) << ";";
  }
  o.require(recover < 1e-10, "eigenstate recovery");
  o.require(monotone, "error monotone in fidelity");
  o.require(faster, "0.999 needs less time than 0.95");
  o.require(rejected, "tau bound");
  o.detail << "recovery " << fmt(recover) << ";" << runs.str();
}

void ac8(Outcome &o) {
  std::mt19937_64 rng(88);
  const std::vector<std::uint64_t> span = {0b1100, 0b1001, 0b0110, 0b0011};
  std::vector<OnConfig> cfg;
  for (auto x : span) cfg.emplace_back(4, x);
  std::uniform_real_distribution<double> gap(-2, 4);
  double worst = 0, agree = 0;
  for (int t = 0; t < 50; ++t) {
    const PauliSum h = oracle::decompose(oracle::span_hamiltonian(rng, 4, span, gap(rng)), 4);
    const double exact = subspace_diag(h, cfg).values.front();
    const double gr = vqe_minimize(cfg, PrepMethod::GR, h).energy;
    const double ssp = vqe_minimize(cfg, PrepMethod::SSP, h).energy;
    worst = std::max({worst, std::abs(gr - exact), std::abs(ssp - exact)});
    agree = std::max(agree, std::abs(gr - ssp));
  }
  o.require(worst < 1e-6, "subspace energy");
  o.require(agree < 1e-6, "GR vs SSP");
  o.detail << "50 Hamiltonians, worst |E-E0| " << fmt(worst) << ", |GR-SSP| " << fmt(agree);
}

void ac9(Outcome &o) {
  std::mt19937_64 rng(99);
  const std::vector<std::uint64_t> span = {0b1100, 0b1001, 0b0110, 0b0011};
  std::vector<OnConfig> cfg;
  for (auto x : span) cfg.emplace_back(4, x);
  const PauliSum h = oracle::decompose(oracle::span_hamiltonian(rng, 4, span, 10.0), 4);
  const Spectrum sp = subspace_diag(h, cfg, true);
  StateSpec g{4, {}};
  for (int k = 0; k < 4; ++k) g.entries.push_back({sp.vectors->col(0)(k).real(), cfg[k]});
  const Circuit u = synthesize_gr(g, {.include_reference = false});
  const OnConfig hf = OnConfig::parse("1100");
  SceomOptions opts;
  opts.both_triangles = true;
  const MMatrix m = sceom_m_matrix(h, hf, cisd_excitations(2, 2), u, opts);
  const auto e = sceom_energies(m);
  double eig = 0, recon = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    eig = std::max(eig, std::abs(e[k] - (sp.values[k + 1] - sp.values[0])));
  }
  for (std::size_t i = 0; i < m.configs.size(); ++i) {
    for (std::size_t j = 0; j < m.configs.size(); ++j) {
      const StateVector a = run_circuit(u, StateVector::basis(m.configs[i]));
      const StateVector b = run_circuit(u, StateVector::basis(m.configs[j]));
      double direct = m.signs[i] * m.signs[j] * matrix_element(a, h, b).real();
      if (i == j) direct -= m.e_gr;
      recon = std::max(recon, std::abs(m.m(i, j) - direct));
    }
  }
  o.require(e.size() == 3 && eig < 1e-6, "excitation energies");
  o.require(m.asymmetry < 1e-9, "symmetry");
  o.require(recon < 1e-9, "reconstruction");

  // Resource structure on eight spin orbitals, four electrons.
  const auto res = sceom_resources(hartree_fock(8, 4), cisd_excitations(4, 4));
  bool elementwise = true;
  std::map<unsigned, std::pair<double, int>> by_h;
  for (const ElementResources &r : res) {
    elementwise = elementwise && r.ssp_two_qubit <= r.gr_two_qubit;
    by_h[r.hamming].first += r.gr_two_qubit;
    by_h[r.hamming].second += 1;
  }
  bool monotone = true;
  double prev = -1;
  std::ostringstream trend;
  for (const auto &[hd, acc] : by_h) {
    const double mean = acc.first / acc.second;
    monotone = monotone && mean >= prev;
    prev = mean;
    trend << " h" << hd << ":" << fmt(mean);
  }
  o.require(elementwise, "SSP <= GR per element");
  o.require(monotone, "GR trend in Hamming distance");
  o.detail << "energies " << fmt(eig) << ", asymmetry " << fmt(m.asymmetry) << ", identity "
           << fmt(recon) << "; " << res.size() << " elements, mean GR two-qubit by distance"
           << trend.str();
}

int cli(std::vector<std::string> args, nlohmann::json &rep) {
  args.insert(args.begin(), "mcprep");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  rep = nlohmann::json::parse(out.str());
  return code;
}

void ac10(Outcome &o) {
  std::mt19937_64 rng(1010);
  double zero = 0, perm = 0;
  for (int t = 0; t < 50; ++t) {
    const StateSpec s = random_spec(rng, 3 + t % 6, 2 + t % 7);
    const Circuit a = gr_ansatz(s.configs());
    std::map<std::string, double> bind;
    for (const auto &p : a.parameters()) bind[p] = 0.0;
    const StateVector out = run_circuit(bind_parameters(a, bind));
    for (std::size_t i = 0; i < out.dim(); ++i) {
      const cplx want = i == s.entries[0].config.index() ? cplx(1) : cplx(0);
      zero = std::max(zero, std::abs(out[i] - want));
    }
    StateSpec shuffled = s;
    std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
    const StateVector x = run_circuit(synthesize_ssp(s));
    const StateVector y = run_circuit(synthesize_ssp(shuffled));
    for (std::size_t i = 0; i < x.dim(); ++i) perm = std::max(perm, std::abs(x[i] - y[i]));
  }

  // Every synth run carries a passing verification and a file that
  // verifies again when read back.
  const fs::path dir = fs::temp_directory_path() / ("mcprep_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  std::vector<std::string> specs;
  for (const auto &e : fs::directory_iterator(kData)) specs.push_back(e.path().string());
  for (int t = 0; t < 20; ++t) {
    const std::string p = (dir / ("rand" + std::to_string(t) + ".txt")).string();
    write_file(p, render_state_spec(random_spec(rng, 4 + t % 5, 2 + t % 6)));
    specs.push_back(p);
  }
  int runs = 0, verified = 0;
  for (const std::string &sp : specs) {
    for (const char *method : {"gr", "ssp"}) {
      const std::string out = (dir / "c.json").string();
      fs::remove(out);
      nlohmann::json rep;
      const int code = cli({"synth", "--method", method, "--spec", sp, "--out", out}, rep);
      ++runs;
      const bool self = code == kExitOk && rep.contains("verification") &&
                        rep["verification"]["passed"] == true && fs::exists(out);
      const Check back = check_state(circuit_from_json(nlohmann::json::parse(read_file(out))),
                                     parse_state_spec(read_file(sp)).spec);
      if (self && back.fidelity >= 1 - 1e-9 && back.support <= 1e-10) ++verified;
    }
  }
  fs::remove_all(dir);
  o.require(zero < 1e-14, "zero angles");
  o.require(perm < 1e-12, "SSP permutation");
  o.require(verified == runs, "synth self-verify");
  o.detail << "zero-angle " << fmt(zero) << ", permutation " << fmt(perm) << ", synth "
           << verified << "/" << runs << " self-verified";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, void (*)(Outcome &)>> all = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
      {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}};
  const std::map<std::string, double> budget = {{"AC1", 120}, {"AC7", 60}};
  int failed = 0;
  for (const auto &[name, fn] : all) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(o);
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget.count(name) && secs > budget.at(name)) {
      o.pass = false;
      o.detail << "; over the " << budget.at(name) << " s budget";
    }
    failed += !o.pass;
    std::cout << name << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << o.detail.str() << " ["
              << fmt(secs) << " s]" << std::endl;
  }
  std::cout << "note: one-control-per-rotation counterexample: "
            << (counterexample.empty() ? "none found" : counterexample) << std::endl;
  return failed;
}
