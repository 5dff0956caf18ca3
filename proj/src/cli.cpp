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

#include "mcprep/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>

#include "mcprep/algorithms.hpp"
#include "mcprep/compile.hpp"
#include "mcprep/givens.hpp"
#include "mcprep/io.hpp"
#include "mcprep/ssp.hpp"

namespace mcprep {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char *kSchema = "mcprep/1";
constexpr double kFidelityGate = 1e-9;
constexpr double kLeakageGate = 1e-10;

struct Verification {
  double fidelity = 0.0;
  double support_leakage = 0.0;
  double weight_leakage = 0.0;
  bool passed = false;
};

Verification verify_against(const Circuit &c, const StateSpec &spec) {
  if (c.n_qubits() != spec.n_qubits) {
    throw std::invalid_argument("circuit and state widths differ");
  }
  const StateVector psi = run_circuit(c);
  Verification v;
  v.fidelity = fidelity_up_to_phase(psi, StateVector::from_spec(spec));
  v.support_leakage = support_leakage(psi, spec.configs());
  v.weight_leakage = weight_leakage(psi, spec.entries.front().config.weight());
  v.passed = v.fidelity >= 1 - kFidelityGate &&
             v.support_leakage <= kLeakageGate &&
             v.weight_leakage <= kLeakageGate;
  return v;
}

json to_json(const Verification &v) {
  return {{"fidelity", v.fidelity},
          {"support_leakage", v.support_leakage},
          {"weight_leakage", v.weight_leakage},
          {"weight_sector_ok", v.weight_leakage <= kLeakageGate},
          {"passed", v.passed}};
}

json to_json(const ResourceCount &r) {
  return {{"gates", r.tallies},
          {"total", r.total},
          {"two_qubit", r.two_qubit_total},
          {"multi_qubit", r.multi_qubit_total},
          {"depth", r.depth},
          {"zzmax_count", r.count("ZZMax")},
          {"cnot_count", r.count("CNOT")}};
}

json controls_json(const std::vector<Control> &cs) {
  json a = json::array();
  for (const Control &k : cs) a.push_back({k.qubit, k.state ? 1 : 0});
  return a;
}

json angles_json(const std::vector<double> &rad) {
  std::vector<double> pi;
  for (double a : rad) pi.push_back(a / kPi);
  return {{"radians", rad}, {"units_of_pi", pi}};
}

json spec_json(const StateSpec &s) {
  json a = json::array();
  for (const SpecEntry &e : s.entries) a.push_back({e.coefficient, e.config.str()});
  return a;
}

StateSpec load_spec(const std::string &path) {
  return parse_state_spec(read_file(path)).spec;
}

Circuit load_circuit(const std::string &path) {
  return circuit_from_json(json::parse(read_file(path)));
}

PauliSum load_ham(const std::string &path) {
  return parse_hamiltonian(read_file(path));
}

json plan_json(const StateSpec &spec, PrepMethod m) {
  json j;
  if (m == PrepMethod::GR) {
    const RotationPlan plan = plan_rotations(spec.configs());
    std::vector<double> ang = angles_from_coefficients(spec.coefficients());
    j["reference"] = plan.reference.str();
    j["external_controls"] = plan.external_control_count();
    json rows = json::array();
    for (std::size_t e = 0; e < plan.entries.size(); ++e) {
      const RotationEntry &r = plan.entries[e];
      json row{{"partner", r.partner.str()},
               {"targets", r.targets},
               {"order", r.order},
               {"controls", controls_json(r.controls)},
               {"theta", ang[e]},
               {"theta_units_of_pi", ang[e] / kPi}};
      if (r.gadget) {
        row["gadget"] = {{"swaps", r.gadget->swaps.size()},
                         {"k_matches_ref", r.gadget->k_matches_ref},
                         {"minority_central", r.gadget->minority_central},
                         {"safety_fallback", r.gadget->safety_fallback}};
      }
      rows.push_back(row);
    }
    j["rotations"] = rows;
    j["angles"] = angles_json(ang);
  } else {
    const SspPlan plan = plan_ssp(spec);
    j["survivor"] = plan.survivor.str();
    json rows = json::array();
    std::vector<double> ang;
    for (const MergeStep &s : plan.steps) {
      rows.push_back({{"x1", s.x1.str()},
                      {"x2", s.x2.str()},
                      {"pivot", s.pivot},
                      {"cnot_targets", s.cnot_targets},
                      {"controls", controls_json(s.controls)},
                      {"angle", s.angle}});
      ang.push_back(s.angle);
    }
    j["merges"] = rows;
    j["angles"] = angles_json(ang);
  }
  return j;
}

// One synth run; returns the report and whether it verified.
std::pair<json, bool> synth_one(const std::string &spec_path, PrepMethod m,
                                GateSet gs, const std::string &out_path) {
  json r{{"spec", spec_path},
         {"method", method_name(m)},
         {"gateset", gateset_name(gs)}};
  const ParsedSpec ps = parse_state_spec(read_file(spec_path));
  const StateSpec &spec = ps.spec;
  r["n_qubits"] = spec.n_qubits;
  r["state"] = spec_json(spec);
  const Circuit raw = m == PrepMethod::GR ? synthesize_gr(spec) : synthesize_ssp(spec);
  const Circuit c = compile(raw, gs);
  r["plan"] = plan_json(spec, m);
  r["resources"] = to_json(count_resources(c));
  r["resources_uncompiled"] = to_json(count_resources(raw));
  r["zzmax_count"] = count_resources(c).count("ZZMax");
  const Verification v = verify_against(c, spec);
  r["verification"] = to_json(v);
  if (v.passed && !out_path.empty()) {
    write_file(out_path, circuit_to_json(c).dump(1) + "\n");
    r["out"] = out_path;
  } else if (!v.passed) {
    r["out"] = nullptr;
  }
  return {r, v.passed};
}

struct Args {
  std::string method = "ssp", spec, spec_dir, gateset = "zz", out;
  std::string circuit, ham, state, hf, excitations = "cisd", ansatz, prep = "ssp";
  unsigned order = 4, n = 0, restarts = 3;
  std::optional<unsigned> sector;
  std::uint64_t seed = 20240611;
  double tau = 0.0;
  bool both = false;
};

std::vector<double> spectrum_values(const PauliSum &h,
                                    std::optional<unsigned> sector) {
  if (sector) {
    return subspace_diag(h, weight_sector(h.n_qubits(), *sector)).values;
  }
  return exact_spectrum(h).values;
}

int cmd_synth(const Args &a, json &rep) {
  const PrepMethod m = method_from_name(a.method);
  const GateSet gs = gateset_from_name(a.gateset);
  if (a.spec_dir.empty()) {
    auto [r, ok] = synth_one(a.spec, m, gs, a.out);
    rep.update(r);
    return ok ? kExitOk : kExitVerifyFailed;
  }
  std::vector<fs::path> files;
  for (const auto &e : fs::directory_iterator(a.spec_dir)) {
    if (e.is_regular_file()) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (!a.out.empty()) fs::create_directories(a.out);
  json all = json::array();
  bool ok = true;
  for (const fs::path &p : files) {
    std::string out;
    if (!a.out.empty()) {
      out = (fs::path(a.out) / p.stem()).string() + ".circuit.json";
    }
    try {
      auto [r, good] = synth_one(p.string(), m, gs, out);
      ok = ok && good;
      all.push_back(r);
    } catch (const std::exception &e) {
      ok = false;
      all.push_back({{"spec", p.string()}, {"error", e.what()}});
    }
  }
  rep["reports"] = all;
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Args &a, json &rep) {
  const Circuit c = load_circuit(a.circuit);
  const StateSpec spec = load_spec(a.spec);
  const Verification v = verify_against(c, spec);
  rep["verification"] = to_json(v);
  rep["resources"] = to_json(count_resources(c));
  return v.passed ? kExitOk : kExitVerifyFailed;
}

int cmd_resources(const Args &a, json &rep) {
  const Circuit c = load_circuit(a.circuit);
  rep["n_qubits"] = c.n_qubits();
  rep["resources"] = to_json(count_resources(c));
  rep["parameters"] = c.parameters();
  for (GateSet gs : {GateSet::ZZNative, GateSet::CXNative}) {
    if (c.parameters().empty()) {
      rep["compiled"][gateset_name(gs)] = to_json(count_resources(compile(c, gs)));
    }
  }
  return kExitOk;
}

int cmd_vqe(const Args &a, json &rep) {
  const StateSpec spec = load_spec(a.spec);
  const PauliSum h = load_ham(a.ham);
  if (h.n_qubits() != spec.n_qubits) {
    throw std::invalid_argument("Hamiltonian and state widths differ");
  }
  VqeOptions o;
  o.restarts = a.restarts;
  o.seed = a.seed;
  const VqeResult r = vqe_minimize(spec.configs(), method_from_name(a.method), h, o);
  const double exact = subspace_diag(h, spec.configs()).values.front();
  rep["method"] = a.method;
  rep["configs"] = spec_json(spec);
  rep["energy"] = r.energy;
  rep["theta"] = r.theta;
  rep["converged"] = r.converged;
  rep["iterations"] = r.iterations;
  rep["evaluations"] = r.evaluations;
  rep["subspace_ground"] = exact;
  rep["energy_error"] = r.energy - exact;
  rep["support_leakage"] = support_leakage(r.state, spec.configs());
  // Variational bound and support confinement are the gates.
  const bool ok = r.energy >= exact - 1e-9 &&
                  support_leakage(r.state, spec.configs()) <= kLeakageGate;
  rep["passed"] = ok;
  return ok ? kExitOk : kExitVerifyFailed;
}

StateVector load_state(const Args &a) {
  if (!a.circuit.empty()) return run_circuit(load_circuit(a.circuit));
  return StateVector::from_spec(load_spec(a.state));
}

int cmd_moments(const Args &a, json &rep) {
  const PauliSum h = load_ham(a.ham);
  const StateVector psi = load_state(a);
  if (psi.n_qubits() != h.n_qubits()) {
    throw std::invalid_argument("Hamiltonian and state widths differ");
  }
  const std::vector<double> mu = moments(psi, h, a.order);
  const CumulantSet c = cumulants(mu);
  rep["moments"] = mu;
  rep["cumulants"] = c.c;
  if (c.c.size() >= 4) {
    try {
      rep["qcm4"] = qcm4(c);
    } catch (const DegenerateCumulants &e) {
      rep["qcm4"] = nullptr;
      rep["qcm4_diagnostic"] = e.what();
    }
  }
  if (c.c.size() >= 3) {
    try {
      rep["cmx2"] = cmx2(c);
    } catch (const ZeroThirdCumulant &e) {
      rep["cmx2"] = nullptr;
      rep["cmx2_diagnostic"] = e.what();
    }
  }
  rep["near_eigenstate"] = c.c.size() >= 2 && c[2] < kNearEigenstate;
  return kExitOk;
}

int cmd_qcels(const Args &a, json &rep) {
  const PauliSum h = load_ham(a.ham);
  const StateVector psi = load_state(a);
  const QcelsSeries s = qcels_series(psi, h, a.tau, a.n);
  const double e = qcels_estimate(s);
  rep["tau"] = a.tau;
  rep["n"] = a.n;
  rep["t_max"] = a.tau * (a.n - 1);
  rep["estimate"] = e;
  json z = json::array();
  for (cplx v : s.z) z.push_back({v.real(), v.imag()});
  rep["series"] = z;
  if (h.n_qubits() <= kMaxDenseQubits) {
    const double e0 = spectral_range(h).first;
    rep["exact_ground"] = e0;
    rep["energy_error"] = e - e0;
  }
  return kExitOk;
}

int cmd_sceom(const Args &a, json &rep) {
  const PauliSum h = load_ham(a.ham);
  const OnConfig hf = OnConfig::parse(a.hf);
  std::vector<ExcitationOp> ex;
  if (a.excitations == "cisd") {
    if (hf.size() % 2 || hf != hartree_fock(hf.size(), hf.weight())) {
      throw std::invalid_argument("cisd needs a closed-shell reference");
    }
    ex = cisd_excitations(hf.size() / 2, hf.weight());
  } else {
    ex = parse_excitations(read_file(a.excitations));
  }
  const Circuit u = a.ansatz.empty() ? Circuit(hf.size()) : load_circuit(a.ansatz);
  SceomOptions o;
  o.prep = method_from_name(a.prep);
  o.both_triangles = a.both;
  const MMatrix m = sceom_m_matrix(h, hf, ex, u, o);
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.m.rows(); ++i) {
    std::vector<double> row(m.m.cols());
    for (Eigen::Index j = 0; j < m.m.cols(); ++j) row[j] = m.m(i, j);
    rows.push_back(row);
  }
  std::vector<std::string> kets;
  for (const OnConfig &x : m.configs) kets.push_back(x.str());
  rep["e_ground"] = m.e_gr;
  rep["kets"] = kets;
  rep["signs"] = m.signs;
  rep["m"] = rows;
  rep["asymmetry"] = m.asymmetry;
  rep["excitation_energies"] = sceom_energies(m);
  json res = json::array();
  for (const ElementResources &r : sceom_resources(hf, ex)) {
    res.push_back({{"i", r.i}, {"j", r.j}, {"hamming", r.hamming},
                   {"gr_two_qubit", r.gr_two_qubit},
                   {"ssp_two_qubit", r.ssp_two_qubit},
                   {"gr_total", r.gr_total}, {"ssp_total", r.ssp_total}});
  }
  rep["elements"] = res;
  return kExitOk;
}

int cmd_spectrum(const Args &a, json &rep) {
  const PauliSum h = load_ham(a.ham);
  const std::vector<double> v = spectrum_values(h, a.sector);
  rep["n_qubits"] = h.n_qubits();
  if (a.sector) rep["sector"] = *a.sector;
  rep["eigenvalues"] = v;
  rep["min"] = v.front();
  rep["max"] = v.back();
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Sparse multi-configuration state preparation toolkit"};
  app.require_subcommand(1);
  Args a;
  const std::vector<std::string> methods{"gr", "ssp"};

  auto *synth = app.add_subcommand("synth", "Synthesize a preparation circuit");
  synth->add_option("--method", a.method)->check(CLI::IsMember(methods));
  auto *spec_opt = synth->add_option("--spec", a.spec, "State file");
  auto *dir_opt = synth->add_option("--spec-dir", a.spec_dir, "Batch directory");
  spec_opt->excludes(dir_opt);
  synth->add_option("--gateset", a.gateset)->check(CLI::IsMember({"zz", "cx"}));
  synth->add_option("--out", a.out, "Circuit JSON (directory in batch mode)");

  auto *verify = app.add_subcommand("verify", "Check a circuit against a state");
  verify->add_option("--circuit", a.circuit)->required();
  verify->add_option("--spec", a.spec)->required();

  auto *resources = app.add_subcommand("resources", "Count gates");
  resources->add_option("--circuit", a.circuit)->required();

  auto *vqe = app.add_subcommand("vqe", "Minimize over a configuration span");
  vqe->add_option("--spec", a.spec)->required();
  vqe->add_option("--ham", a.ham)->required();
  vqe->add_option("--method", a.method)->check(CLI::IsMember(methods));
  vqe->add_option("--restarts", a.restarts);
  vqe->add_option("--seed", a.seed);

  auto state_opts = [&](CLI::App *s) {
    auto *st = s->add_option("--state", a.state, "State file");
    auto *ci = s->add_option("--circuit", a.circuit, "Circuit JSON");
    st->excludes(ci);
    s->add_option("--ham", a.ham)->required();
  };
  auto *mom = app.add_subcommand("moments", "Moments, cumulants, QCM4, CMX2");
  state_opts(mom);
  mom->add_option("--order", a.order)->check(CLI::Range(1, 8));

  auto *qcels = app.add_subcommand("qcels", "Phase-estimation energy fit");
  state_opts(qcels);
  qcels->add_option("--tau", a.tau)->required();
  qcels->add_option("--n", a.n)->required()->check(CLI::PositiveNumber);

  auto *sceom = app.add_subcommand("sceom", "Excited states from the M matrix");
  sceom->add_option("--ham", a.ham)->required();
  sceom->add_option("--hf", a.hf)->required();
  sceom->add_option("--excitations", a.excitations);
  sceom->add_option("--ansatz", a.ansatz, "Ground-state circuit JSON");
  sceom->add_option("--prep", a.prep)->check(CLI::IsMember(methods));
  sceom->add_flag("--both-triangles", a.both);

  auto *spectrum = app.add_subcommand("spectrum", "Exact eigenvalues");
  spectrum->add_option("--ham", a.ham)->required();
  spectrum->add_option("--sector", a.sector, "Hamming weight");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  CLI::App *cmd = app.get_subcommands().front();
  json rep{{"schema", kSchema}, {"command", cmd->get_name()}};
  int code = kExitOk;
  try {
    if (cmd == synth) {
      if (a.spec.empty() && a.spec_dir.empty()) {
        throw std::invalid_argument("synth needs --spec or --spec-dir");
      }
      code = cmd_synth(a, rep);
    } else if (cmd == verify) {
      code = cmd_verify(a, rep);
    } else if (cmd == resources) {
      code = cmd_resources(a, rep);
    } else if (cmd == vqe) {
      code = cmd_vqe(a, rep);
    } else if (cmd == mom || cmd == qcels) {
      if (a.state.empty() == a.circuit.empty()) {
        throw std::invalid_argument("give exactly one of --state or --circuit");
      }
      code = cmd == mom ? cmd_moments(a, rep) : cmd_qcels(a, rep);
    } else if (cmd == sceom) {
      code = cmd_sceom(a, rep);
    } else {
      code = cmd_spectrum(a, rep);
    }
  } catch (const std::exception &e) {
    err << "mcprep " << cmd->get_name() << ": " << e.what() << '\n';
    rep["error"] = e.what();
    code = kExitBadInput;
  }
  rep["ok"] = code == kExitOk;
  out << rep.dump(2) << '\n';
  return code;
}

}  // namespace mcprep
