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

#include "mcprep/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace mcprep {

namespace {

using nlohmann::json;

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

// Non-empty lines split on whitespace, comments removed.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::string s(text);
  // Typographic minus signs from pasted tables.
  for (std::size_t p; (p = s.find("\xE2\x88\x92")) != std::string::npos;) {
    s.replace(p, 3, "-");
  }
  std::istringstream in(s);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    Line l{n, {}};
    for (std::string f; ls >> f;) l.fields.push_back(f);
    if (!l.fields.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

double parse_real(const std::string &s, std::size_t line) {
  if (s.find_first_of("ijIJ(") != std::string::npos &&
      s.find_first_of("nN") == std::string::npos) {
    fail(line, "coefficient '" + s + "' is not real");
  }
  char *end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') {
    fail(line, "bad coefficient '" + s + "'");
  }
  if (!std::isfinite(v)) fail(line, "coefficient '" + s + "' is not finite");
  return v;
}

std::string fmt17(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json angle_to_json(const Angle &a) {
  if (!a.is_symbolic()) return a.value() / kPi;
  const double k = a.scale() / kPi;
  if (std::abs(k - 1.0) < 1e-15) return a.name();
  return fmt17(k) + "*" + a.name();
}

Angle angle_from_json(const json &j) {
  if (j.is_number()) return Angle(j.get<double>() * kPi);
  if (!j.is_string()) throw ParseError("angle must be a number or a string");
  const std::string s = j.get<std::string>();
  const auto star = s.find('*');
  if (star == std::string::npos) return Angle::symbol(s, kPi);
  char *end = nullptr;
  const std::string k = s.substr(0, star);
  const double v = std::strtod(k.c_str(), &end);
  if (end == k.c_str() || *end != '\0' || star + 1 >= s.size()) {
    throw ParseError("bad symbolic angle '" + s + "'");
  }
  return Angle::symbol(s.substr(star + 1), v * kPi);
}

}  // namespace

PauliSum parse_hamiltonian(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  if (lines.empty()) throw ParseError("Hamiltonian file has no terms");
  unsigned n = 0;
  std::vector<std::pair<PauliWord, double>> terms;
  for (const Line &l : lines) {
    if (l.fields.size() != 2) fail(l.number, "expected '<coefficient> <word>'");
    const double c = parse_real(l.fields[0], l.number);
    PauliWord w;
    try {
      w = PauliWord::parse(l.fields[1]);
    } catch (const std::exception &e) {
      fail(l.number, e.what());
    }
    if (n == 0) n = w.size();
    if (w.size() != n) {
      fail(l.number, "word length " + std::to_string(w.size()) +
                         " differs from " + std::to_string(n));
    }
    terms.emplace_back(w, c);
  }
  PauliSum h(n);
  for (const auto &[w, c] : terms) h.add(w, c);
  return h;
}

std::string render_hamiltonian(const PauliSum &h) {
  std::ostringstream os;
  if (h.empty()) os << "0 " << std::string(h.n_qubits(), 'I') << '\n';
  for (const auto &[w, c] : h.terms()) os << fmt17(c) << ' ' << w.str() << '\n';
  return os.str();
}

ParsedSpec parse_state_spec(std::string_view text) {
  ParsedSpec out;
  StateSpec raw;
  for (const Line &l : split_lines(text)) {
    if (l.fields.size() == 1 && l.fields[0] == "ordered") {
      if (!raw.entries.empty()) fail(l.number, "'ordered' must come first");
      out.ordered = true;
      continue;
    }
    if (l.fields.size() != 2) {
      fail(l.number, "expected '<coefficient> <bit string>'");
    }
    const double c = parse_real(l.fields[0], l.number);
    OnConfig x;
    try {
      x = OnConfig::parse(l.fields[1]);
    } catch (const std::exception &e) {
      fail(l.number, e.what());
    }
    if (raw.entries.empty()) raw.n_qubits = x.size();
    if (x.size() != raw.n_qubits) fail(l.number, "bit string width differs");
    raw.entries.push_back({c, x});
  }
  if (raw.entries.empty()) throw ParseError("state file has no entries");
  out.spec = validate_spec(raw);
  if (!out.ordered) out.spec = largest_first(out.spec);
  return out;
}

std::string render_state_spec(const StateSpec &spec, bool ordered) {
  std::ostringstream os;
  if (ordered) os << "ordered\n";
  for (const SpecEntry &e : spec.entries) {
    os << fmt17(e.coefficient) << ' ' << e.config.str() << '\n';
  }
  return os.str();
}

json circuit_to_json(const Circuit &c) {
  json gates = json::array();
  for (const Gate &g : c.gates()) {
    json jg;
    jg["kind"] = kind_name(g.kind);
    jg["targets"] = g.targets;
    json ctrls = json::array();
    for (const Control &k : g.controls) ctrls.push_back({k.qubit, k.state ? 1 : 0});
    jg["controls"] = ctrls;
    if (g.angles.size() == 1) {
      jg["angle"] = angle_to_json(g.angles[0]);
    } else if (g.angles.size() > 1) {
      json a = json::array();
      for (const Angle &x : g.angles) a.push_back(angle_to_json(x));
      jg["angles"] = a;
    }
    gates.push_back(jg);
  }
  return json{{"n_qubits", c.n_qubits()}, {"angle_unit", "pi"}, {"gates", gates}};
}

Circuit circuit_from_json(const json &j) {
  try {
    if (j.contains("angle_unit") && j.at("angle_unit") != "pi") {
      throw ParseError("unsupported angle unit");
    }
    Circuit c(j.at("n_qubits").get<unsigned>());
    for (const json &jg : j.at("gates")) {
      Gate g{kind_from_name(jg.at("kind").get<std::string>()),
             jg.at("targets").get<std::vector<unsigned>>(),
             {},
             {}};
      if (jg.contains("controls")) {
        for (const json &k : jg.at("controls")) {
          const int s = k.at(1).get<int>();
          if (s != 0 && s != 1) throw ParseError("control state must be 0 or 1");
          g.controls.push_back({k.at(0).get<unsigned>(), s == 1});
        }
      }
      if (jg.contains("angle")) g.angles.push_back(angle_from_json(jg.at("angle")));
      if (jg.contains("angles")) {
        for (const json &a : jg.at("angles")) g.angles.push_back(angle_from_json(a));
      }
      if (g.angles.size() != kind_n_angles(g.kind)) {
        throw ParseError(kind_name(g.kind) + " needs " +
                         std::to_string(kind_n_angles(g.kind)) + " angle(s)");
      }
      c.add(g);
    }
    return c;
  } catch (const json::exception &e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  } catch (const CircuitError &e) {
    throw ParseError(std::string("circuit JSON: ") + e.what());
  }
}

std::vector<ExcitationOp> parse_excitations(std::string_view text) {
  std::vector<ExcitationOp> out;
  for (const Line &l : split_lines(text)) {
    std::vector<unsigned> a, c;
    bool after = false;
    for (const std::string &f : l.fields) {
      if (f == "->") {
        if (after) fail(l.number, "two arrows");
        after = true;
        continue;
      }
      char *end = nullptr;
      const long v = std::strtol(f.c_str(), &end, 10);
      if (end == f.c_str() || *end != '\0' || v < 0) {
        fail(l.number, "bad mode index '" + f + "'");
      }
      (after ? c : a).push_back(static_cast<unsigned>(v));
    }
    if (!after) fail(l.number, "expected 'a [b] -> c [d]'");
    try {
      out.push_back(ExcitationOp::make(a, c));
    } catch (const std::exception &e) {
      fail(l.number, e.what());
    }
  }
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace mcprep
