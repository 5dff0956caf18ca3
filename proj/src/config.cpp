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

#include "mcprep/config.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>

namespace mcprep {

OnConfig::OnConfig(unsigned n_qubits, std::uint64_t index)
    : n_(n_qubits), bits_(index) {
  if (n_qubits > kMaxQubits) {
    throw ConfigError("register too wide: " + std::to_string(n_qubits));
  }
  if (n_qubits < 64 && (index >> n_qubits) != 0) {
    throw ConfigError("index does not fit the register");
  }
}

OnConfig OnConfig::parse(std::string_view bits) {
  if (bits.empty()) throw ConfigError("empty bit string");
  if (bits.size() > kMaxQubits) throw ConfigError("bit string too long");
  std::uint64_t v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') {
      throw ConfigError("bad character in bit string: " + std::string(bits));
    }
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return OnConfig(static_cast<unsigned>(bits.size()), v);
}

bool OnConfig::operator[](unsigned q) const {
  if (q >= n_) throw ConfigError("qubit index out of range");
  return (bits_ & mask(q)) != 0;
}

OnConfig OnConfig::flipped(unsigned q) const {
  if (q >= n_) throw ConfigError("qubit index out of range");
  OnConfig out = *this;
  out.bits_ ^= mask(q);
  return out;
}

OnConfig OnConfig::with(unsigned q, bool value) const {
  return (*this)[q] == value ? *this : flipped(q);
}

unsigned OnConfig::weight() const {
  return static_cast<unsigned>(std::popcount(bits_));
}

std::string OnConfig::str() const {
  std::string s(n_, '0');
  for (unsigned q = 0; q < n_; ++q) {
    if ((*this)[q]) s[q] = '1';
  }
  return s;
}

static void check_widths(const OnConfig &x, const OnConfig &y) {
  if (x.size() != y.size()) {
    throw ConfigError(
        "configuration widths differ: " + x.str() + " vs " + y.str());
  }
}

unsigned hamming(const OnConfig &x, const OnConfig &y) {
  check_widths(x, y);
  return static_cast<unsigned>(std::popcount(x.index() ^ y.index()));
}

std::vector<unsigned> xor_support(const OnConfig &x, const OnConfig &y) {
  check_widths(x, y);
  std::vector<unsigned> out;
  for (unsigned q = 0; q < x.size(); ++q) {
    if (x[q] != y[q]) out.push_back(q);
  }
  return out;
}

static bool strictly_increasing(const std::vector<unsigned> &v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) ==
         v.end();
}

ExcitationOp ExcitationOp::make(
    std::vector<unsigned> annihilate, std::vector<unsigned> create) {
  if (annihilate.size() != create.size() || annihilate.empty() ||
      annihilate.size() > 2) {
    throw ConfigError("excitation must be a single or a double");
  }
  if (!strictly_increasing(annihilate) || !strictly_increasing(create)) {
    throw ConfigError("excitation indices must be strictly increasing");
  }
  for (unsigned a : annihilate) {
    if (std::find(create.begin(), create.end(), a) != create.end()) {
      throw ConfigError("excitation annihilates and creates mode " +
                        std::to_string(a));
    }
  }
  return ExcitationOp{std::move(annihilate), std::move(create)};
}

std::string ExcitationOp::str() const {
  std::ostringstream os;
  for (unsigned a : annihilate) os << a << ' ';
  os << "->";
  for (unsigned c : create) os << ' ' << c;
  return os.str();
}

std::optional<std::pair<OnConfig, int>> apply_excitation(
    const ExcitationOp &op, const OnConfig &x) {
  for (unsigned q : op.annihilate) {
    if (q >= x.size()) throw ConfigError("excitation index outside register");
  }
  for (unsigned q : op.create) {
    if (q >= x.size()) throw ConfigError("excitation index outside register");
  }
  OnConfig y = x;
  int sign = 1;
  auto parity_below = [&](unsigned q) {
    unsigned count = 0;
    for (unsigned k = 0; k < q; ++k) count += y[k];
    return (count & 1U) ? -1 : 1;
  };
  for (unsigned q : op.annihilate) {
    if (!y[q]) return std::nullopt;
    sign *= parity_below(q);
    y = y.flipped(q);
  }
  for (unsigned q : op.create) {
    if (y[q]) return std::nullopt;
    sign *= parity_below(q);
    y = y.flipped(q);
  }
  return std::make_pair(y, sign);
}

OnConfig hartree_fock(unsigned n_qubits, unsigned n_elec) {
  if (n_elec > n_qubits) throw ConfigError("more electrons than qubits");
  OnConfig out(n_qubits, 0);
  for (unsigned q = 0; q < n_elec; ++q) out = out.flipped(q);
  return out;
}

std::vector<ExcitationOp> cisd_excitations(unsigned n_orb, unsigned n_elec) {
  if (n_elec % 2 != 0) {
    throw ConfigError("closed-shell reference needs an even electron count");
  }
  if (n_elec > 2 * n_orb) throw ConfigError("more electrons than spin orbitals");
  const unsigned n = 2 * n_orb;
  std::vector<unsigned> occ, vir;
  for (unsigned q = 0; q < n; ++q) (q < n_elec ? occ : vir).push_back(q);
  auto spin = [](unsigned q) { return q % 2; };

  std::vector<ExcitationOp> out;
  for (unsigned a : occ) {
    for (unsigned c : vir) {
      if (spin(a) == spin(c)) out.push_back(ExcitationOp::make({a}, {c}));
    }
  }
  for (std::size_t i = 0; i < occ.size(); ++i) {
    for (std::size_t j = i + 1; j < occ.size(); ++j) {
      for (std::size_t k = 0; k < vir.size(); ++k) {
        for (std::size_t l = k + 1; l < vir.size(); ++l) {
          unsigned up_out = (spin(occ[i]) == 0) + (spin(occ[j]) == 0);
          unsigned up_in = (spin(vir[k]) == 0) + (spin(vir[l]) == 0);
          if (up_out == up_in) {
            out.push_back(
                ExcitationOp::make({occ[i], occ[j]}, {vir[k], vir[l]}));
          }
        }
      }
    }
  }
  return out;
}

std::vector<OnConfig> generate_cisd_configs(unsigned n_orb, unsigned n_elec) {
  const std::vector<ExcitationOp> ops = cisd_excitations(n_orb, n_elec);
  const OnConfig hf = hartree_fock(2 * n_orb, n_elec);
  std::vector<OnConfig> out{hf};
  std::set<OnConfig> seen{hf};
  for (const ExcitationOp &op : ops) {
    auto r = apply_excitation(op, hf);
    if (r && seen.insert(r->first).second) out.push_back(r->first);
  }
  return out;
}

std::vector<OnConfig> StateSpec::configs() const {
  std::vector<OnConfig> out;
  out.reserve(entries.size());
  for (const SpecEntry &e : entries) out.push_back(e.config);
  return out;
}

std::vector<double> StateSpec::coefficients() const {
  std::vector<double> out;
  out.reserve(entries.size());
  for (const SpecEntry &e : entries) out.push_back(e.coefficient);
  return out;
}

StateSpec validate_spec(const StateSpec &spec) {
  if (spec.n_qubits == 0) throw SpecError("state spec has no qubits");
  StateSpec out{spec.n_qubits, {}};
  std::set<OnConfig> seen;
  for (const SpecEntry &e : spec.entries) {
    if (e.config.size() != spec.n_qubits) {
      throw SpecError("configuration " + e.config.str() +
                      " does not match register width " +
                      std::to_string(spec.n_qubits));
    }
    if (!std::isfinite(e.coefficient)) {
      throw SpecError("non-finite coefficient for " + e.config.str());
    }
    if (!seen.insert(e.config).second) {
      throw SpecError("duplicate configuration " + e.config.str());
    }
    if (std::abs(e.coefficient) >= kPruneThreshold) out.entries.push_back(e);
  }
  if (out.entries.empty()) throw SpecError("state spec has zero norm");
  const unsigned w = out.entries.front().config.weight();
  double norm2 = 0.0;
  for (const SpecEntry &e : out.entries) {
    if (e.config.weight() != w) {
      throw SpecError("mixed Hamming weights: " +
                      out.entries.front().config.str() + " vs " +
                      e.config.str());
    }
    norm2 += e.coefficient * e.coefficient;
  }
  if (std::abs(norm2 - 1.0) > kSpecNormTolerance) {
    std::ostringstream os;
    os << "state spec is not normalized (norm squared " << norm2 << ")";
    throw SpecError(os.str());
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (SpecEntry &e : out.entries) e.coefficient *= scale;
  return out;
}

StateSpec largest_first(const StateSpec &spec) {
  StateSpec out = spec;
  if (out.entries.size() < 2) return out;
  auto it = std::max_element(
      out.entries.begin(), out.entries.end(),
      [](const SpecEntry &a, const SpecEntry &b) {
        return std::abs(a.coefficient) < std::abs(b.coefficient);
      });
  std::rotate(out.entries.begin(), it, it + 1);
  return out;
}

}  // namespace mcprep
