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

#include "mcprep/givens.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mcprep {

std::size_t RotationPlan::external_control_count() const {
  std::size_t n = 0;
  for (const RotationEntry &e : entries) {
    n += e.controls.size();
    if (e.gadget) {
      n += e.gadget->central_controls.size();
      for (const SwapStep &s : e.gadget->swaps) n += s.controls.size();
    }
  }
  return n;
}

namespace {

bool in(const std::vector<unsigned> &v, unsigned q) {
  return std::find(v.begin(), v.end(), q) != v.end();
}

void add_control(std::vector<Control> &cs, Control c) {
  for (const Control &k : cs) {
    if (k.qubit == c.qubit) return;
  }
  cs.push_back(c);
}

unsigned restricted_distance(const OnConfig &a, const OnConfig &b,
                             const std::vector<unsigned> &qs) {
  unsigned d = 0;
  for (unsigned q : qs) d += a[q] != b[q];
  return d;
}

// Lowest qubit outside the targets where x_p and x_e differ.
Control separating_control(const OnConfig &x1, const OnConfig &xp,
                           const OnConfig &xe,
                           const std::vector<unsigned> &targets) {
  for (unsigned q = 0; q < x1.size(); ++q) {
    if (!in(targets, q) && xp[q] != xe[q]) return {q, x1[q]};
  }
  throw SynthesisError("no admissible external control separates " +
                       xp.str() + " from the rotation towards " + xe.str());
}

void check_configs(const std::vector<OnConfig> &configs) {
  if (configs.empty()) throw SynthesisError("no configurations to plan");
  std::set<OnConfig> seen;
  for (const OnConfig &x : configs) {
    if (x.size() != configs.front().size()) {
      throw SynthesisError("configurations have different widths");
    }
    if (!seen.insert(x).second) {
      throw SynthesisError("duplicate configuration " + x.str());
    }
  }
}

bool controls_hold(const std::vector<Control> &cs, const OnConfig &y) {
  for (const Control &c : cs) {
    if (y[c.qubit] != c.state) return false;
  }
  return true;
}

OnConfig swap_bits(const OnConfig &y, unsigned a, unsigned b) {
  return y.with(a, y[b]).with(b, y[a]);
}

}  // namespace

HighOrderGadget plan_high_order(const std::vector<OnConfig> &configs) {
  check_configs(configs);
  if (configs.size() < 2) throw SynthesisError("gadget needs a partner");
  const OnConfig &x1 = configs.front();
  const OnConfig &xe = configs.back();
  if (hamming(x1, xe) <= 4) {
    throw SynthesisError("gadget is only for Hamming distance above 4");
  }
  if (hamming(x1, xe) % 2 != 0) throw SynthesisError("odd Hamming distance");
  const unsigned n = x1.size();
  const bool q_minor = x1.weight() <= n / 2;
  const std::size_t e = configs.size() - 1;

  HighOrderGadget g;
  OnConfig xp = x1;
  while (hamming(xp, xe) > 2) {
    unsigned i = n, j = n;
    for (unsigned q = 0; q < n; ++q) {
      if (i == n && xp[q] && !xe[q]) i = q;
      if (j == n && !xp[q] && xe[q]) j = q;
    }
    SwapStep s{i, j, {}};
    for (unsigned q = 0; q < n; ++q) {
      if (q != i && q != j && xp[q] == q_minor) s.controls.push_back({q, q_minor});
    }
    g.swaps.push_back(s);
    xp = swap_bits(xp, i, j);
    for (std::size_t k = 1; k < e; ++k) {
      if (xp == configs[k]) g.k_matches_ref = true;
    }
  }
  const std::vector<unsigned> pair = xor_support(xp, xe);
  g.central_first = xp[pair[0]] ? pair[0] : pair[1];
  g.central_second = xp[pair[0]] ? pair[1] : pair[0];

  // x1 must reach xe through ladder, central G2 and reversed ladder, and
  // no earlier configuration may be rotated on the way.
  auto sound = [&](const std::vector<Control> &cc) {
    for (std::size_t p = 0; p < e; ++p) {
      OnConfig y = configs[p];
      for (const SwapStep &s : g.swaps) {
        if (controls_hold(s.controls, y)) y = swap_bits(y, s.first, s.second);
      }
      const bool hit =
          controls_hold(cc, y) && y[g.central_first] != y[g.central_second];
      if (p > 0 && hit) return false;
      if (p == 0) {
        if (!hit) return false;
        OnConfig z = y.flipped(g.central_first).flipped(g.central_second);
        for (auto it = g.swaps.rbegin(); it != g.swaps.rend(); ++it) {
          if (controls_hold(it->controls, z)) z = swap_bits(z, it->first, it->second);
        }
        if (z != xe) return false;
      }
    }
    return true;
  };

  // Algorithm 1 style controls on the central pair.
  std::vector<unsigned> ips;
  bool separable = true;
  for (std::size_t p = 1; p < e && separable; ++p) {
    const OnConfig &y = configs[p];
    if (y[pair[0]] != y[pair[1]]) {
      try {
        const Control c = separating_control(x1, y, xe, pair);
        if (!in(ips, c.qubit)) ips.push_back(c.qubit);
      } catch (const SynthesisError &) {
        separable = false;
      }
    }
  }
  bool allow = separable;
  if (allow && g.k_matches_ref) {
    for (const SwapStep &s : g.swaps) {
      bool subset = true;
      for (unsigned q : ips) {
        bool found = false;
        for (const Control &c : s.controls) found |= c.qubit == q;
        subset &= found && xp[q] == q_minor;
      }
      if (subset) allow = false;
    }
  }
  std::vector<Control> minority, frame;
  for (unsigned q = 0; q < n; ++q) {
    if (q == pair[0] || q == pair[1]) continue;
    frame.push_back({q, xp[q]});
    if (xp[q] == q_minor) minority.push_back({q, q_minor});
  }
  if (allow) {
    for (unsigned q : ips) g.central_controls.push_back({q, xp[q]});
    if (sound(g.central_controls)) return g;
    g.safety_fallback = true;
  } else if (!separable) {
    g.safety_fallback = true;
  }
  if (sound(minority)) {
    g.central_controls = minority;
    g.minority_central = true;
    return g;
  }
  g.safety_fallback = true;
  g.minority_central = false;
  g.central_controls = frame;
  if (!sound(frame)) {
    throw SynthesisError("no central control set isolates the rotation towards " +
                         xe.str());
  }
  return g;
}

RotationPlan plan_rotations(const std::vector<OnConfig> &configs) {
  check_configs(configs);
  RotationPlan plan;
  plan.reference = configs.front();
  const OnConfig &x1 = configs.front();
  for (std::size_t e = 1; e < configs.size(); ++e) {
    const OnConfig &xe = configs[e];
    RotationEntry entry;
    entry.partner = xe;
    entry.targets = xor_support(x1, xe);
    const std::size_t h = entry.targets.size();
    if (h % 2 != 0) {
      throw SynthesisError("odd Hamming distance between " + x1.str() +
                           " and " + xe.str());
    }
    entry.order = static_cast<unsigned>(h / 2);
    if (h <= 4) {
      for (std::size_t p = 1; p < e; ++p) {
        const OnConfig &xp = configs[p];
        bool rotatable;
        if (h == 2) {
          rotatable = xp[entry.targets[0]] != xp[entry.targets[1]];
        } else {
          rotatable = restricted_distance(x1, xp, entry.targets) == 4 ||
                      restricted_distance(xe, xp, entry.targets) == 4;
        }
        if (rotatable) {
          add_control(entry.controls,
                      separating_control(x1, xp, xe, entry.targets));
        }
      }
    } else {
      std::vector<OnConfig> head(configs.begin(), configs.begin() + e + 1);
      entry.gadget = plan_high_order(head);
    }
    plan.entries.push_back(std::move(entry));
  }
  return plan;
}

std::vector<double> angles_from_coefficients(const std::vector<double> &c) {
  if (c.empty()) throw SynthesisError("no coefficients");
  double norm2 = 0;
  for (double v : c) norm2 += v * v;
  if (norm2 == 0.0) throw SynthesisError("zero coefficient vector");
  const double scale = (c.front() < 0 ? -1.0 : 1.0) / std::sqrt(norm2);
  std::vector<double> theta;
  double alpha = 1.0;  // product of cos theta_b over earlier rotations
  for (std::size_t d = 1; d < c.size(); ++d) {
    if (alpha < 1e-12) {
      throw SynthesisError(
          "normalizer underflow; put the largest coefficient first");
    }
    const double s = std::clamp(scale * c[d] / alpha, -1.0, 1.0);
    theta.push_back(std::asin(s));
    alpha *= std::sqrt(std::max(0.0, 1.0 - s * s));
  }
  return theta;
}

std::vector<Gate> entry_gates(const RotationPlan &plan, std::size_t e,
                              const Angle &theta) {
  const RotationEntry &entry = plan.entries.at(e);
  const OnConfig &x1 = plan.reference;
  std::vector<Gate> out;
  if (entry.gadget) {
    const HighOrderGadget &g = *entry.gadget;
    for (const SwapStep &s : g.swaps) {
      out.push_back(control_wrap(Gate::swap(s.first, s.second), s.controls));
    }
    out.push_back(control_wrap(
        Gate::g2(g.central_first, g.central_second, theta), g.central_controls));
    for (auto it = g.swaps.rbegin(); it != g.swaps.rend(); ++it) {
      out.push_back(
          control_wrap(Gate::swap(it->first, it->second), it->controls));
    }
    return out;
  }
  std::vector<unsigned> occ, emp;
  for (unsigned q : entry.targets) (x1[q] ? occ : emp).push_back(q);
  if (entry.order == 1) {
    out.push_back(control_wrap(Gate::g2(occ[0], emp[0], theta), entry.controls));
  } else {
    out.push_back(control_wrap(
        Gate::g4(occ[0], occ[1], emp[0], emp[1], theta), entry.controls));
  }
  return out;
}

Circuit gr_circuit(const RotationPlan &plan, const std::vector<Angle> &angles,
                   bool include_reference) {
  if (angles.size() != plan.entries.size()) {
    throw SynthesisError("angle count does not match the plan");
  }
  Circuit c(plan.reference.size());
  if (include_reference) {
    for (unsigned q = 0; q < plan.reference.size(); ++q) {
      if (plan.reference[q]) c.add(Gate::x(q));
    }
  }
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    for (const Gate &g : entry_gates(plan, e, angles[e])) c.add(g);
  }
  return c;
}

Circuit synthesize_gr(const StateSpec &spec, const GrOptions &opts) {
  const StateSpec s = validate_spec(spec);
  const RotationPlan plan = plan_rotations(s.configs());
  if (const std::string bad = check_plan_support(plan); !bad.empty()) {
    throw SynthesisError("rotation plan is not exact: " + bad);
  }
  const std::vector<double> theta = angles_from_coefficients(s.coefficients());
  return gr_circuit(plan, std::vector<Angle>(theta.begin(), theta.end()),
                    opts.include_reference);
}

Circuit gr_ansatz(const std::vector<OnConfig> &configs,
                  const std::string &prefix) {
  const RotationPlan plan = plan_rotations(configs);
  std::vector<Angle> angles;
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    angles.push_back(Angle::symbol(prefix + std::to_string(e)));
  }
  return gr_circuit(plan, angles);
}

namespace {

// Basis images of y under a permutation or Givens gate; Givens gates
// branch when they act.
std::vector<OnConfig> branch(const Gate &g, const OnConfig &y) {
  if (!controls_hold(g.controls, y)) return {y};
  const std::vector<unsigned> &t = g.targets;
  switch (g.kind) {
    case GateKind::X:
      return {y.flipped(t[0])};
    case GateKind::SWAP:
      return {swap_bits(y, t[0], t[1])};
    case GateKind::G2:
      if (y[t[0]] == y[t[1]]) return {y};
      return {y, y.flipped(t[0]).flipped(t[1])};
    case GateKind::G4: {
      const bool hi = y[t[0]] && y[t[1]] && !y[t[2]] && !y[t[3]];
      const bool lo = !y[t[0]] && !y[t[1]] && y[t[2]] && y[t[3]];
      if (!hi && !lo) return {y};
      OnConfig z = y;
      for (unsigned q : t) z = z.flipped(q);
      return {y, z};
    }
    default:
      throw SynthesisError("unexpected gate in a rotation plan");
  }
}

std::set<OnConfig> images(const std::vector<Gate> &gates, const OnConfig &y) {
  std::set<OnConfig> cur{y};
  for (const Gate &g : gates) {
    std::set<OnConfig> next;
    for (const OnConfig &z : cur) {
      for (const OnConfig &w : branch(g, z)) next.insert(w);
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::string check_plan_support(const RotationPlan &plan) {
  const OnConfig &x1 = plan.reference;
  std::vector<OnConfig> placed;
  std::ostringstream err;
  for (std::size_t e = 0; e < plan.entries.size(); ++e) {
    const std::vector<Gate> gates = entry_gates(plan, e, Angle(0.3));
    const OnConfig &xe = plan.entries[e].partner;
    if (images(gates, x1) != std::set<OnConfig>{x1, xe}) {
      err << "rotation " << e << " does not mix " << x1.str() << " with "
          << xe.str();
      return err.str();
    }
    for (const OnConfig &xp : placed) {
      if (images(gates, xp) != std::set<OnConfig>{xp}) {
        err << "rotation " << e << " disturbs " << xp.str();
        return err.str();
      }
    }
    placed.push_back(xe);
  }
  return {};
}

}  // namespace mcprep
