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

#include "mcprep/compile.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace mcprep {

std::string gateset_name(GateSet set) {
  return set == GateSet::ZZNative ? "zz" : "cx";
}

GateSet gateset_from_name(const std::string &name) {
  if (name == "zz" || name == "ZZ-native") return GateSet::ZZNative;
  if (name == "cx" || name == "CX-native") return GateSet::CXNative;
  throw CircuitError("unknown gate set '" + name + "'");
}

bool in_gateset(const Gate &g, GateSet set) {
  if (!g.controls.empty()) return false;
  switch (g.kind) {
    case GateKind::Rz:
      return true;
    case GateKind::ZZMax:
    case GateKind::PhasedX:
      return set == GateSet::ZZNative;
    case GateKind::CNOT:
    case GateKind::Ry:
    case GateKind::X:
      return set == GateSet::CXNative;
    default:
      return false;
  }
}

namespace {

using Gates = std::vector<Gate>;

// H = X . Ry(pi/2) exactly, so in time order Ry(pi/2) then X.
void push_h(Gates &out, unsigned q) {
  out.push_back(Gate::ry(q, kPi / 2));
  out.push_back(Gate::x(q));
}

}  // namespace

std::vector<Gate> g2_template(unsigned a, unsigned b, const Angle &theta) {
  return {
      Gate::cnot(b, a), Gate::ry(b, theta),  Gate::cnot(a, b),
      Gate::ry(b, -theta), Gate::cnot(a, b), Gate::cnot(b, a),
  };
}

std::vector<Gate> g4_template(
    unsigned a, unsigned b, unsigned c, unsigned d, const Angle &theta) {
  // Double-excitation circuit with phi = -2 theta, i.e. Ry(+-phi/8).
  const Angle p = theta.scaled(-0.25);
  const Angle m = theta.scaled(0.25);
  Gates out;
  auto cx = [&](unsigned x, unsigned y) { out.push_back(Gate::cnot(x, y)); };
  auto ry = [&](unsigned q, const Angle &t) { out.push_back(Gate::ry(q, t)); };
  cx(c, d);
  cx(a, c);
  push_h(out, d);
  push_h(out, a);
  cx(c, d);
  cx(a, b);
  ry(b, p);
  ry(a, m);
  cx(a, d);
  push_h(out, d);
  cx(d, b);
  ry(b, p);
  ry(a, m);
  cx(c, b);
  cx(c, a);
  ry(b, m);
  ry(a, p);
  cx(d, b);
  push_h(out, d);
  cx(a, d);
  ry(b, m);
  ry(a, p);
  cx(a, b);
  cx(c, a);
  push_h(out, a);
  push_h(out, d);
  cx(a, c);
  cx(c, d);
  return out;
}

namespace {

// e^{i lambda x_0 x_1 ... x_{m-1}} on qs, up to global phase.
void mc_phase(const std::vector<unsigned> &qs, double lambda, Gates &out) {
  const unsigned m = static_cast<unsigned>(qs.size());
  const double scale = lambda / std::ldexp(1.0, static_cast<int>(m) - 1);
  for (unsigned h = 0; h < m; ++h) {
    const unsigned t = qs[h];
    out.push_back(Gate::rz(t, scale));
    if (h == 0) continue;
    std::uint64_t prev = 0;
    const std::uint64_t n_sub = std::uint64_t{1} << h;
    for (std::uint64_t g = 1; g < n_sub; ++g) {
      const std::uint64_t gray = g ^ (g >> 1);
      const std::uint64_t flip = gray ^ prev;
      const unsigned b = static_cast<unsigned>(__builtin_ctzll(flip));
      out.push_back(Gate::cnot(qs[b], t));
      const bool odd = __builtin_popcountll(gray) % 2 == 1;
      out.push_back(Gate::rz(t, odd ? -scale : scale));
      prev = gray;
    }
    out.push_back(Gate::cnot(qs[h - 1], t));
  }
}

void mcx(const std::vector<unsigned> &cs, unsigned t, Gates &out) {
  if (cs.empty()) {
    out.push_back(Gate::x(t));
  } else if (cs.size() == 1) {
    out.push_back(Gate::cnot(cs[0], t));
  } else {
    std::vector<unsigned> qs = cs;
    qs.push_back(t);
    push_h(out, t);
    mc_phase(qs, kPi, out);
    push_h(out, t);
  }
}

void expand_cx(const Gate &g, Gates &out);

// Controlled rotation about a fixed axis, exact: R(a/2) X R(-a/2) X.
void controlled_rotation(
    GateKind kind, unsigned t, const Angle &a, const std::vector<unsigned> &cs,
    Gates &out) {
  Gate half{kind, {t}, {}, {a.scaled(0.5)}};
  Gate back{kind, {t}, {}, {a.scaled(-0.5)}};
  if (cs.empty()) {
    out.push_back(Gate{kind, {t}, {}, {a}});
    return;
  }
  out.push_back(half);
  mcx(cs, t, out);
  out.push_back(back);
  mcx(cs, t, out);
}

// All controls in cs are 1-state here.
void expand_positive(const Gate &g, const std::vector<unsigned> &cs,
                     Gates &out) {
  const std::vector<unsigned> &t = g.targets;
  auto with_controls = [&](const Gates &body) {
    for (const Gate &b : body) {
      Gate wrapped = b;
      for (unsigned c : cs) wrapped.controls.push_back({c, true});
      expand_cx(wrapped, out);
    }
  };
  switch (g.kind) {
    case GateKind::X:
      mcx(cs, t[0], out);
      break;
    case GateKind::Ry:
    case GateKind::Rz:
      controlled_rotation(g.kind, t[0], g.angles[0], cs, out);
      break;
    case GateKind::PhasedX: {
      // Rz(beta) Rx(alpha) Rz(-beta), and Rx(a) = Rz(-pi/2) Ry(a) Rz(pi/2).
      const Angle &beta = g.angles[1];
      Gates pre;
      if (beta.is_symbolic()) {
        pre = {Gate::rz(t[0], -beta), Gate::rz(t[0], kPi / 2)};
      } else {
        pre = {Gate::rz(t[0], kPi / 2 - beta.value())};
      }
      for (const Gate &p : pre) out.push_back(p);
      controlled_rotation(GateKind::Ry, t[0], g.angles[0], cs, out);
      for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        out.push_back(it->inverse());
      }
      break;
    }
    case GateKind::CNOT: {
      std::vector<unsigned> all = cs;
      all.push_back(t[0]);
      mcx(all, t[1], out);
      break;
    }
    case GateKind::ZZMax:
      out.push_back(Gate::cnot(t[0], t[1]));
      controlled_rotation(GateKind::Rz, t[1], Angle(kPi / 2), cs, out);
      out.push_back(Gate::cnot(t[0], t[1]));
      break;
    case GateKind::SWAP: {
      std::vector<unsigned> all = cs;
      all.push_back(t[0]);
      out.push_back(Gate::cnot(t[1], t[0]));
      mcx(all, t[1], out);
      out.push_back(Gate::cnot(t[1], t[0]));
      break;
    }
    case GateKind::G2:
      with_controls(g2_template(t[0], t[1], g.angles[0]));
      break;
    case GateKind::G4:
      with_controls(g4_template(t[0], t[1], t[2], t[3], g.angles[0]));
      break;
  }
}

void expand_cx(const Gate &g, Gates &out) {
  std::vector<unsigned> cs;
  std::vector<unsigned> flips;
  for (const Control &c : g.controls) {
    cs.push_back(c.qubit);
    if (!c.state) flips.push_back(c.qubit);
  }
  for (unsigned q : flips) out.push_back(Gate::x(q));
  Gate bare = g;
  bare.controls.clear();
  expand_positive(bare, cs, out);
  for (unsigned q : flips) out.push_back(Gate::x(q));
}

// CNOT(c, t) up to global phase in ZZMax form, Ry written as PhasedX(., pi/2).
void cnot_to_zz(unsigned c, unsigned t, Gates &out) {
  out.push_back(Gate::rz(t, kPi));
  out.push_back(Gate::phased_x(t, kPi / 2, kPi / 2));
  out.push_back(Gate::zzmax(c, t));
  out.push_back(Gate::rz(c, -kPi / 2));
  out.push_back(Gate::rz(t, -kPi / 2));
  out.push_back(Gate::rz(t, kPi));
  out.push_back(Gate::phased_x(t, kPi / 2, kPi / 2));
}

void to_zz(const Gate &g, Gates &out) {
  switch (g.kind) {
    case GateKind::X:
      out.push_back(Gate::phased_x(g.targets[0], kPi, 0.0));
      break;
    case GateKind::Ry:
      out.push_back(Gate::phased_x(g.targets[0], g.angles[0], kPi / 2));
      break;
    case GateKind::CNOT:
      cnot_to_zz(g.targets[0], g.targets[1], out);
      break;
    case GateKind::Rz:
      out.push_back(g);
      break;
    default:
      throw CircuitError("cannot translate " + g.label() + " to ZZ-native");
  }
}

}  // namespace

std::vector<Gate> decompose_gate(const Gate &g, GateSet target) {
  Gates cx;
  if (g.kind == GateKind::ZZMax && g.controls.empty() &&
      target == GateSet::ZZNative) {
    return {g};
  }
  if (g.kind == GateKind::PhasedX && g.controls.empty() &&
      target == GateSet::ZZNative) {
    return {g};
  }
  expand_cx(g, cx);
  if (target == GateSet::CXNative) return cx;
  Gates zz;
  for (const Gate &h : cx) to_zz(h, zz);
  return zz;
}

Circuit expand(const Circuit &c, GateSet target) {
  Circuit out(c.n_qubits());
  for (const Gate &g : c.gates()) {
    for (const Gate &h : decompose_gate(g, target)) out.add(h);
  }
  return out;
}

namespace {

constexpr double kAngleEps = 1e-12;

// Reduces to (-pi, pi]; callers only use this where 2 pi is a global phase.
double wrap(double a) {
  double r = std::remainder(a, 2 * kPi);
  if (r <= -kPi) r += 2 * kPi;
  return r;
}

bool is_zero_angle(double a) { return std::abs(wrap(a)) < kAngleEps; }

bool same_set(const std::vector<unsigned> &a, const std::vector<unsigned> &b) {
  return a.size() == b.size() &&
         std::is_permutation(a.begin(), a.end(), b.begin());
}

bool disjoint(const Gate &g, const Gate &h) {
  for (unsigned q : g.qubits()) {
    for (unsigned r : h.qubits()) {
      if (q == r) return false;
    }
  }
  return true;
}

bool diagonal(const Gate &g) {
  return g.kind == GateKind::Rz || g.kind == GateKind::ZZMax;
}

bool contains(const std::vector<unsigned> &v, unsigned q) {
  return std::find(v.begin(), v.end(), q) != v.end();
}

// Sufficient conditions for gh = hg on uncontrolled gates.
bool commutes(const Gate &g, const Gate &h) {
  if (disjoint(g, h)) return true;
  if (diagonal(g) && diagonal(h)) return true;
  auto one_way = [](const Gate &a, const Gate &b) {
    if (b.kind != GateKind::CNOT) return false;
    const unsigned c = b.targets[0];
    const unsigned t = b.targets[1];
    if (a.kind == GateKind::Rz) return a.targets[0] == c;
    if (a.kind == GateKind::X) return a.targets[0] == t;
    if (a.kind == GateKind::ZZMax) return !contains(a.targets, t);
    if (a.kind == GateKind::CNOT) {
      const unsigned c2 = a.targets[0];
      const unsigned t2 = a.targets[1];
      if (c == c2 && t != t2) return true;
      if (t == t2 && c != c2) return true;
    }
    return false;
  };
  return one_way(g, h) || one_way(h, g);
}

bool constant(const Gate &g) { return !g.has_symbols(); }

enum class MergeResult { None, Cancel, Replaced };

// g comes first in time; on Replaced, g is dropped and h rewritten in place.
// ZZMax pairs write Rz(pi) into both slots.
MergeResult try_merge(Gate &g, Gate &h) {
  if (g.kind != h.kind) return MergeResult::None;
  switch (g.kind) {
    case GateKind::X:
      return g.targets == h.targets ? MergeResult::Cancel : MergeResult::None;
    case GateKind::CNOT:
      return g.targets == h.targets ? MergeResult::Cancel : MergeResult::None;
    case GateKind::SWAP:
      return same_set(g.targets, h.targets) ? MergeResult::Cancel
                                            : MergeResult::None;
    case GateKind::ZZMax:
      if (!same_set(g.targets, h.targets)) return MergeResult::None;
      {
        const unsigned a = g.targets[0];
        const unsigned b = g.targets[1];
        g = Gate::rz(a, kPi);
        h = Gate::rz(b, kPi);
      }
      return MergeResult::Replaced;
    case GateKind::Ry:
    case GateKind::Rz:
      if (g.targets != h.targets || !constant(g) || !constant(h)) {
        return MergeResult::None;
      }
      h.angles[0] = Angle(wrap(g.angles[0].value() + h.angles[0].value()));
      return MergeResult::Replaced;
    case GateKind::PhasedX:
      if (g.targets != h.targets || !constant(g) || !constant(h) ||
          !is_zero_angle(g.angles[1].value() - h.angles[1].value())) {
        return MergeResult::None;
      }
      h.angles[0] = Angle(wrap(g.angles[0].value() + h.angles[0].value()));
      return MergeResult::Replaced;
    default:
      return MergeResult::None;
  }
}

bool is_identity(const Gate &g) {
  if (!constant(g)) return false;
  switch (g.kind) {
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::PhasedX:
      return is_zero_angle(g.angles[0].value());
    case GateKind::G2:
    case GateKind::G4:
      // Exactly the identity matrix only at multiples of 2 pi.
      return std::abs(std::remainder(g.angles[0].value(), 2 * kPi)) <
             kAngleEps;
    default:
      return false;
  }
}

}  // namespace

Circuit peephole(const Circuit &c) {
  std::vector<Gate> gs = c.gates();
  std::vector<bool> alive(gs.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (alive[i] && gs[i].controls.empty() && is_identity(gs[i])) {
        alive[i] = false;
        changed = true;
      }
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!alive[i] || !gs[i].controls.empty()) continue;
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (!alive[j]) continue;
        if (disjoint(gs[i], gs[j])) continue;
        if (!gs[j].controls.empty()) break;
        const bool zz_pair = gs[i].kind == GateKind::ZZMax;
        MergeResult m = try_merge(gs[i], gs[j]);
        if (m == MergeResult::Cancel) {
          alive[i] = alive[j] = false;
          changed = true;
          break;
        }
        if (m == MergeResult::Replaced) {
          // ZZMax pairs keep both slots as Rz(pi).
          if (!zz_pair) alive[i] = false;
          changed = true;
          break;
        }
        if (!commutes(gs[i], gs[j])) break;
      }
    }
  }
  Circuit out(c.n_qubits());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (alive[i]) out.add(gs[i]);
  }
  return out;
}

Circuit compile(const Circuit &c, GateSet target) {
  if (!c.parameters().empty()) {
    throw CircuitError("compile needs all parameters bound; '" +
                       *c.parameters().begin() + "' is free");
  }
  Circuit cx = peephole(expand(c, GateSet::CXNative));
  if (target == GateSet::CXNative) return cx;
  return peephole(expand(cx, GateSet::ZZNative));
}

}  // namespace mcprep
