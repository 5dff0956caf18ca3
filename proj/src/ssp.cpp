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

#include "mcprep/ssp.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "mcprep/givens.hpp"

namespace mcprep {

double merge_angle(double c1, double c2) {
  if (c1 == 0.0 && c2 == 0.0) throw SynthesisError("cannot merge two zeros");
  return std::atan2(c2, c1);
}

namespace {

// y after CNOT(pivot -> b) for every b in targets.
OnConfig transform(const OnConfig &y, unsigned pivot,
                   const std::vector<unsigned> &targets) {
  if (!y[pivot]) return y;
  OnConfig out = y;
  for (unsigned b : targets) out = out.flipped(b);
  return out;
}

std::vector<unsigned> others(const std::vector<unsigned> &differing,
                             unsigned pivot) {
  std::vector<unsigned> out;
  for (unsigned q : differing) {
    if (q != pivot) out.push_back(q);
  }
  return out;
}

}  // namespace

std::vector<Control> distinguishing_controls(
    const std::vector<OnConfig> &support, const OnConfig &x1, unsigned pivot) {
  const unsigned n = x1.size();
  std::vector<OnConfig> rest;
  const OnConfig x2 = x1.flipped(pivot);
  for (const OnConfig &y : support) {
    if (y != x1 && y != x2) rest.push_back(y);
  }
  std::vector<unsigned> chosen;
  std::vector<OnConfig> left = rest;
  while (!left.empty()) {
    unsigned best = n, best_count = 0;
    for (unsigned q = 0; q < n; ++q) {
      if (q == pivot) continue;
      unsigned count = 0;
      for (const OnConfig &y : left) count += y[q] != x1[q];
      if (count > best_count) {
        best = q;
        best_count = count;
      }
    }
    if (best == n) {
      throw SynthesisError("support strings cannot be separated from " +
                           x1.str());
    }
    chosen.push_back(best);
    std::erase_if(left, [&](const OnConfig &y) { return y[best] != x1[best]; });
  }
  auto separates = [&](const std::vector<unsigned> &qs) {
    for (const OnConfig &y : rest) {
      bool hit = false;
      for (unsigned q : qs) hit |= y[q] != x1[q];
      if (!hit) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k < chosen.size();) {
    std::vector<unsigned> trial = chosen;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
    if (separates(trial)) {
      chosen = std::move(trial);
    } else {
      ++k;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<Control> out;
  for (unsigned q : chosen) out.push_back({q, x1[q]});
  return out;
}

MergeChoice select_merge_pair(const std::vector<OnConfig> &support) {
  if (support.size() < 2) throw SynthesisError("nothing left to merge");
  using Key = std::tuple<unsigned, std::size_t, std::size_t, std::size_t>;
  Key best{~0U, 0, 0, 0};
  MergeChoice choice{0, 0, 0};
  bool found = false;
  for (std::size_t a = 0; a < support.size(); ++a) {
    for (std::size_t b = a + 1; b < support.size(); ++b) {
      const unsigned d = hamming(support[a], support[b]);
      if (found && d > std::get<0>(best)) continue;
      const std::vector<unsigned> diff = xor_support(support[a], support[b]);
      const unsigned pivot = diff.front();
      const std::vector<unsigned> tgt = others(diff, pivot);
      std::vector<OnConfig> moved;
      for (const OnConfig &y : support) moved.push_back(transform(y, pivot, tgt));
      const std::size_t k =
          distinguishing_controls(moved, support[a], pivot).size();
      const Key key{d, k, a, b};
      if (!found || key < best) {
        best = key;
        choice = {a, b, pivot};
        found = true;
      }
    }
  }
  return choice;
}

SspPlan plan_ssp(const StateSpec &spec) {
  const StateSpec s = validate_spec(spec);
  std::vector<std::pair<OnConfig, double>> sup;
  for (const SpecEntry &e : s.entries) sup.emplace_back(e.config, e.coefficient);
  std::sort(sup.begin(), sup.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });

  SspPlan plan;
  plan.n_qubits = s.n_qubits;
  while (sup.size() > 1) {
    std::vector<OnConfig> configs;
    for (const auto &[x, c] : sup) configs.push_back(x);
    const MergeChoice ch = select_merge_pair(configs);
    MergeStep step;
    step.x1 = configs[ch.first];
    step.x2 = configs[ch.second];
    step.differing = xor_support(step.x1, step.x2);
    step.pivot = ch.pivot;
    step.cnot_targets = others(step.differing, step.pivot);
    for (auto &[x, c] : sup) x = transform(x, step.pivot, step.cnot_targets);
    std::vector<OnConfig> moved;
    for (const auto &[x, c] : sup) moved.push_back(x);
    step.controls = distinguishing_controls(moved, step.x1, step.pivot);
    const double c1 = sup[ch.first].second;
    const double c2 = sup[ch.second].second;
    step.angle = merge_angle(c1, c2);
    sup[ch.first].second = std::hypot(c1, c2);
    sup.erase(sup.begin() + static_cast<std::ptrdiff_t>(ch.second));
    std::sort(sup.begin(), sup.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    plan.steps.push_back(std::move(step));
  }
  plan.survivor = sup.front().first;
  return plan;
}

Circuit ssp_circuit(const SspPlan &plan, const std::vector<Angle> &ry_angles) {
  if (ry_angles.size() != plan.steps.size()) {
    throw SynthesisError("angle count does not match the merge steps");
  }
  Circuit c(plan.n_qubits);
  for (unsigned q = 0; q < plan.n_qubits; ++q) {
    if (plan.survivor[q]) c.add(Gate::x(q));
  }
  for (std::size_t i = plan.steps.size(); i-- > 0;) {
    const MergeStep &s = plan.steps[i];
    c.add(control_wrap(Gate::ry(s.pivot, ry_angles[i]), s.controls));
    for (auto it = s.cnot_targets.rbegin(); it != s.cnot_targets.rend(); ++it) {
      c.add(Gate::cnot(s.pivot, *it));
    }
  }
  return c;
}

Circuit synthesize_ssp(const StateSpec &spec) {
  const SspPlan plan = plan_ssp(spec);
  std::vector<Angle> angles;
  for (const MergeStep &s : plan.steps) angles.emplace_back(2 * s.angle);
  return ssp_circuit(plan, angles);
}

Circuit ssp_ansatz(const std::vector<OnConfig> &configs,
                   const std::string &prefix) {
  if (configs.empty()) throw SynthesisError("no configurations");
  StateSpec spec{configs.front().size(), {}};
  const double c = 1.0 / std::sqrt(static_cast<double>(configs.size()));
  for (const OnConfig &x : configs) spec.entries.push_back({c, x});
  const SspPlan plan = plan_ssp(spec);
  std::vector<Angle> angles;
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    angles.push_back(Angle::symbol(prefix + std::to_string(i)));
  }
  return ssp_circuit(plan, angles);
}

}  // namespace mcprep
