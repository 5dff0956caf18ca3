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

namespace {

double binomial(unsigned n, unsigned k) {
  double r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

CumulantSet cumulants(const std::vector<double> &mu) {
  CumulantSet out;
  // mu[k - 1] is <H^k>; <H^0> = 1.
  auto moment = [&](unsigned k) { return k == 0 ? 1.0 : mu.at(k - 1); };
  for (unsigned m = 1; m <= mu.size(); ++m) {
    double v = moment(m);
    for (unsigned p = 0; p + 2 <= m; ++p) {
      v -= binomial(m - 1, p) * out.c[p] * moment(m - p - 1);
    }
    out.c.push_back(v);
  }
  return out;
}

double qcm4(const CumulantSet &c) {
  if (c.c.size() < 4) throw std::invalid_argument("QCM4 needs four cumulants");
  const double c1 = c[1], c2 = c[2], c3 = c[3], c4 = c[4];
  if (c2 < kNearEigenstate) return c1;
  const double disc = 3 * c3 * c3 - 2 * c2 * c4;
  const double denom = c3 * c3 - c2 * c4;
  if (disc <= kCumulantGuard || std::abs(denom) <= kCumulantGuard) {
    std::ostringstream os;
    os << "QCM4 undefined: 3c3^2 - 2c2c4 = " << disc
       << ", c3^2 - c2c4 = " << denom;
    throw DegenerateCumulants(os.str());
  }
  return c1 - c2 * c2 / denom * (std::sqrt(disc) - c3);
}

double cmx2(const CumulantSet &c) {
  if (c.c.size() < 3) throw std::invalid_argument("CMX2 needs three cumulants");
  const double c1 = c[1], c2 = c[2], c3 = c[3];
  if (c2 < kNearEigenstate) return c1;
  if (std::abs(c3) <= kNearEigenstate) {
    throw ZeroThirdCumulant("CMX2 undefined: third cumulant vanishes");
  }
  return c1 - c2 * c2 / c3;
}

}  // namespace mcprep
