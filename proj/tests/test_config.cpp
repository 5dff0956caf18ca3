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

#include <catch2/catch_amalgamated.hpp>

#include "mcprep/config.hpp"
#include "oracles.hpp"

using namespace mcprep;
using Catch::Approx;

TEST_CASE("bit strings round-trip and index by qubit 0 first", "[config]") {
  const OnConfig x = OnConfig::parse("1100");
  CHECK(x.size() == 4);
  CHECK(x.index() == 0b1100);
  CHECK(x[0]);
  CHECK(x[1]);
  CHECK_FALSE(x[2]);
  CHECK(x.str() == "1100");
  CHECK(x.weight() == 2);
  CHECK(x.flipped(3).str() == "1101");
  CHECK(x.with(0, false).str() == "0100");
  CHECK(OnConfig::parse("0011") < OnConfig::parse("0101"));
}

TEST_CASE("malformed bit strings are rejected", "[config]") {
  CHECK_THROWS_AS(OnConfig::parse(""), ConfigError);
  CHECK_THROWS_AS(OnConfig::parse("10a1"), ConfigError);
  CHECK_THROWS_AS(OnConfig::parse(std::string(kMaxQubits + 1, '0')), ConfigError);
}

TEST_CASE("hamming distance and differing qubits", "[config]") {
  const auto a = OnConfig::parse("11110000"), b = OnConfig::parse("11001100");
  CHECK(hamming(a, b) == 4);
  CHECK(xor_support(a, b) == std::vector<unsigned>{2, 3, 4, 5});
  CHECK(hamming(a, a) == 0);
}

TEST_CASE("excitation signs match the dense Jordan-Wigner operator", "[config]") {
  std::mt19937_64 rng(7);
  const unsigned n = 6;
  std::uniform_int_distribution<unsigned> q(0, n - 1);
  std::uniform_int_distribution<std::uint64_t> xs(0, (1u << n) - 1);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const bool dbl = trial % 2;
    std::vector<unsigned> pool(n);
    for (unsigned i = 0; i < n; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<unsigned> ann(pool.begin(), pool.begin() + (dbl ? 2 : 1));
    std::vector<unsigned> cre(pool.begin() + 2, pool.begin() + (dbl ? 4 : 3));
    std::sort(ann.begin(), ann.end());
    std::sort(cre.begin(), cre.end());
    const ExcitationOp op = ExcitationOp::make(ann, cre);
    const OnConfig x(n, xs(rng));
    const oracle::Mat e = oracle::excitation_matrix(n, ann, cre);
    const oracle::Vec out = e.col(x.index());
    const auto r = apply_excitation(op, x);
    if (!r) {
      CHECK(out.norm() == 0.0);
      continue;
    }
    ++checked;
    CHECK(out.norm() == Approx(1.0));
    CHECK(out(r->first.index()).real() == double(r->second));
  }
  CHECK(checked > 20);
}

TEST_CASE("excitation operators validate their indices", "[config]") {
  CHECK_THROWS_AS(ExcitationOp::make({0}, {0}), ConfigError);
  CHECK_THROWS_AS(ExcitationOp::make({1, 0}, {2, 3}), ConfigError);
  CHECK_THROWS_AS(ExcitationOp::make({0, 1}, {2}), ConfigError);
  CHECK_THROWS_AS(ExcitationOp::make({0, 1, 2}, {3, 4, 5}), ConfigError);
  CHECK_THROWS_AS(apply_excitation(ExcitationOp::make({0}, {9}),
                                   OnConfig::parse("1100")),
                  ConfigError);
}

TEST_CASE("CISD configurations agree with sector enumeration", "[config]") {
  for (auto [no, ne] : {std::pair{2u, 2u}, {3u, 2u}, {4u, 4u}, {5u, 4u}, {4u, 2u}}) {
    const auto configs = generate_cisd_configs(no, ne);
    REQUIRE(configs.front() == hartree_fock(2 * no, ne));
    std::set<std::string> got;
    for (const auto &c : configs) got.insert(c.str());
    CHECK(got.size() == configs.size());
    CHECK(got == oracle::brute_cisd(no, ne));
  }
}

TEST_CASE("two orbitals two electrons give the four-state span", "[config]") {
  const auto c = generate_cisd_configs(2, 2);
  std::set<std::string> got;
  for (const auto &x : c) got.insert(x.str());
  CHECK(got == std::set<std::string>{"1100", "1001", "0110", "0011"});
}

TEST_CASE("validate_spec prunes, rescales and rejects", "[config]") {
  StateSpec s{4, {{0.6, OnConfig::parse("1100")},
                  {0.8, OnConfig::parse("0011")},
                  {1e-15, OnConfig::parse("0101")}}};
  const StateSpec v = validate_spec(s);
  REQUIRE(v.size() == 2);
  CHECK(v.entries[0].coefficient == Approx(0.6));

  // Four-decimal table rows are within the accepted norm gap.
  StateSpec t{8, {{0.9690, OnConfig::parse("11110000")},
                  {-0.2345, OnConfig::parse("11001100")},
                  {0.0546, OnConfig::parse("10011001")},
                  {0.0547, OnConfig::parse("01100110")}}};
  const StateSpec tv = validate_spec(t);
  double n2 = 0;
  for (const auto &e : tv.entries) n2 += e.coefficient * e.coefficient;
  CHECK(n2 == Approx(1.0).epsilon(1e-14));

  StateSpec bad_norm{2, {{0.5, OnConfig::parse("10")}}};
  CHECK_THROWS_AS(validate_spec(bad_norm), SpecError);
  StateSpec dup{2, {{0.6, OnConfig::parse("10")}, {0.8, OnConfig::parse("10")}}};
  CHECK_THROWS_AS(validate_spec(dup), SpecError);
  StateSpec mixed{2, {{0.6, OnConfig::parse("10")}, {0.8, OnConfig::parse("11")}}};
  CHECK_THROWS_AS(validate_spec(mixed), SpecError);
  StateSpec width{2, {{0.6, OnConfig::parse("10")}, {0.8, OnConfig::parse("001")}}};
  CHECK_THROWS_AS(validate_spec(width), SpecError);
  StateSpec nan{2, {{std::nan(""), OnConfig::parse("10")}}};
  CHECK_THROWS_AS(validate_spec(nan), SpecError);
  CHECK_THROWS_AS(validate_spec(StateSpec{2, {}}), SpecError);
}

TEST_CASE("largest_first moves only the dominant entry", "[config]") {
  StateSpec s{2, {{0.3, OnConfig::parse("01")}, {-0.9, OnConfig::parse("10")}}};
  const StateSpec r = largest_first(s);
  CHECK(r.entries[0].config.str() == "10");
  CHECK(r.entries[1].config.str() == "01");
}
