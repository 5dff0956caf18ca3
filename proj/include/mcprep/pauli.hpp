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

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcprep {

class PauliError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Pauli word in symplectic form. Bit (n-1-q) of x/z belongs to qubit q,
 * matching the statevector index layout. Y is x = z = 1 and stands for
 * the Hermitian Y, i.e. Y = i X Z.
 */
class PauliWord {
 public:
  PauliWord() = default;
  PauliWord(unsigned n_qubits, std::uint64_t x, std::uint64_t z);
  static PauliWord identity(unsigned n_qubits);
  static PauliWord parse(std::string_view letters);

  unsigned size() const { return n_; }
  std::uint64_t x() const { return x_; }
  std::uint64_t z() const { return z_; }
  char letter(unsigned q) const;
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  std::string str() const;

  auto operator<=>(const PauliWord &) const = default;

 private:
  unsigned n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/** a . b = i^power word. */
struct PauliProduct {
  unsigned power;
  PauliWord word;
  std::complex<double> phase() const;
};

PauliProduct word_multiply(const PauliWord &a, const PauliWord &b);

/** P |b> = amplitude |b ^ x>. */
std::complex<double> word_action_phase(const PauliWord &p, std::uint64_t b);

class PauliSum {
 public:
  explicit PauliSum(unsigned n_qubits = 1) : n_(n_qubits) {}

  unsigned n_qubits() const { return n_; }
  const std::map<PauliWord, double> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /** Adds into any existing coefficient; drops the word if it hits zero. */
  PauliSum &add(const PauliWord &w, double coefficient);
  double coefficient(const PauliWord &w) const;
  double identity_coefficient() const;
  double l1_norm() const;
  PauliSum simplified(double tolerance) const;
  PauliSum without_identity() const;

  PauliSum operator+(const PauliSum &other) const;
  PauliSum operator*(double s) const;

 private:
  unsigned n_;
  std::map<PauliWord, double> terms_;
};

class TermCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kDefaultTermCap = 5000000;

/**
 * Product of two real sums. The result must be Hermitian-real: any
 * imaginary part left after collection above tolerance * |a|_1 |b|_1 is an
 * error.
 */
PauliSum multiply(const PauliSum &a, const PauliSum &b,
                  std::size_t term_cap = kDefaultTermCap);

/** H^m with like terms collected; requires H^m Hermitian (it is). */
PauliSum sum_power(
    const PauliSum &h, unsigned m, std::size_t term_cap = kDefaultTermCap);

}  // namespace mcprep
