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

#include "mcprep/pauli.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

namespace mcprep {

namespace {

constexpr unsigned kMaxPauliQubits = 62;

std::complex<double> i_power(unsigned k) {
  switch (k & 3U) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

}  // namespace

PauliWord::PauliWord(unsigned n_qubits, std::uint64_t x, std::uint64_t z)
    : n_(n_qubits), x_(x), z_(z) {
  if (n_qubits == 0 || n_qubits > kMaxPauliQubits) {
    throw PauliError("unsupported Pauli word length " +
                     std::to_string(n_qubits));
  }
  if ((x >> n_qubits) != 0 || (z >> n_qubits) != 0) {
    throw PauliError("Pauli masks exceed the word length");
  }
}

PauliWord PauliWord::identity(unsigned n_qubits) {
  return PauliWord(n_qubits, 0, 0);
}

PauliWord PauliWord::parse(std::string_view letters) {
  const unsigned n = static_cast<unsigned>(letters.size());
  if (n == 0) throw PauliError("empty Pauli word");
  std::uint64_t x = 0, z = 0;
  for (unsigned q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      default:
        throw PauliError(std::string("bad Pauli letter '") + letters[q] + "'");
    }
  }
  return PauliWord(n, x, z);
}

char PauliWord::letter(unsigned q) const {
  const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - q);
  const bool xb = x_ & bit, zb = z_ & bit;
  return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

std::string PauliWord::str() const {
  std::string s(n_, 'I');
  for (unsigned q = 0; q < n_; ++q) s[q] = letter(q);
  return s;
}

std::complex<double> PauliProduct::phase() const { return i_power(power); }

PauliProduct word_multiply(const PauliWord &a, const PauliWord &b) {
  if (a.size() != b.size()) throw PauliError("Pauli word lengths differ");
  // Per qubit, XY = iZ, YZ = iX, ZX = iY and the reverses carry -i.
  const std::uint64_t ax = a.x(), az = a.z(), bx = b.x(), bz = b.z();
  const std::uint64_t a_x = ax & ~az, a_y = ax & az, a_z = ~ax & az;
  const std::uint64_t b_x = bx & ~bz, b_y = bx & bz, b_z = ~bx & bz;
  const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
  const std::uint64_t minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
  const int k = std::popcount(plus) - std::popcount(minus);
  return {static_cast<unsigned>(((k % 4) + 4) % 4),
          PauliWord(a.size(), ax ^ bx, az ^ bz)};
}

std::complex<double> word_action_phase(const PauliWord &p, std::uint64_t b) {
  // Y = iXZ: Z first contributes (-1)^{b.z}, the XZ overlaps give i each.
  const unsigned k = static_cast<unsigned>(std::popcount(p.x() & p.z())) +
                     2U * static_cast<unsigned>(std::popcount(b & p.z()));
  return i_power(k);
}

PauliSum &PauliSum::add(const PauliWord &w, double coefficient) {
  if (w.size() != n_) throw PauliError("Pauli word length does not match sum");
  if (coefficient == 0.0) return *this;
  auto [it, inserted] = terms_.emplace(w, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
  return *this;
}

double PauliSum::coefficient(const PauliWord &w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::identity_coefficient() const {
  return coefficient(PauliWord::identity(n_));
}

double PauliSum::l1_norm() const {
  double s = 0;
  for (const auto &[w, c] : terms_) s += std::abs(c);
  return s;
}

PauliSum PauliSum::simplified(double tolerance) const {
  PauliSum out(n_);
  for (const auto &[w, c] : terms_) {
    if (std::abs(c) > tolerance) out.terms_.emplace(w, c);
  }
  return out;
}

PauliSum PauliSum::without_identity() const {
  PauliSum out = *this;
  out.terms_.erase(PauliWord::identity(n_));
  return out;
}

PauliSum PauliSum::operator+(const PauliSum &other) const {
  if (other.n_ != n_) throw PauliError("adding sums of unequal width");
  PauliSum out = *this;
  for (const auto &[w, c] : other.terms_) out.add(w, c);
  return out;
}

PauliSum PauliSum::operator*(double s) const {
  PauliSum out(n_);
  if (s == 0.0) return out;
  for (const auto &[w, c] : terms_) out.terms_.emplace(w, c * s);
  return out;
}

namespace {

struct WordHash {
  std::size_t operator()(const PauliWord &w) const {
    return std::hash<std::uint64_t>()(w.x() * 0x9E3779B97F4A7C15ULL ^ w.z());
  }
};

}  // namespace

PauliSum multiply(const PauliSum &a, const PauliSum &b, std::size_t term_cap) {
  if (a.n_qubits() != b.n_qubits()) {
    throw PauliError("multiplying sums of unequal width");
  }
  std::unordered_map<PauliWord, std::complex<double>, WordHash> acc;
  for (const auto &[wa, ca] : a.terms()) {
    for (const auto &[wb, cb] : b.terms()) {
      PauliProduct p = word_multiply(wa, wb);
      acc[p.word] += p.phase() * (ca * cb);
      if (acc.size() > term_cap) {
        throw TermCapExceeded("Pauli product exceeds " +
                              std::to_string(term_cap) + " terms");
      }
    }
  }
  const double scale = std::max(1.0, a.l1_norm() * b.l1_norm());
  PauliSum out(a.n_qubits());
  // Map insertion keeps the result order independent of hashing.
  std::map<PauliWord, std::complex<double>> ordered(acc.begin(), acc.end());
  for (const auto &[w, c] : ordered) {
    if (std::abs(c.imag()) > 1e-12 * scale) {
      throw PauliError("product is not Hermitian: word " + w.str() +
                       " has imaginary coefficient");
    }
    if (std::abs(c.real()) > 1e-15 * scale) out.add(w, c.real());
  }
  return out;
}

PauliSum sum_power(const PauliSum &h, unsigned m, std::size_t term_cap) {
  if (m == 0) throw PauliError("sum_power needs m >= 1");
  PauliSum out = h;
  for (unsigned k = 1; k < m; ++k) out = multiply(out, h, term_cap);
  return out;
}

}  // namespace mcprep
