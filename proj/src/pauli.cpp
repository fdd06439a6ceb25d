// Copyright 2026 The defectkit Authors
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

#include "defectkit/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace dk {

namespace {

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

std::size_t popcount_and(std::span<const std::uint64_t> a,
                         std::span<const std::uint64_t> b) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n)
    : n_(n), phase_(0), x_(word_count(n), 0), z_(word_count(n), 0) {}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char letter) {
  if (qubit >= n) {
    throw std::invalid_argument("PauliOperator::single: qubit out of range");
  }
  PauliOperator p(n);
  switch (letter) {
    case 'I':
      break;
    case 'X':
      p.set_x(qubit, true);
      break;
    case 'Z':
      p.set_z(qubit, true);
      break;
    case 'Y':
      p.set_x(qubit, true);
      p.set_z(qubit, true);
      break;
    default:
      throw std::invalid_argument("PauliOperator::single: unknown letter");
  }
  return p;
}

PauliOperator PauliOperator::from_string(std::string_view text) {
  unsigned phase = 0;
  if (text.starts_with("-i")) {
    phase = 3;
    text.remove_prefix(2);
  } else if (text.starts_with("+i") || text.starts_with("i")) {
    phase = 1;
    text.remove_prefix(text.starts_with("+i") ? 2 : 1);
  } else if (text.starts_with("-")) {
    phase = 2;
    text.remove_prefix(1);
  } else if (text.starts_with("+")) {
    text.remove_prefix(1);
  }
  PauliOperator p(text.size());
  p.set_phase(phase);
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I':
      case '_':
        break;
      case 'X':
        p.set_x(q, true);
        break;
      case 'Z':
        p.set_z(q, true);
        break;
      case 'Y':
        p.set_x(q, true);
        p.set_z(q, true);
        break;
      default:
        throw std::invalid_argument("PauliOperator::from_string: bad letter '" +
                                    std::string(1, text[q]) + "'");
    }
  }
  return p;
}

bool PauliOperator::x_bit(std::size_t q) const {
  return (x_[q / 64] >> (q % 64)) & 1u;
}

bool PauliOperator::z_bit(std::size_t q) const {
  return (z_[q / 64] >> (q % 64)) & 1u;
}

void PauliOperator::set_x(std::size_t q, bool v) {
  std::uint64_t mask = std::uint64_t{1} << (q % 64);
  if (v) {
    x_[q / 64] |= mask;
  } else {
    x_[q / 64] &= ~mask;
  }
}

void PauliOperator::set_z(std::size_t q, bool v) {
  std::uint64_t mask = std::uint64_t{1} << (q % 64);
  if (v) {
    z_[q / 64] |= mask;
  } else {
    z_[q / 64] &= ~mask;
  }
}

char PauliOperator::letter(std::size_t q) const {
  bool x = x_bit(q);
  bool z = z_bit(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::size_t PauliOperator::weight() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(x_[i] | z_[i]));
  }
  return total;
}

bool PauliOperator::is_identity() const {
  return phase_ == 0 && is_identity_up_to_phase();
}

bool PauliOperator::is_identity_up_to_phase() const {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] != 0 || z_[i] != 0) return false;
  }
  return true;
}

bool PauliOperator::same_letters(const PauliOperator& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  return commutes(*this, other);
}

std::string PauliOperator::str() const {
  static const char* prefixes[4] = {"+", "i", "-", "-i"};
  std::string out = prefixes[phase_];
  out.reserve(n_ + 2);
  for (std::size_t q = 0; q < n_; ++q) {
    out.push_back(letter(q));
  }
  return out;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n_ != q.n_) {
    throw std::invalid_argument("multiply: qubit count mismatch");
  }
  PauliOperator r(p.n_);
  // Work in the XZ normal form i^a X^x Z^z, where moving q's X part past
  // p's Z part contributes (-1)^{z_p . x_q}.  The stored phase counts Y
  // letters as neutral, so convert with the Y-weight of each operand.
  std::size_t y_p = popcount_and(p.x_, p.z_);
  std::size_t y_q = popcount_and(q.x_, q.z_);
  std::size_t cross = popcount_and(p.z_, q.x_);
  for (std::size_t i = 0; i < r.x_.size(); ++i) {
    r.x_[i] = p.x_[i] ^ q.x_[i];
    r.z_[i] = p.z_[i] ^ q.z_[i];
  }
  std::size_t y_r = popcount_and(r.x_, r.z_);
  unsigned phase = (p.phase_ + q.phase_ + y_p + y_q + 2 * cross + 4 - (y_r & 3)) & 3u;
  r.phase_ = phase;
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("commutes: qubit count mismatch");
  }
  std::size_t s = popcount_and(p.x_words(), q.z_words()) +
                  popcount_and(p.z_words(), q.x_words());
  return (s & 1u) == 0;
}

}  // namespace dk
