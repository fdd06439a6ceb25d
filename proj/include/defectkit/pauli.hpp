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

#ifndef DEFECTKIT_PAULI_HPP
#define DEFECTKIT_PAULI_HPP

#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dk {

/// An n-qubit Pauli operator in binary-symplectic form.
///
/// The operator is i^phase * (product over qubits of the letter at that
/// qubit), where the letter is determined by the (x, z) bit pair:
/// (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y.  The phase is an exponent of i,
/// tracked exactly mod 4, with the convention Y = iXZ.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n);

  static PauliOperator identity(std::size_t n) { return PauliOperator(n); }
  static PauliOperator single(std::size_t n, std::size_t qubit, char letter);
  /// Parses e.g. "+XIZ", "-iYY", "ZZ".  Allowed prefixes: "+", "-", "i", "-i", "+i".
  static PauliOperator from_string(std::string_view text);

  std::size_t num_qubits() const { return n_; }
  bool x_bit(std::size_t q) const;
  bool z_bit(std::size_t q) const;
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);
  char letter(std::size_t q) const;

  /// Exponent of i, in {0,1,2,3}.
  unsigned phase() const { return phase_; }
  void set_phase(unsigned p) { phase_ = p & 3u; }

  /// Number of qubits with a non-identity letter.
  std::size_t weight() const;
  /// True iff every letter is I and the phase is 0.
  bool is_identity() const;
  /// True iff every letter is I (any phase).
  bool is_identity_up_to_phase() const;
  /// True iff the letters match, ignoring phase.
  bool same_letters(const PauliOperator& other) const;

  bool commutes_with(const PauliOperator& other) const;

  std::string str() const;

  bool operator==(const PauliOperator& other) const = default;

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  friend PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

 private:
  std::size_t n_ = 0;
  unsigned phase_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// Exact product pq, phase tracked mod 4.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
inline PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
  return multiply(p, q);
}

/// True iff the symplectic inner product of (x, z) vectors vanishes over GF(2).
bool commutes(const PauliOperator& p, const PauliOperator& q);

}  // namespace dk

#endif  // DEFECTKIT_PAULI_HPP
