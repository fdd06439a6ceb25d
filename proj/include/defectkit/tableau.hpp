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

#ifndef DEFECTKIT_TABLEAU_HPP
#define DEFECTKIT_TABLEAU_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "defectkit/pauli.hpp"

namespace dk {

/// A Clifford map on n qubits, stored as the images of the X_i and Z_i
/// generators.  Tableaux are insensitive to global phase by construction;
/// the image phases (signs) are tracked exactly.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  explicit CliffordTableau(std::size_t n);  // identity

  static CliffordTableau identity(std::size_t n) { return CliffordTableau(n); }
  /// Validates symplectic consistency (throws std::invalid_argument).
  static CliffordTableau from_images(std::vector<PauliOperator> x_images,
                                     std::vector<PauliOperator> z_images);

  static CliffordTableau hadamard(std::size_t n, std::size_t q);
  static CliffordTableau phase_gate(std::size_t n, std::size_t q);  // S
  static CliffordTableau cnot(std::size_t n, std::size_t control, std::size_t target);
  static CliffordTableau cz(std::size_t n, std::size_t a, std::size_t b);
  /// Conjugation by a Pauli operator (flips signs of anticommuting images).
  static CliffordTableau pauli_conjugation(const PauliOperator& p);

  std::size_t num_qubits() const { return n_; }
  const PauliOperator& x_image(std::size_t i) const { return x_images_[i]; }
  const PauliOperator& z_image(std::size_t i) const { return z_images_[i]; }

  /// Image commutation relations match those of the generators they replace.
  bool is_symplectic() const;

  /// Stable text key; phase-sensitive iff with_phases.
  std::string key(bool with_phases = true) const;

  bool operator==(const CliffordTableau& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> x_images_;
  std::vector<PauliOperator> z_images_;
};

/// t p t^dag, by linear extension over the generator images, exact phase.
PauliOperator conjugate(const CliffordTableau& t, const PauliOperator& p);

/// Tableau of t2 after t1 (t1 applied first).
CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2);

/// Compare generator images ignoring their phase fields.
bool equals_up_to_phase(const CliffordTableau& t1, const CliffordTableau& t2);
/// Exact identity, phases included.
bool is_identity(const CliffordTableau& t);

/// Element equality used during group enumeration.  Tableaux carry no global
/// phase, so `tableau_exact` already compares maps projectively; `ignore_image_phases`
/// additionally identifies maps differing by composition with Pauli conjugations.
enum class GroupPhaseMode { tableau_exact, ignore_image_phases };

struct GroupReport {
  bool closed = false;
  std::size_t order = 0;
  bool truncated = false;
  std::size_t bound = 0;
  std::vector<CliffordTableau> elements;
};

/// Breadth-first closure of the generators under compose, capped at `bound`
/// elements.  Exceeding the bound is reported via `truncated`, not an error.
GroupReport generate_group(std::span<const CliffordTableau> generators,
                           std::size_t bound,
                           GroupPhaseMode mode = GroupPhaseMode::tableau_exact);

}  // namespace dk

#endif  // DEFECTKIT_TABLEAU_HPP
