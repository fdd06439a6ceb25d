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

#ifndef DEFECTKIT_DEFORM_HPP
#define DEFECTKIT_DEFORM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "defectkit/lattice.hpp"
#include "defectkit/tableau.hpp"

namespace dk {

enum class StepKind { carve, fill };

/// One projective deformation step: carve measures a single-qubit Pauli to
/// grow a hole; fill re-measures the pristine stabiliser at a vacated site.
struct DeformationStep {
  StepKind kind = StepKind::carve;
  char basis = 'Z';  // carve basis; ignored for fill
  Coord target;      // qubit point (carve) or stabiliser site (fill)
};

/// Direction of a one-site hole translation.
enum class Dir { up, down, left, right };

struct HoleMove {
  std::size_t hole_index = 0;
  Dir dir = Dir::right;
};

struct BraidScript {
  std::vector<DeformationStep> steps;
  std::vector<HoleMove> moves;  // grouping metadata, in execution order
};

/// Mutable stabiliser-measurement state: current generators, logical
/// representatives of the initial basis, and the byproduct Pauli frame that
/// normalises every forced outcome to +1.
class DeformationState {
 public:
  explicit DeformationState(const PlanarCode& deformable);

  /// Standard stabiliser measurement update.  Throws std::invalid_argument
  /// when M would measure a nontrivial logical operator.
  void apply_measurement(const PauliOperator& m);

  const std::vector<PauliOperator>& generators() const { return generators_; }
  const std::vector<std::pair<PauliOperator, PauliOperator>>& representatives()
      const {
    return reps_;
  }
  const PauliOperator& byproduct_frame() const { return frame_; }
  std::size_t num_qubits() const { return n_; }
  std::size_t k() const;

 private:
  std::size_t n_ = 0;
  std::vector<PauliOperator> generators_;
  std::vector<std::pair<PauliOperator, PauliOperator>> reps_;
  PauliOperator frame_;
};

struct RunOptions {
  /// When positive, checked after every completed translation by exhaustive
  /// search below the floor (desk scale only).
  std::size_t distance_floor = 0;
};

struct BraidResult {
  CliffordTableau tableau;       // induced map on the k logical qubits
  PauliOperator byproduct;       // accumulated frame
  std::size_t checkpoints = 0;   // distance checks performed
};

/// Generates the carve/fill script that walks one hole along a lattice path
/// (one translation per direction entry).  Throws when a translation would
/// collide with another hole or the outer boundary.
BraidScript move_hole(const PlanarCode& code, std::size_t hole_index,
                      const std::vector<Dir>& path);

/// Runs a braid script on the stabilised-hole twin of the code and expresses
/// every final logical representative in the initial logical basis.  The
/// hole configuration must return to its initial state.
BraidResult run_braid(const PlanarCode& code, const BraidScript& script,
                      const RunOptions& options = {});

std::string script_to_text(const BraidScript& script);
BraidScript script_from_text(const std::string& text);

}  // namespace dk

#endif  // DEFECTKIT_DEFORM_HPP
