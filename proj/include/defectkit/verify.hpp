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

#ifndef DEFECTKIT_VERIFY_HPP
#define DEFECTKIT_VERIFY_HPP

#include <complex>
#include <string>
#include <vector>

#include "defectkit/program.hpp"

namespace dk {

/// The unitary a program is checked against.  Targets act on the data
/// qubits; ancillas must enter and leave in |0>.
struct VerifyTarget {
  enum class Kind { identity, hadamard, ccz, swap_with_n, sequence };
  Kind kind = Kind::identity;
  int q = 0;                        // hadamard target / swap partner
  int x = 0, y = 0, z = 0;          // ccz triple
  std::vector<VerifyTarget> steps;  // sequence, applied in order

  static VerifyTarget identity() { return {}; }
  static VerifyTarget hadamard(int q) {
    VerifyTarget t;
    t.kind = Kind::hadamard;
    t.q = q;
    return t;
  }
  static VerifyTarget ccz(int x, int y, int z) {
    VerifyTarget t;
    t.kind = Kind::ccz;
    t.x = x;
    t.y = y;
    t.z = z;
    return t;
  }
  static VerifyTarget swap_with_n(int q) {
    VerifyTarget t;
    t.kind = Kind::swap_with_n;
    t.q = q;
    return t;
  }
  static VerifyTarget sequence(std::vector<VerifyTarget> steps) {
    VerifyTarget t;
    t.kind = Kind::sequence;
    t.steps = std::move(steps);
    return t;
  }

  std::string describe() const;
  void apply(std::vector<std::complex<double>>& state, const LogicalRegister& reg) const;
};

struct VerifyOptions {
  double tolerance = 1e-9;
  /// Branches are listed individually while 2^m stays at or below this cap;
  /// beyond it only the aggregate counts are reported.
  std::size_t explicit_branch_cap = 4096;
};

struct BranchRecord {
  enum class Verdict { pass, fail, vacuous };
  std::string outcomes;  // one character per measurement, '0' or '1'
  Verdict verdict = Verdict::pass;
  int first_fail_input = -1;
};

struct BranchReport {
  std::size_t measurement_count = 0;
  double branch_count = 0;  // exactly 2^measurement_count
  double passed = 0;
  double failed = 0;
  double vacuous = 0;
  bool all_passed = false;
  bool explicit_branches = false;
  std::vector<BranchRecord> branches;
  std::size_t peak_frontier = 0;  // widest set of distinct branch states

  std::string to_json(const std::string& program_name,
                      const std::string& target_name) const;
};

/// Exhaustive measurement-branch verification by dense simulation.  Every
/// outcome history is accounted for: branches whose states agree up to a
/// scalar (with identical pending classical control) evolve identically and
/// are merged rather than re-simulated, so programs with many measurements
/// stay tractable without sampling.  Each surviving branch is compared with
/// the target on all computational-basis inputs plus all single-qubit |+>
/// variations, under one scalar per branch.
BranchReport verify(const LogicalProgram& program, const VerifyTarget& target,
                    const VerifyOptions& options = {});

}  // namespace dk

#endif  // DEFECTKIT_VERIFY_HPP
