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

#include <doctest.h>

#include <set>
#include <stdexcept>

#include "defectkit/verify.hpp"

using namespace dk;

TEST_CASE("empty program verifies as the identity in one branch") {
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  auto report = verify(p, VerifyTarget::identity());
  CHECK(report.measurement_count == 0);
  CHECK(report.branch_count == 1);
  CHECK(report.all_passed);
  REQUIRE(report.branches.size() == 1);
  CHECK(report.branches[0].outcomes.empty());
}

TEST_CASE("a diagonal-phase error is not mistaken for the identity") {
  // CZ differs from the identity only on |11..>; a per-input phase check
  // would wrongly accept it, the per-branch scalar does not.
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  emit_global_cz12(p);  // CZ(1,2) CZ(a,b); ancillas stay |00>
  auto report = verify(p, VerifyTarget::identity());
  CHECK_FALSE(report.all_passed);
  CHECK(report.failed == 1);
}

TEST_CASE("transversal semantics at N=3 with zeroed ancillas") {
  // GlobalCCZ acts as CCZ(1,2,3); GlobalCZ12 acts as CZ(1,2).
  LogicalProgram ccz;
  ccz.reg = LogicalRegister::make(3);
  emit_global_ccz(ccz);
  CHECK(verify(ccz, VerifyTarget::ccz(1, 2, 3)).all_passed);

  LogicalProgram cz;
  cz.reg = LogicalRegister::make(3);
  emit_global_cz12(cz);
  // CZ(1,2) = CCZ conjugation is not available as a target; use sequence of
  // SWAPs?  Directly: CZ12 equals CCZ(1,2,3) on inputs with qubit 3 in |1>,
  // so verify against a custom sequence target is not expressible; instead
  // check the self-inverse property: applying it twice is the identity.
  emit_global_cz12(cz);
  CHECK(verify(cz, VerifyTarget::identity()).all_passed);
}

TEST_CASE("braid CNOT is an involution") {
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  emit_braid_cnot(p, 1);
  emit_braid_cnot(p, 1);
  CHECK(verify(p, VerifyTarget::identity()).all_passed);
}

TEST_CASE("H gadget teleports |0> to |+> on the ancilla route") {
  // Fragment-level oracle: prepare data qubit 3 in |0>, run H(3->a), move
  // back; the composite is H on qubit 3 up to the round trip; the full
  // compiled program is covered below.  Here: H(3->a) then H(a->b) then
  // H(b->3) must be H on 3.
  auto p = compile_H(3, 3);
  auto report = verify(p, VerifyTarget::hadamard(3));
  CHECK(report.measurement_count == 3);
  CHECK(report.branch_count == 8);
  CHECK(report.all_passed);
  CHECK(report.branches.size() == 8);
  std::set<std::string> outcomes;
  for (const auto& b : report.branches) outcomes.insert(b.outcomes);
  CHECK(outcomes.size() == 8);  // every history accounted once
}

TEST_CASE("compiled Hadamards verify on every data qubit at N=3") {
  for (int q : {1, 2}) {
    CAPTURE(q);
    auto p = compile_H(3, q);
    auto report = verify(p, VerifyTarget::hadamard(q));
    CHECK(report.measurement_count == 6);
    CHECK(report.branch_count == 64);
    CHECK(report.all_passed);
  }
}

TEST_CASE("Hadamard twice is the identity") {
  auto once = compile_H(3, 1);
  auto twice = once;
  append_program(twice, once);
  auto report = verify(twice, VerifyTarget::identity());
  CHECK(report.all_passed);
  CHECK(report.measurement_count == 12);
}

TEST_CASE("move gadget round trip preserves the state") {
  // I(1 -> a) then I(a -> 1) is the identity on the data.
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  expand_I_gadget(p, 1, kQubitA);
  expand_I_gadget(p, kQubitA, 1);
  emit_prep_z(p, kQubitA);
  emit_prep_z(p, kQubitB);
  auto report = verify(p, VerifyTarget::identity());
  CHECK(report.all_passed);
  CHECK(report.branch_count == 4);
}

TEST_CASE("deleted corrections fail exactly where they fire") {
  auto p = compile_H(3, 3);
  auto sites = p.correction_sites();
  REQUIRE(sites.size() == 3);
  for (std::size_t which = 0; which < sites.size(); ++which) {
    CAPTURE(which);
    auto mutant = p;
    int bit = mutant.instrs[sites[which]].bit;
    mutant.instrs.erase(mutant.instrs.begin() +
                        static_cast<std::ptrdiff_t>(sites[which]));
    auto report = verify(mutant, VerifyTarget::hadamard(3));
    CHECK_FALSE(report.all_passed);
    REQUIRE(report.explicit_branches);
    std::size_t fails = 0;
    for (const auto& b : report.branches) {
      bool fires = b.outcomes[std::size_t(bit)] == '1';
      CHECK((b.verdict == BranchRecord::Verdict::fail) == fires);
      fails += b.verdict == BranchRecord::Verdict::fail;
    }
    CHECK(fails == 4);  // half of the 8 branches
  }
}

TEST_CASE("verifier rejects preparations of entangled data") {
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  // Entangle 1 with a via the braid, then blindly reset a.
  emit_prep_x(p, kQubitA);
  emit_braid_cnot(p, 1);
  p.instrs.push_back(Instruction{Op::prep_z, kQubitA, 0, -1, 0});
  CHECK_THROWS_AS(verify(p, VerifyTarget::identity()), std::runtime_error);
}

TEST_CASE("vacuous branches are reported, not silently passed") {
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  // Measuring X on a fresh |+> ancilla can never give -1.
  emit_prep_x(p, kQubitA);
  emit_meas_x(p, kQubitA);
  emit_prep_z(p, kQubitA);
  auto report = verify(p, VerifyTarget::identity());
  CHECK(report.branch_count == 2);
  CHECK(report.passed == 1);
  CHECK(report.vacuous == 1);
  CHECK_FALSE(report.all_passed);
}

TEST_CASE("report serialises deterministically") {
  auto p = compile_H(3, 3);
  auto report = verify(p, VerifyTarget::hadamard(3));
  auto j1 = report.to_json("h:3", "H on qubit 3");
  auto j2 = verify(p, VerifyTarget::hadamard(3)).to_json("h:3", "H on qubit 3");
  CHECK(j1 == j2);
  CHECK(j1.find("\"all_passed\": true") != std::string::npos);
  CHECK(j1.find("\"branches\"") != std::string::npos);
}
