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

#include <stdexcept>

#include "defectkit/program.hpp"
#include "defectkit/tableau.hpp"
#include "defectkit/verify.hpp"

using namespace dk;

TEST_CASE("register validation") {
  CHECK_THROWS_AS(LogicalRegister::make(4), std::invalid_argument);
  CHECK_THROWS_AS(LogicalRegister::make(1), std::invalid_argument);
  CHECK_THROWS_AS(LogicalRegister::make(11), std::invalid_argument);  // 13 > cap
  auto reg = LogicalRegister::make(5);
  CHECK(reg.total() == 7);
  CHECK(reg.pair_count() == 2);
  CHECK(reg.bit_index(1) == 0);
  CHECK(reg.bit_index(5) == 4);
  CHECK(reg.bit_index(kQubitA) == 5);
  CHECK(reg.bit_index(kQubitB) == 6);
}

TEST_CASE("gadget routing rules") {
  LogicalProgram p;
  p.reg = LogicalRegister::make(5);
  // No CZ route between two data qubits off the threaded defect.
  CHECK_THROWS_AS(expand_H_gadget(p, 1, 2), std::invalid_argument);
  // No braid route between a data qubit and the wrong ancilla.
  CHECK_THROWS_AS(expand_I_gadget(p, 1, kQubitB), std::invalid_argument);
  CHECK_THROWS_AS(expand_I_gadget(p, 2, kQubitA), std::invalid_argument);
}

TEST_CASE("compiled Hadamard program shapes") {
  auto h3 = compile_H(3, 3);
  CHECK(h3.measurement_count() == 3);
  CHECK(resource_count(h3).h_gadgets == 3);
  CHECK(resource_count(h3).move_gadgets == 0);

  auto h1 = compile_H(3, 1);
  CHECK(h1.measurement_count() == 6);
  CHECK(resource_count(h1).h_gadgets == 5);
  CHECK(resource_count(h1).move_gadgets == 1);
  CHECK(resource_count(h1).braid_operations == 1);

  auto h2 = compile_H(3, 2);
  CHECK(h2.measurement_count() == 6);

  auto h4 = compile_H(5, 4);
  CHECK(h4.measurement_count() == 6);
  // Uses the second defect pair.
  bool uses_pair_2 = false;
  for (const auto& i : h4.instrs) {
    uses_pair_2 |= i.op == Op::braid_cnot && i.pair == 2;
  }
  CHECK(uses_pair_2);
}

TEST_CASE("compiled CCZ program shapes") {
  auto simple = compile_CCZ(3, 1, 2, 3);
  // Single transversal application plus the ancilla reset.
  CHECK(resource_count(simple).global_transversal == 1);
  CHECK(simple.measurement_count() == 0);

  auto aligned = compile_CCZ(5, 1, 2, 5);
  CHECK(resource_count(aligned).global_transversal == 2);
  CHECK(resource_count(aligned).move_gadgets == 2);
  CHECK(aligned.measurement_count() == 2);

  auto swapped = compile_CCZ(5, 1, 3, 5);
  CHECK(swapped.measurement_count() == 2 + 6 * 24);

  CHECK_THROWS_AS(compile_CCZ(3, 1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(compile_CCZ(3, 1, 2, 4), std::invalid_argument);
}

TEST_CASE("swap skeleton is the three-CNOT identity") {
  // H CZ H with H on either leg turns CZ into CNOT; the alternation is SWAP.
  std::size_t n = 2;
  auto h0 = CliffordTableau::hadamard(n, 0);
  auto h1 = CliffordTableau::hadamard(n, 1);
  auto cz = CliffordTableau::cz(n, 0, 1);
  auto block = [&](const CliffordTableau& h) {
    return compose(compose(h, cz), h);
  };
  auto swap = compose(compose(block(h1), block(h0)), block(h1));
  CHECK(conjugate(swap, PauliOperator::from_string("XI")).str() == "+IX");
  CHECK(conjugate(swap, PauliOperator::from_string("IZ")).str() == "+ZI");
  auto cnot01 = CliffordTableau::cnot(n, 0, 1);
  auto cnot10 = CliffordTableau::cnot(n, 1, 0);
  CHECK(swap == compose(compose(cnot01, cnot10), cnot01));
}

TEST_CASE("program text lists instructions with named bits") {
  auto p = compile_H(3, 3);
  auto text = program_to_text(p);
  CHECK(text.find("prep_x a") != std::string::npos);
  CHECK(text.find("cz 3 a") != std::string::npos);
  CHECK(text.find("meas_x 3 -> m0") != std::string::npos);
  CHECK(text.find("x a if m0") != std::string::npos);
  CHECK(text.find("global_cz12") != std::string::npos);
}

TEST_CASE("dataflow checker catches unsafe programs") {
  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  emit_prep_z(p, 1);  // qubit 1 holds data
  CHECK_THROWS_AS(check_dataflow(p), std::logic_error);

  LogicalProgram q;
  q.reg = LogicalRegister::make(3);
  emit_meas_x(q, 2);  // untracked measurement of live data
  CHECK_THROWS_AS(check_dataflow(q), std::logic_error);

  LogicalProgram ok;
  ok.reg = LogicalRegister::make(3);
  emit_prep_x(ok, kQubitA);
  emit_cz(ok, kQubitA);
  emit_meas_x(ok, 3, kQubitA);  // state moves 3 -> a ... but 3 must end live
  CHECK_THROWS_AS(check_dataflow(ok), std::logic_error);
}

TEST_CASE("append_program renumbers classical bits") {
  auto a = compile_H(3, 3);
  auto b = compile_H(3, 3);
  auto combined = a;
  append_program(&combined == &a ? combined : combined, b);
  CHECK(combined.measurement_count() == 6);
  CHECK(combined.bit_names.size() == a.bit_names.size() + b.bit_names.size());
  // Conditions in the second half reference the renumbered bits.
  auto sites = combined.correction_sites();
  REQUIRE(sites.size() == 6);
  CHECK(combined.instrs[sites.back()].bit >= int(a.bit_names.size()));
}
