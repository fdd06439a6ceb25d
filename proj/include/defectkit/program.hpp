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

#ifndef DEFECTKIT_PROGRAM_HPP
#define DEFECTKIT_PROGRAM_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace dk {

// Logical-level programs over the N+2 encoded qubits of the puncture
// register: data qubits 1..N (N odd, qubit N on the threaded defect, data
// pair k on qubits 2k-1 and 2k) plus ancilla qubits a and b.

/// Qubit handle: 1..N for data, kQubitA / kQubitB for the ancillas.
using LogicalQubit = int;
inline constexpr LogicalQubit kQubitA = -1;
inline constexpr LogicalQubit kQubitB = -2;

struct LogicalRegister {
  int n_data = 3;

  static LogicalRegister make(int n, int qubit_cap = 12);

  int total() const { return n_data + 2; }
  int pair_count() const { return (n_data - 1) / 2; }
  /// Simulation bit index of a logical qubit.
  int bit_index(LogicalQubit q) const;
  bool valid(LogicalQubit q) const;
  std::string qubit_name(LogicalQubit q) const;
};

enum class Op {
  prep_z,      // reset to |0>
  prep_x,      // reset to |+>
  meas_x,      // X measurement into a classical bit (1 = outcome -1)
  meas_z,      // Z measurement into a classical bit (1 = outcome -1)
  pauli_x,     // X, optionally conditioned on a bit being 1
  pauli_z,     // Z, optionally conditioned on a bit being 1
  cz,          // CZ(N, x), x != N
  global_cz12, // transversal inter-code CZ: CZ(a,b) prod_k CZ(2k-1, 2k)
  global_ccz,  // transversal CCZ: CCZ(a,b,N) prod_k CCZ(2k-1, 2k, N)
  braid_cnot,  // hole braid for pair k: CNOT(a -> 2k-1) CNOT(2k -> b)
};

struct Instruction {
  Op op;
  LogicalQubit q = 0;        // prep/meas/pauli target; cz partner x
  int pair = 0;              // braid_cnot pair index, 1-based
  int bit = -1;              // meas: destination bit; pauli: condition (-1 = always)
  LogicalQubit transfer = 0; // meas only: qubit now holding the consumed state
};

struct GadgetRecord {
  enum class Kind { hadamard, move };
  Kind kind;
  LogicalQubit x = 0;
  LogicalQubit y = 0;
  std::size_t begin = 0;       // instruction range [begin, end)
  std::size_t end = 0;
  std::size_t correction = 0;  // index of the conditional correction
};

struct LogicalProgram {
  LogicalRegister reg;
  std::vector<Instruction> instrs;
  std::vector<std::string> bit_names;
  std::vector<GadgetRecord> gadgets;

  int new_bit(const std::string& name);
  std::size_t measurement_count() const;
  /// Indices of all conditional Pauli corrections.
  std::vector<std::size_t> correction_sites() const;
};

// Primitive emission helpers.
void emit_prep_z(LogicalProgram& p, LogicalQubit q);
void emit_prep_x(LogicalProgram& p, LogicalQubit q);
int emit_meas_x(LogicalProgram& p, LogicalQubit q, LogicalQubit transfer = 0);
int emit_meas_z(LogicalProgram& p, LogicalQubit q, LogicalQubit transfer = 0);
void emit_pauli_x(LogicalProgram& p, LogicalQubit q, int condition_bit);
void emit_pauli_z(LogicalProgram& p, LogicalQubit q, int condition_bit);
void emit_cz(LogicalProgram& p, LogicalQubit x);  // the other leg is qubit N
void emit_global_cz12(LogicalProgram& p);
void emit_global_ccz(LogicalProgram& p);
void emit_braid_cnot(LogicalProgram& p, int pair);

/// One-bit state-injection step: |psi> on x exits as H|psi> on y, with the
/// X correction fired by the -1 outcome.  Requires a CZ route between x and
/// y: direct when either is qubit N, via the double transversal-CZ trick for
/// the ancilla pair.
void expand_H_gadget(LogicalProgram& p, LogicalQubit x, LogicalQubit y);

/// One-bit teleportation moving |psi> from x to y, in whichever direction
/// the pair's braid CNOT supports; the idle side of the braid is absorbed by
/// preparing the unused ancilla.
void expand_I_gadget(LogicalProgram& p, LogicalQubit x, LogicalQubit y);

LogicalProgram compile_H(int n_data, int q);
LogicalProgram compile_CCZ(int n_data, int x, int y, int z);
LogicalProgram compile_SWAP(int n_data, int x);

/// Appends src to dst, renumbering classical bits.
void append_program(LogicalProgram& dst, const LogicalProgram& src);

struct ResourceCount {
  std::size_t instructions = 0;
  std::size_t h_gadgets = 0;
  std::size_t move_gadgets = 0;
  std::size_t measurements = 0;
  std::size_t preparations = 0;
  std::size_t conditional_paulis = 0;
  std::size_t cz_count = 0;
  std::size_t global_transversal = 0;  // global_cz12 + global_ccz
  std::size_t braid_operations = 0;
};

ResourceCount resource_count(const LogicalProgram& p);

std::string instruction_to_text(const LogicalProgram& p, const Instruction& instr);
/// One instruction per line, classical bits named.
std::string program_to_text(const LogicalProgram& p);

/// Static dataflow check: no preparation or untracked measurement of a qubit
/// holding unconsumed logical data.  Throws std::logic_error on violation.
void check_dataflow(const LogicalProgram& p);

}  // namespace dk

#endif  // DEFECTKIT_PROGRAM_HPP
