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

#include "defectkit/program.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dk {

LogicalRegister LogicalRegister::make(int n, int qubit_cap) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("N must be odd and at least 3");
  }
  if (n + 2 > qubit_cap) {
    throw std::invalid_argument("register needs " + std::to_string(n + 2) +
                                " simulated qubits, above the cap of " +
                                std::to_string(qubit_cap) +
                                "; raise the cap or reduce N");
  }
  return LogicalRegister{n};
}

int LogicalRegister::bit_index(LogicalQubit q) const {
  if (q == kQubitA) return n_data;
  if (q == kQubitB) return n_data + 1;
  if (q >= 1 && q <= n_data) return q - 1;
  throw std::invalid_argument("invalid logical qubit");
}

bool LogicalRegister::valid(LogicalQubit q) const {
  return q == kQubitA || q == kQubitB || (q >= 1 && q <= n_data);
}

std::string LogicalRegister::qubit_name(LogicalQubit q) const {
  if (q == kQubitA) return "a";
  if (q == kQubitB) return "b";
  return std::to_string(q);
}

int LogicalProgram::new_bit(const std::string& name) {
  bit_names.push_back(name);
  return static_cast<int>(bit_names.size()) - 1;
}

std::size_t LogicalProgram::measurement_count() const {
  std::size_t count = 0;
  for (const auto& i : instrs) {
    count += i.op == Op::meas_x || i.op == Op::meas_z;
  }
  return count;
}

std::vector<std::size_t> LogicalProgram::correction_sites() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    if ((instrs[i].op == Op::pauli_x || instrs[i].op == Op::pauli_z) &&
        instrs[i].bit >= 0) {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

void require_qubit(const LogicalProgram& p, LogicalQubit q) {
  if (!p.reg.valid(q)) {
    throw std::invalid_argument("instruction references an invalid qubit");
  }
}

}  // namespace

void emit_prep_z(LogicalProgram& p, LogicalQubit q) {
  require_qubit(p, q);
  p.instrs.push_back(Instruction{Op::prep_z, q, 0, -1, 0});
}

void emit_prep_x(LogicalProgram& p, LogicalQubit q) {
  require_qubit(p, q);
  p.instrs.push_back(Instruction{Op::prep_x, q, 0, -1, 0});
}

int emit_meas_x(LogicalProgram& p, LogicalQubit q, LogicalQubit transfer) {
  require_qubit(p, q);
  int bit = p.new_bit("m" + std::to_string(p.bit_names.size()));
  p.instrs.push_back(Instruction{Op::meas_x, q, 0, bit, transfer});
  return bit;
}

int emit_meas_z(LogicalProgram& p, LogicalQubit q, LogicalQubit transfer) {
  require_qubit(p, q);
  int bit = p.new_bit("m" + std::to_string(p.bit_names.size()));
  p.instrs.push_back(Instruction{Op::meas_z, q, 0, bit, transfer});
  return bit;
}

void emit_pauli_x(LogicalProgram& p, LogicalQubit q, int condition_bit) {
  require_qubit(p, q);
  p.instrs.push_back(Instruction{Op::pauli_x, q, 0, condition_bit, 0});
}

void emit_pauli_z(LogicalProgram& p, LogicalQubit q, int condition_bit) {
  require_qubit(p, q);
  p.instrs.push_back(Instruction{Op::pauli_z, q, 0, condition_bit, 0});
}

void emit_cz(LogicalProgram& p, LogicalQubit x) {
  require_qubit(p, x);
  if (x == p.reg.n_data) {
    throw std::invalid_argument("cz: the partner of qubit N must differ from N");
  }
  p.instrs.push_back(Instruction{Op::cz, x, 0, -1, 0});
}

void emit_global_cz12(LogicalProgram& p) {
  p.instrs.push_back(Instruction{Op::global_cz12, 0, 0, -1, 0});
}

void emit_global_ccz(LogicalProgram& p) {
  p.instrs.push_back(Instruction{Op::global_ccz, 0, 0, -1, 0});
}

void emit_braid_cnot(LogicalProgram& p, int pair) {
  if (pair < 1 || pair > p.reg.pair_count()) {
    throw std::invalid_argument("braid_cnot: no such defect pair");
  }
  p.instrs.push_back(Instruction{Op::braid_cnot, 0, pair, -1, 0});
}

void expand_H_gadget(LogicalProgram& p, LogicalQubit x, LogicalQubit y) {
  require_qubit(p, x);
  require_qubit(p, y);
  int n = p.reg.n_data;
  std::size_t begin = p.instrs.size();
  bool ancilla_pair = (x == kQubitA && y == kQubitB) || (x == kQubitB && y == kQubitA);
  if (x == n || y == n) {
    emit_prep_x(p, y);
    emit_cz(p, x == n ? y : x);
  } else if (ancilla_pair) {
    // CZ(a,b) via the doubled transversal CZ: with y in |0> the first
    // application acts on the data pairs only; re-preparing y in |+> and
    // applying again cancels the data part and leaves CZ(a,b).
    emit_prep_z(p, y);
    emit_global_cz12(p);
    emit_prep_x(p, y);
    emit_global_cz12(p);
  } else {
    throw std::invalid_argument(
        "expand_H_gadget: no CZ route between " + p.reg.qubit_name(x) + " and " +
        p.reg.qubit_name(y));
  }
  int bit = emit_meas_x(p, x, y);
  std::size_t correction = p.instrs.size();
  emit_pauli_x(p, y, bit);
  p.gadgets.push_back(
      GadgetRecord{GadgetRecord::Kind::hadamard, x, y, begin, p.instrs.size(), correction});
}

void expand_I_gadget(LogicalProgram& p, LogicalQubit x, LogicalQubit y) {
  require_qubit(p, x);
  require_qubit(p, y);
  int n = p.reg.n_data;
  std::size_t begin = p.instrs.size();
  auto data_pair = [&](LogicalQubit q) { return (q + 1) / 2; };
  std::size_t correction = 0;
  if (y == kQubitA && x >= 1 && x < n && x % 2 == 1) {
    // CNOT(a -> x): receive through the control.
    emit_prep_x(p, kQubitB);  // absorb CNOT(2k -> b)
    emit_prep_x(p, kQubitA);
    emit_braid_cnot(p, data_pair(x));
    int bit = emit_meas_z(p, x, y);
    correction = p.instrs.size();
    emit_pauli_x(p, y, bit);
  } else if (x == kQubitA && y >= 1 && y < n && y % 2 == 1) {
    // CNOT(a -> y): send through the control.
    emit_prep_x(p, kQubitB);
    emit_prep_z(p, y);
    emit_braid_cnot(p, data_pair(y));
    int bit = emit_meas_x(p, x, y);
    correction = p.instrs.size();
    emit_pauli_z(p, y, bit);
  } else if (y == kQubitB && x >= 1 && x < n && x % 2 == 0) {
    // CNOT(x -> b): send through the control.
    emit_prep_z(p, kQubitA);  // keep CNOT(a -> 2k-1) idle
    emit_prep_z(p, kQubitB);
    emit_braid_cnot(p, data_pair(x));
    int bit = emit_meas_x(p, x, y);
    correction = p.instrs.size();
    emit_pauli_z(p, y, bit);
  } else if (x == kQubitB && y >= 1 && y < n && y % 2 == 0) {
    // CNOT(y -> b): receive through the control.
    emit_prep_z(p, kQubitA);
    emit_prep_x(p, y);
    emit_braid_cnot(p, data_pair(y));
    int bit = emit_meas_z(p, x, y);
    correction = p.instrs.size();
    emit_pauli_x(p, y, bit);
  } else {
    throw std::invalid_argument(
        "expand_I_gadget: no braid CNOT route between " + p.reg.qubit_name(x) +
        " and " + p.reg.qubit_name(y));
  }
  p.gadgets.push_back(
      GadgetRecord{GadgetRecord::Kind::move, x, y, begin, p.instrs.size(), correction});
}

namespace {

// Hadamard on one logical qubit via cycles of injection gadgets; the state
// ends back on q with all other logical qubits preserved.
void append_hadamard(LogicalProgram& p, int q) {
  int n = p.reg.n_data;
  if (q < 1 || q > n) {
    throw std::invalid_argument("compile_H: qubit out of range");
  }
  if (q == n) {
    expand_H_gadget(p, n, kQubitA);
    expand_H_gadget(p, kQubitA, kQubitB);
    expand_H_gadget(p, kQubitB, n);
  } else if (q % 2 == 1) {
    expand_I_gadget(p, q, kQubitA);
    expand_H_gadget(p, kQubitA, kQubitB);
    expand_H_gadget(p, n, kQubitA);
    expand_H_gadget(p, kQubitB, n);
    expand_H_gadget(p, n, q);
    expand_H_gadget(p, kQubitA, n);
  } else {
    expand_I_gadget(p, q, kQubitB);
    expand_H_gadget(p, kQubitB, kQubitA);
    expand_H_gadget(p, n, kQubitB);
    expand_H_gadget(p, kQubitA, n);
    expand_H_gadget(p, n, q);
    expand_H_gadget(p, kQubitB, n);
  }
}

void append_ancilla_reset(LogicalProgram& p) {
  emit_prep_z(p, kQubitA);
  emit_prep_z(p, kQubitB);
}

// CCZ on the aligned triple (2K-1, 2K, N): isolate pair K from the global
// transversal CCZ by parking qubit 2K-1 on ancilla a while the first
// application runs, then undoing it for the second.
void append_aligned_ccz(LogicalProgram& p, int pair_k) {
  int n = p.reg.n_data;
  if (n == 3) {
    emit_global_ccz(p);
    return;
  }
  int odd = 2 * pair_k - 1;
  expand_I_gadget(p, odd, kQubitA);
  emit_prep_z(p, odd);
  emit_prep_z(p, kQubitB);
  emit_global_ccz(p);
  expand_I_gadget(p, kQubitA, odd);
  emit_prep_z(p, kQubitB);
  emit_global_ccz(p);
}

void append_swap_with_n(LogicalProgram& p, int x) {
  int n = p.reg.n_data;
  if (x < 1 || x >= n) {
    throw std::invalid_argument("compile_SWAP: partner must be a data qubit below N");
  }
  append_hadamard(p, n);
  emit_cz(p, x);
  append_hadamard(p, n);
  append_hadamard(p, x);
  emit_cz(p, x);
  append_hadamard(p, x);
  append_hadamard(p, n);
  emit_cz(p, x);
  append_hadamard(p, n);
}

}  // namespace

LogicalProgram compile_H(int n_data, int q) {
  LogicalProgram p;
  p.reg = LogicalRegister::make(n_data);
  append_hadamard(p, q);
  append_ancilla_reset(p);
  check_dataflow(p);
  return p;
}

LogicalProgram compile_CCZ(int n_data, int x, int y, int z) {
  LogicalProgram p;
  p.reg = LogicalRegister::make(n_data);
  int n = n_data;
  std::vector<int> triple = {x, y, z};
  std::sort(triple.begin(), triple.end());
  if (std::set<int>(triple.begin(), triple.end()).size() != 3 || triple[0] < 1 ||
      triple[2] > n) {
    throw std::invalid_argument("compile_CCZ: need three distinct data qubits");
  }

  // Bring the triple to the aligned form (2K-1, 2K, N) by swapping through
  // qubit N; conjugating swaps are undone afterwards.
  std::vector<int> conjugation;
  if (triple[2] != n) {
    conjugation.push_back(triple[2]);
    triple[2] = n;
  }
  int u = triple[0];
  int v = triple[1];
  if (!(u % 2 == 1 && v == u + 1)) {
    // Move v to u's pair partner through N.
    int partner = u % 2 == 1 ? u + 1 : u - 1;
    if (partner == v) {
      std::swap(u, v);  // already a pair, other order
    } else {
      conjugation.push_back(v);
      conjugation.push_back(partner);
      conjugation.push_back(v);
      v = partner;
    }
    if (u % 2 == 0) std::swap(u, v);
  }
  int pair_k = (u + 1) / 2;

  for (int w : conjugation) append_swap_with_n(p, w);
  append_aligned_ccz(p, pair_k);
  for (auto it = conjugation.rbegin(); it != conjugation.rend(); ++it) {
    append_swap_with_n(p, *it);
  }
  append_ancilla_reset(p);
  check_dataflow(p);
  return p;
}

LogicalProgram compile_SWAP(int n_data, int x) {
  LogicalProgram p;
  p.reg = LogicalRegister::make(n_data);
  append_swap_with_n(p, x);
  append_ancilla_reset(p);
  check_dataflow(p);
  return p;
}

void append_program(LogicalProgram& dst, const LogicalProgram& src) {
  if (dst.reg.n_data != src.reg.n_data) {
    throw std::invalid_argument("append_program: register mismatch");
  }
  int bit_offset = static_cast<int>(dst.bit_names.size());
  std::size_t instr_offset = dst.instrs.size();
  for (const auto& name : src.bit_names) {
    dst.bit_names.push_back(name + "'");
  }
  for (Instruction instr : src.instrs) {
    if (instr.bit >= 0) instr.bit += bit_offset;
    dst.instrs.push_back(instr);
  }
  for (GadgetRecord g : src.gadgets) {
    g.begin += instr_offset;
    g.end += instr_offset;
    g.correction += instr_offset;
    dst.gadgets.push_back(g);
  }
}

ResourceCount resource_count(const LogicalProgram& p) {
  ResourceCount out;
  out.instructions = p.instrs.size();
  for (const auto& g : p.gadgets) {
    if (g.kind == GadgetRecord::Kind::hadamard) {
      ++out.h_gadgets;
    } else {
      ++out.move_gadgets;
    }
  }
  for (const auto& i : p.instrs) {
    switch (i.op) {
      case Op::meas_x:
      case Op::meas_z:
        ++out.measurements;
        break;
      case Op::prep_x:
      case Op::prep_z:
        ++out.preparations;
        break;
      case Op::pauli_x:
      case Op::pauli_z:
        out.conditional_paulis += i.bit >= 0;
        break;
      case Op::cz:
        ++out.cz_count;
        break;
      case Op::global_cz12:
      case Op::global_ccz:
        ++out.global_transversal;
        break;
      case Op::braid_cnot:
        ++out.braid_operations;
        break;
    }
  }
  return out;
}

std::string instruction_to_text(const LogicalProgram& p, const Instruction& instr) {
  const auto& reg = p.reg;
  std::ostringstream out;
  switch (instr.op) {
    case Op::prep_z:
      out << "prep_z " << reg.qubit_name(instr.q);
      break;
    case Op::prep_x:
      out << "prep_x " << reg.qubit_name(instr.q);
      break;
    case Op::meas_x:
      out << "meas_x " << reg.qubit_name(instr.q) << " -> " << p.bit_names[std::size_t(instr.bit)];
      break;
    case Op::meas_z:
      out << "meas_z " << reg.qubit_name(instr.q) << " -> " << p.bit_names[std::size_t(instr.bit)];
      break;
    case Op::pauli_x:
      out << "x " << reg.qubit_name(instr.q);
      if (instr.bit >= 0) out << " if " << p.bit_names[std::size_t(instr.bit)];
      break;
    case Op::pauli_z:
      out << "z " << reg.qubit_name(instr.q);
      if (instr.bit >= 0) out << " if " << p.bit_names[std::size_t(instr.bit)];
      break;
    case Op::cz:
      out << "cz " << reg.n_data << ' ' << reg.qubit_name(instr.q);
      break;
    case Op::global_cz12:
      out << "global_cz12";
      break;
    case Op::global_ccz:
      out << "global_ccz";
      break;
    case Op::braid_cnot:
      out << "braid_cnot " << instr.pair;
      break;
  }
  return out.str();
}

std::string program_to_text(const LogicalProgram& p) {
  std::string out;
  for (const auto& instr : p.instrs) {
    out += instruction_to_text(p, instr);
    out.push_back('\n');
  }
  return out;
}

void check_dataflow(const LogicalProgram& p) {
  std::set<LogicalQubit> live;
  for (int q = 1; q <= p.reg.n_data; ++q) live.insert(q);
  for (std::size_t i = 0; i < p.instrs.size(); ++i) {
    const auto& instr = p.instrs[i];
    switch (instr.op) {
      case Op::prep_z:
      case Op::prep_x:
        if (live.count(instr.q)) {
          throw std::logic_error("dataflow: preparation of live qubit " +
                                 p.reg.qubit_name(instr.q) + " at instruction " +
                                 std::to_string(i));
        }
        break;
      case Op::meas_x:
      case Op::meas_z:
        if (live.count(instr.q)) {
          if (instr.transfer == 0) {
            throw std::logic_error("dataflow: measurement destroys live qubit " +
                                   p.reg.qubit_name(instr.q) + " at instruction " +
                                   std::to_string(i));
          }
          if (live.count(instr.transfer)) {
            throw std::logic_error("dataflow: transfer target " +
                                   p.reg.qubit_name(instr.transfer) +
                                   " already live at instruction " + std::to_string(i));
          }
          live.erase(instr.q);
          live.insert(instr.transfer);
        }
        break;
      default:
        break;
    }
  }
  for (int q = 1; q <= p.reg.n_data; ++q) {
    if (!live.count(q)) {
      throw std::logic_error("dataflow: data qubit " + std::to_string(q) +
                             " does not end live");
    }
  }
}

}  // namespace dk
