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

#include "defectkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace dk {

namespace {

using Amp = std::complex<double>;
using State = std::vector<Amp>;

void apply_h(State& s, int bit) {
  std::size_t mask = std::size_t{1} << bit;
  const double inv = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i & mask) continue;
    Amp a = s[i];
    Amp b = s[i | mask];
    s[i] = (a + b) * inv;
    s[i | mask] = (a - b) * inv;
  }
}

void apply_x(State& s, int bit) {
  std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(i & mask)) std::swap(s[i], s[i | mask]);
  }
}

void apply_z(State& s, int bit) {
  std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i & mask) s[i] = -s[i];
  }
}

void apply_cz(State& s, int b1, int b2) {
  std::size_t m1 = std::size_t{1} << b1;
  std::size_t m2 = std::size_t{1} << b2;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((i & m1) && (i & m2)) s[i] = -s[i];
  }
}

void apply_ccz(State& s, int b1, int b2, int b3) {
  std::size_t m = (std::size_t{1} << b1) | (std::size_t{1} << b2) |
                  (std::size_t{1} << b3);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((i & m) == m) s[i] = -s[i];
  }
}

void apply_cnot(State& s, int control, int target) {
  std::size_t cm = std::size_t{1} << control;
  std::size_t tm = std::size_t{1} << target;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if ((i & cm) && !(i & tm)) std::swap(s[i], s[i | tm]);
  }
}

void apply_swap(State& s, int b1, int b2) {
  std::size_t m1 = std::size_t{1} << b1;
  std::size_t m2 = std::size_t{1} << b2;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool v1 = i & m1;
    bool v2 = i & m2;
    if (v1 && !v2) std::swap(s[i], (s[(i & ~m1) | m2]));
  }
}

// Projects onto outcome 0/1 of Z (or X) on the given bit; returns the norm^2.
double project_z(State& s, int bit, int outcome) {
  std::size_t mask = std::size_t{1} << bit;
  double norm = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool one = (i & mask) != 0;
    if (one != (outcome == 1)) {
      s[i] = 0;
    } else {
      norm += std::norm(s[i]);
    }
  }
  return norm;
}

double project_x(State& s, int bit, int outcome) {
  apply_h(s, bit);
  double norm = project_z(s, bit, outcome);
  apply_h(s, bit);
  return norm;
}

struct Node {
  std::vector<State> cols;
  std::vector<int> bits;             // -1 unknown / merged-away
  double multiplicity = 1;
  std::vector<std::string> outcomes; // explicit mode only

  bool zero(double tol) const {
    for (const auto& c : cols) {
      for (const auto& a : c) {
        if (std::abs(a) > tol) return false;
      }
    }
    return true;
  }
};

// Nodes whose columns differ by one nonzero scalar have identical futures
// and identical verdicts.
bool proportional(const Node& a, const Node& b, double tol) {
  Amp scale(0, 0);
  for (std::size_t c = 0; c < a.cols.size(); ++c) {
    for (std::size_t i = 0; i < a.cols[c].size(); ++i) {
      if (std::abs(b.cols[c][i]) > tol) {
        scale = a.cols[c][i] / b.cols[c][i];
        goto found;
      }
      if (std::abs(a.cols[c][i]) > tol) return false;
    }
  }
  return false;  // b is zero
found:
  if (std::abs(scale) < tol) return false;
  for (std::size_t c = 0; c < a.cols.size(); ++c) {
    for (std::size_t i = 0; i < a.cols[c].size(); ++i) {
      if (std::abs(a.cols[c][i] - scale * b.cols[c][i]) > tol) return false;
    }
  }
  return true;
}

}  // namespace

std::string VerifyTarget::describe() const {
  switch (kind) {
    case Kind::identity:
      return "identity";
    case Kind::hadamard:
      return "H on qubit " + std::to_string(q);
    case Kind::ccz:
      return "CCZ on qubits " + std::to_string(x) + "," + std::to_string(y) +
             "," + std::to_string(z);
    case Kind::swap_with_n:
      return "SWAP of qubits " + std::to_string(q) + " and N";
    case Kind::sequence: {
      std::string out = "sequence[";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += "; ";
        out += steps[i].describe();
      }
      return out + "]";
    }
  }
  return "?";
}

void VerifyTarget::apply(State& state, const LogicalRegister& reg) const {
  switch (kind) {
    case Kind::identity:
      break;
    case Kind::hadamard:
      apply_h(state, reg.bit_index(q));
      break;
    case Kind::ccz:
      apply_ccz(state, reg.bit_index(x), reg.bit_index(y), reg.bit_index(z));
      break;
    case Kind::swap_with_n:
      apply_swap(state, reg.bit_index(q), reg.bit_index(reg.n_data));
      break;
    case Kind::sequence:
      for (const auto& step : steps) step.apply(state, reg);
      break;
  }
}

BranchReport verify(const LogicalProgram& program, const VerifyTarget& target,
                    const VerifyOptions& options) {
  const LogicalRegister& reg = program.reg;
  int n = reg.n_data;
  int total_qubits = reg.total();
  std::size_t dim = std::size_t{1} << total_qubits;
  double tol = options.tolerance;

  check_dataflow(program);

  BranchReport report;
  report.measurement_count = program.measurement_count();
  report.branch_count = std::ldexp(1.0, static_cast<int>(report.measurement_count));
  report.explicit_branches =
      report.branch_count <= static_cast<double>(options.explicit_branch_cap);

  // Spanning inputs: all data basis states, then each single-qubit |+>.
  std::size_t basis_inputs = std::size_t{1} << n;
  std::size_t input_count = basis_inputs + static_cast<std::size_t>(n);
  std::vector<State> inputs(input_count, State(dim, Amp(0, 0)));
  for (std::size_t d = 0; d < basis_inputs; ++d) {
    inputs[d][d] = 1.0;  // ancilla bits (above bit n-1) start at 0
  }
  for (int j = 0; j < n; ++j) {
    State& s = inputs[basis_inputs + static_cast<std::size_t>(j)];
    const double inv = 1.0 / std::sqrt(2.0);
    s[0] = inv;
    s[std::size_t{1} << j] = inv;
  }
  std::vector<State> expected = inputs;
  for (auto& s : expected) target.apply(s, reg);

  // Bits still read at or after each instruction index.
  std::size_t bit_count = program.bit_names.size();
  std::vector<std::vector<bool>> live_after(program.instrs.size() + 1,
                                            std::vector<bool>(bit_count, false));
  for (std::size_t i = program.instrs.size(); i-- > 0;) {
    live_after[i] = live_after[i + 1];
    const auto& instr = program.instrs[i];
    if ((instr.op == Op::pauli_x || instr.op == Op::pauli_z) && instr.bit >= 0) {
      live_after[i][std::size_t(instr.bit)] = true;
    }
  }

  std::vector<Node> frontier(1);
  frontier[0].cols = inputs;
  frontier[0].bits.assign(bit_count, -1);
  if (report.explicit_branches) frontier[0].outcomes = {""};

  auto account_vacuous = [&](Node&& node, std::size_t remaining_meas) {
    double weight = node.multiplicity * std::ldexp(1.0, int(remaining_meas));
    report.vacuous += weight;
    if (report.explicit_branches) {
      // Expand the unreached suffixes explicitly.
      std::vector<std::string> strings = std::move(node.outcomes);
      for (std::size_t r = 0; r < remaining_meas; ++r) {
        std::vector<std::string> next;
        next.reserve(strings.size() * 2);
        for (const auto& s : strings) {
          next.push_back(s + "0");
          next.push_back(s + "1");
        }
        strings = std::move(next);
      }
      for (auto& s : strings) {
        report.branches.push_back(
            BranchRecord{std::move(s), BranchRecord::Verdict::vacuous, -1});
      }
    }
  };

  std::size_t meas_seen = 0;
  for (std::size_t pc = 0; pc < program.instrs.size(); ++pc) {
    const Instruction& instr = program.instrs[pc];
    std::vector<Node> next;
    next.reserve(frontier.size() * 2);
    std::size_t meas_remaining = report.measurement_count - meas_seen;

    for (Node& node : frontier) {
      switch (instr.op) {
        case Op::pauli_x:
        case Op::pauli_z: {
          bool fire = instr.bit < 0 || node.bits[std::size_t(instr.bit)] == 1;
          if (fire) {
            for (auto& col : node.cols) {
              if (instr.op == Op::pauli_x) {
                apply_x(col, reg.bit_index(instr.q));
              } else {
                apply_z(col, reg.bit_index(instr.q));
              }
            }
          }
          next.push_back(std::move(node));
          break;
        }
        case Op::cz: {
          for (auto& col : node.cols) {
            apply_cz(col, reg.bit_index(n), reg.bit_index(instr.q));
          }
          next.push_back(std::move(node));
          break;
        }
        case Op::global_cz12: {
          for (auto& col : node.cols) {
            apply_cz(col, reg.bit_index(kQubitA), reg.bit_index(kQubitB));
            for (int k = 1; k <= reg.pair_count(); ++k) {
              apply_cz(col, reg.bit_index(2 * k - 1), reg.bit_index(2 * k));
            }
          }
          next.push_back(std::move(node));
          break;
        }
        case Op::global_ccz: {
          int nb = reg.bit_index(n);
          for (auto& col : node.cols) {
            apply_ccz(col, reg.bit_index(kQubitA), reg.bit_index(kQubitB), nb);
            for (int k = 1; k <= reg.pair_count(); ++k) {
              apply_ccz(col, reg.bit_index(2 * k - 1), reg.bit_index(2 * k), nb);
            }
          }
          next.push_back(std::move(node));
          break;
        }
        case Op::braid_cnot: {
          int k = instr.pair;
          for (auto& col : node.cols) {
            apply_cnot(col, reg.bit_index(kQubitA), reg.bit_index(2 * k - 1));
            apply_cnot(col, reg.bit_index(2 * k), reg.bit_index(kQubitB));
          }
          next.push_back(std::move(node));
          break;
        }
        case Op::prep_z:
        case Op::prep_x: {
          bool x_basis = instr.op == Op::prep_x;
          int bit = reg.bit_index(instr.q);
          Node low = node;   // outcome 0 / +
          Node high = std::move(node);
          double nl = 0, nh = 0;
          for (auto& col : low.cols) {
            nl += x_basis ? project_x(col, bit, 0) : project_z(col, bit, 0);
          }
          for (auto& col : high.cols) {
            nh += x_basis ? project_x(col, bit, 1) : project_z(col, bit, 1);
            if (x_basis) {
              apply_z(col, bit);  // |-> back to |+>
            } else {
              apply_x(col, bit);  // |1> back to |0>
            }
          }
          bool low_zero = nl <= tol * tol;
          bool high_zero = nh <= tol * tol;
          if (low_zero && high_zero) {
            throw std::runtime_error("verify: state vanished at a preparation");
          }
          if (low_zero) {
            next.push_back(std::move(high));
          } else if (high_zero) {
            next.push_back(std::move(low));
          } else if (proportional(low, high, tol)) {
            next.push_back(std::move(low));  // same history; not a branch point
          } else {
            throw std::runtime_error(
                "verify: preparation applied to a qubit entangled with live "
                "data (instruction " + std::to_string(pc) + ": " +
                instruction_to_text(program, instr) + ")");
          }
          break;
        }
        case Op::meas_x:
        case Op::meas_z: {
          bool x_basis = instr.op == Op::meas_x;
          int bit = reg.bit_index(instr.q);
          for (int outcome = 0; outcome < 2; ++outcome) {
            Node child = node;
            double norm = 0;
            for (auto& col : child.cols) {
              norm += x_basis ? project_x(col, bit, outcome)
                              : project_z(col, bit, outcome);
            }
            child.bits[std::size_t(instr.bit)] = outcome;
            if (report.explicit_branches) {
              for (auto& s : child.outcomes) s += char('0' + outcome);
            }
            if (norm <= tol * tol) {
              account_vacuous(std::move(child), meas_remaining - 1);
            } else {
              next.push_back(std::move(child));
            }
          }
          break;
        }
      }
    }

    if (instr.op == Op::meas_x || instr.op == Op::meas_z) ++meas_seen;

    // Merge nodes with identical pending classical control and proportional
    // states; dead bits no longer matter.
    const auto& live = live_after[pc + 1];
    for (auto& node : next) {
      for (std::size_t b = 0; b < bit_count; ++b) {
        if (!live[b]) node.bits[b] = -1;
      }
    }
    std::vector<Node> merged;
    for (auto& node : next) {
      bool fused = false;
      for (auto& kept : merged) {
        if (kept.bits == node.bits && proportional(kept, node, tol)) {
          kept.multiplicity += node.multiplicity;
          if (report.explicit_branches) {
            kept.outcomes.insert(kept.outcomes.end(), node.outcomes.begin(),
                                 node.outcomes.end());
          }
          fused = true;
          break;
        }
      }
      if (!fused) merged.push_back(std::move(node));
    }
    frontier = std::move(merged);
    report.peak_frontier = std::max(report.peak_frontier, frontier.size());

    // Branch verdicts are scalar-invariant, so keep amplitudes O(1): after
    // many measurements the raw branch norm decays as 2^(-m/2) and would
    // sink below the comparison tolerance.
    for (auto& node : frontier) {
      double peak = 0;
      for (const auto& col : node.cols) {
        for (const auto& amp : col) peak = std::max(peak, std::abs(amp));
      }
      if (peak > tol && (peak < 0.25 || peak > 4.0)) {
        double inv = 1.0 / peak;
        for (auto& col : node.cols) {
          for (auto& amp : col) amp *= inv;
        }
      }
    }
  }

  // Judge every surviving branch class against the target.
  for (Node& node : frontier) {
    if (node.zero(tol)) {
      account_vacuous(std::move(node), 0);
      continue;
    }
    // One scalar per branch, fixed by the first sizable expected amplitude.
    Amp scale(0, 0);
    bool found = false;
    for (std::size_t c = 0; c < expected.size() && !found; ++c) {
      for (std::size_t i = 0; i < dim && !found; ++i) {
        if (std::abs(expected[c][i]) > 0.5 / std::sqrt(double(dim))) {
          scale = node.cols[c][i] / expected[c][i];
          found = true;
        }
      }
    }
    int first_fail = -1;
    if (!found || std::abs(scale) < tol) {
      first_fail = 0;
    } else {
      for (std::size_t c = 0; c < expected.size() && first_fail < 0; ++c) {
        for (std::size_t i = 0; i < dim; ++i) {
          if (std::abs(node.cols[c][i] - scale * expected[c][i]) >
              tol * std::max(1.0, std::abs(scale))) {
            first_fail = int(c);
            break;
          }
        }
      }
    }
    if (first_fail < 0) {
      report.passed += node.multiplicity;
      if (report.explicit_branches) {
        for (auto& s : node.outcomes) {
          report.branches.push_back(
              BranchRecord{std::move(s), BranchRecord::Verdict::pass, -1});
        }
      }
    } else {
      report.failed += node.multiplicity;
      if (report.explicit_branches) {
        for (auto& s : node.outcomes) {
          report.branches.push_back(
              BranchRecord{std::move(s), BranchRecord::Verdict::fail, first_fail});
        }
      }
    }
  }

  if (report.explicit_branches) {
    std::sort(report.branches.begin(), report.branches.end(),
              [](const BranchRecord& a, const BranchRecord& b) {
                return a.outcomes < b.outcomes;
              });
  }
  // Exact: every surviving branch class passed and none was unreachable.
  report.all_passed = report.failed == 0 && report.vacuous == 0;
  return report;
}

std::string BranchReport::to_json(const std::string& program_name,
                                  const std::string& target_name) const {
  nlohmann::ordered_json j;
  j["program"] = program_name;
  j["target"] = target_name;
  j["measurements"] = measurement_count;
  j["branch_count_log2"] = measurement_count;
  j["branch_count"] = branch_count;
  j["passed"] = passed;
  j["failed"] = failed;
  j["vacuous"] = vacuous;
  j["all_passed"] = all_passed;
  j["peak_distinct_states"] = peak_frontier;
  j["explicit_branches"] = explicit_branches;
  if (explicit_branches) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& b : branches) {
      nlohmann::ordered_json row;
      row["outcomes"] = b.outcomes;
      row["verdict"] = b.verdict == BranchRecord::Verdict::pass      ? "pass"
                       : b.verdict == BranchRecord::Verdict::fail    ? "fail"
                                                                     : "vacuous";
      if (b.verdict == BranchRecord::Verdict::fail) {
        row["first_failing_input"] = b.first_fail_input;
      }
      rows.push_back(row);
    }
    j["branches"] = rows;
  }
  return j.dump(2);
}

}  // namespace dk
