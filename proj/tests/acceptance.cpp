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

// Acceptance suite: one criterion per check, one printed line each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "defectkit/deform.hpp"
#include "defectkit/scheme.hpp"
#include "defectkit/verify.hpp"

using namespace dk;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(std::string&)> body;  // throws or appends to the detail note
};

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

// ---------------------------------------------------------------------------

void criterion_twist_groups(std::string& note) {
  for (const char* name : {"twist_2d_surface", "selfdual_surface_4", "levin_wen_3d"}) {
    auto start = std::chrono::steady_clock::now();
    auto scheme = builtin_scheme(name);
    auto s_tab = braid_action(scheme.setup, scheme.moves[0]);
    auto h_tab = braid_action(scheme.setup, scheme.moves[1]);
    require(equals_up_to_phase(s_tab, CliffordTableau::phase_gate(1, 0)),
            std::string(name) + ": pair exchange is not the phase gate");
    require(equals_up_to_phase(h_tab, CliffordTableau::hadamard(1, 0)),
            std::string(name) + ": cross exchange is not the Hadamard");
    auto report =
        generate_braid_group(scheme.setup, {scheme.moves[0], scheme.moves[1]}, 100);
    require(report.group.closed, std::string(name) + ": group did not close");
    require(report.group.order == 24,
            std::string(name) + ": group order " + std::to_string(report.group.order) +
                " != 24");
    require(report.all_clifford, std::string(name) + ": non-Clifford element");
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    require(seconds < 1.0, std::string(name) + ": over the 1 s per-scheme budget");
  }
  note = "S and H exchanges, order 24, within 1 s for each of the three schemes";
}

void criterion_eligibility(std::string& note) {
  auto check = [&](const char* model_name, const char* wall_name,
                   const char* fermion, int twist_dim) {
    auto model = builtin_model(model_name);
    auto report = clifford_eligibility(model, get_wall(model, wall_name));
    require(report.eligible, std::string(model_name) + ": expected eligible");
    require(model->describe_mask(report.fermion->bits) == fermion,
            std::string(model_name) + ": witness " +
                model->describe_mask(report.fermion->bits) + " != " + fermion);
    require(report.twist_dim == twist_dim,
            std::string(model_name) + ": twist dim " +
                std::to_string(report.twist_dim) + " != " + std::to_string(twist_dim));
    require(report.braid_check, std::string(model_name) + ": braid check failed");
  };
  check("surface_2d", "hadamard", "e.m", 0);
  check("surface_4d_selfdual", "hadamard", "e.m", 2);
  check("levin_wen_3d", "attach_fermion", "e", 0);

  auto surface = builtin_model("surface_2d");
  require(!clifford_eligibility(surface, identity_wall(surface)).eligible,
          "identity wall must be ineligible");
  auto two_copy = builtin_model("surface_2d_2copy");
  require(!clifford_eligibility(two_copy, get_wall(two_copy, "swap_copies")).eligible,
          "pure-boson copy-swap wall must be ineligible");
  note = "witnesses e.m/e.m/e with twist dims 0/2/0; both negative controls fail";
}

void criterion_hole_braid(std::string& note) {
  LatticeSpec spec;
  spec.width = 5;
  spec.height = 5;
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 1, 1, 1});
  spec.holes.push_back(HoleSpec{Boundary::smooth, 2, 2, 1, 1});
  auto planar = build_planar_code(spec);
  require(planar.code.k() == 3, "expected three logical qubits");

  using enum Dir;
  std::vector<Dir> loop = {right, right, right, down, down, down,
                           left,  left,  left,  up,   up,   up};
  RunOptions options;
  options.distance_floor = 2;  // checked after every translation
  auto result = run_braid(planar, move_hole(planar, 0, loop), options);
  // k conservation is enforced after every measurement inside run_braid.
  require(result.checkpoints == loop.size(), "distance floor checks did not run");
  require(equals_up_to_phase(result.tableau, CliffordTableau::cnot(3, 1, 2)),
          "full monodromy is not the CNOT tableau");

  auto back = run_braid(planar, move_hole(planar, 0, {right, down, up, left}), options);
  require(equals_up_to_phase(back.tableau, CliffordTableau::identity(3)),
          "out-and-back path is not the identity");
  note = "monodromy = CNOT(hole0 -> hole1) on n=" + std::to_string(planar.code.n) +
         ", distance floor 2 held at " + std::to_string(result.checkpoints) +
         " checkpoints";
}

void criterion_universal_n3(std::string& note) {
  std::size_t expected_m[] = {6, 6, 3};
  for (int q : {1, 2, 3}) {
    auto program = compile_H(3, q);
    auto report = verify(program, VerifyTarget::hadamard(q));
    require(report.measurement_count == expected_m[q - 1],
            "compile_H(" + std::to_string(q) + "): measurement count " +
                std::to_string(report.measurement_count));
    require(report.all_passed,
            "compile_H(" + std::to_string(q) + ") failed branch verification");
  }
  auto ccz = compile_CCZ(3, 1, 2, 3);
  auto report = verify(ccz, VerifyTarget::ccz(1, 2, 3));
  require(report.all_passed, "compile_CCZ(1,2,3) failed branch verification");
  note = "H(1), H(2), H(3) at m = 6, 6, 3 and CCZ(1,2,3); every branch passes";
}

void criterion_universal_n5(std::string& note) {
  auto ccz_pair = compile_CCZ(5, 1, 2, 5);
  auto resources = resource_count(ccz_pair);
  require(resources.move_gadgets == 2 && resources.global_transversal == 2,
          "compile_CCZ(1,2,5) is not the isolate/apply/restore/apply protocol");
  auto pair_report = verify(ccz_pair, VerifyTarget::ccz(1, 2, 5));
  require(pair_report.all_passed, "compile_CCZ(1,2,5) failed branch verification");

  auto ccz_swap = compile_CCZ(5, 1, 3, 5);
  require(resource_count(ccz_swap).cz_count >= 18,
          "compile_CCZ(1,3,5) did not go through the swap conjugation");
  auto swap_report = verify(ccz_swap, VerifyTarget::ccz(1, 3, 5));
  require(swap_report.all_passed, "compile_CCZ(1,3,5) failed branch verification");

  auto swap_program = compile_SWAP(5, 1);
  auto swap_verify = verify(swap_program, VerifyTarget::swap_with_n(1));
  require(swap_verify.all_passed, "compile_SWAP(1) failed branch verification");

  note = "CCZ(1,2,5) over 2^" + std::to_string(pair_report.measurement_count) +
         " branches, CCZ(1,3,5) over 2^" +
         std::to_string(swap_report.measurement_count) + ", SWAP(1) over 2^" +
         std::to_string(swap_verify.measurement_count) + "; all branches pass";
}

void criterion_braid_map_closure(std::string& note) {
  std::mt19937 rng(20260810);
  std::size_t words = 0;
  std::vector<std::pair<std::size_t, std::vector<CliffordTableau>>> schemes;
  for (const auto& name : builtin_scheme_names()) {
    auto scheme = builtin_scheme(name);
    std::vector<CliffordTableau> actions;
    for (const auto& mv : scheme.moves) {
      actions.push_back(braid_action(scheme.setup, mv));
    }
    schemes.emplace_back(qubit_basis(scheme.setup).size(), std::move(actions));
  }
  while (words < 1000) {
    const auto& [k, actions] = schemes[words % schemes.size()];
    auto tab = CliffordTableau::identity(k);
    int length = 1 + int(rng() % 8);
    for (int i = 0; i < length; ++i) {
      tab = compose(tab, actions[rng() % actions.size()]);
    }
    require(tab.is_symplectic(),
            "braid word " + std::to_string(words) + " broke symplectic consistency");
    ++words;
  }
  note = "1000 random move words across all built-in schemes; zero violations";
}

void criterion_mutation_sensitivity(std::string& note) {
  auto program = compile_H(3, 3);
  auto sites = program.correction_sites();
  require(sites.size() == 3, "expected three conditional corrections");
  for (std::size_t which = 0; which < sites.size(); ++which) {
    auto mutant = program;
    int bit = mutant.instrs[sites[which]].bit;
    mutant.instrs.erase(mutant.instrs.begin() +
                        static_cast<std::ptrdiff_t>(sites[which]));
    auto report = verify(mutant, VerifyTarget::hadamard(3));
    require(!report.all_passed, "mutant " + std::to_string(which) + " passed");
    require(report.explicit_branches, "expected explicit branch records");
    for (const auto& branch : report.branches) {
      bool fires = branch.outcomes[std::size_t(bit)] == '1';
      bool failed = branch.verdict == BranchRecord::Verdict::fail;
      require(fires == failed,
              "mutant " + std::to_string(which) + ": branch " + branch.outcomes +
                  (failed ? " failed without the correction firing"
                          : " passed although the correction fires"));
    }
  }
  note = "each deleted correction fails exactly the branches where it fires";
}

void criterion_encoding_counts(std::string& note) {
  LatticeSpec plain;
  plain.width = 2;
  plain.height = 1;
  require(build_planar_code(plain).code.k() == 1, "plain planar patch: k != 1");

  LatticeSpec smooth;
  smooth.width = 7;
  smooth.height = 5;
  smooth.top = smooth.bottom = smooth.left = smooth.right = Boundary::smooth;
  auto base = build_planar_code(smooth);
  require(base.code.k() == 0, "all-smooth patch: k != 0");
  auto one = hole_punch(base, HoleSpec{Boundary::rough, 2, 2, 1, 1});
  require(one.code.k() == 0, "first hole of a pair must not add a qubit");
  auto two = hole_punch(one, HoleSpec{Boundary::rough, 2, 5, 1, 1});
  require(two.code.k() == 1, "second hole must add one qubit");
  auto three = hole_punch(two, HoleSpec{Boundary::rough, 4, 3, 1, 1});
  require(three.code.k() == 2, "third hole must add one qubit");

  require(qubit_basis(builtin_scheme("universal_3d_punctures").setup).size() == 5,
          "puncture setup must encode five qubits");
  for (const char* name : {"twist_2d_surface", "selfdual_surface_4", "levin_wen_3d"}) {
    require(qubit_basis(builtin_scheme(name).setup).size() == 1,
            std::string(name) + " must encode one qubit");
  }
  note = "patch k=1; hole pairs 0,+0,+1,+1; puncture setup 5; twist schemes 1";
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "twist-scheme Clifford generation", 3.0, criterion_twist_groups},
      {2, "generalised-fermion eligibility", 1.0, criterion_eligibility},
      {3, "microscopic hole braid", 30.0, criterion_hole_braid},
      {4, "universal scheme at N=3", 60.0, criterion_universal_n3},
      {5, "universal scheme at N=5", 600.0, criterion_universal_n5},
      {6, "braid maps preserve the logical Pauli group", 60.0,
       criterion_braid_map_closure},
      {7, "mutation sensitivity of the verifier", 60.0,
       criterion_mutation_sensitivity},
      {8, "encoding counts", 30.0, criterion_encoding_counts},
  };

  int failures = 0;
  for (auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string note;
    std::string error;
    try {
      criterion.body(note);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = error.empty() && seconds <= criterion.budget_seconds;
    if (!ok) ++failures;
    std::printf("%s  [%d] %s (%.2fs / budget %.0fs)\n", ok ? "PASS" : "FAIL",
                criterion.number, criterion.title.c_str(), seconds,
                criterion.budget_seconds);
    if (!note.empty() && ok) std::printf("      %s\n", note.c_str());
    if (!error.empty()) std::printf("      error: %s\n", error.c_str());
    if (error.empty() && seconds > criterion.budget_seconds) {
      std::printf("      over budget\n");
    }
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
