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

#include "defectkit/deform.hpp"
#include "defectkit/gf2.hpp"

using namespace dk;

namespace {

// Rough hole (vertex 1,1) and smooth hole (face 2,2) on a strip patch:
// the rough hole can orbit the smooth one with two cells of clearance.
LatticeSpec braid_spec() {
  LatticeSpec spec;
  spec.width = 5;
  spec.height = 5;
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 1, 1, 1});
  spec.holes.push_back(HoleSpec{Boundary::smooth, 2, 2, 1, 1});
  return spec;
}

std::vector<Dir> loop_path() {
  using enum Dir;
  return {right, right, right, down, down, down,
          left,  left,  left,  up,   up,   up};
}

std::vector<Dir> out_and_back() {
  using enum Dir;
  return {right, down, up, left};
}

}  // namespace

TEST_CASE("measuring an existing generator is a no-op") {
  auto planar = build_planar_code(braid_spec(), true);
  DeformationState state(planar);
  auto before = state.generators();
  state.apply_measurement(before[3]);
  CHECK(state.generators() == before);
  CHECK(state.byproduct_frame().is_identity());
}

TEST_CASE("carving keeps k and swaps one generator") {
  auto planar = build_planar_code(braid_spec(), true);
  DeformationState state(planar);
  std::size_t k0 = state.k();
  // Carve the edge just right of the rough hole (vertex (2,2) -> edge (2,3)).
  auto m = PauliOperator::single(planar.code.n,
                                 planar.layout.qubit_index(Coord{2, 3}), 'Z');
  state.apply_measurement(m);
  CHECK(state.k() == k0);
  // The byproduct is the replaced generator (an anticommuting star).
  CHECK_FALSE(state.byproduct_frame().is_identity());
  CHECK(state.byproduct_frame().phase() % 2 == 0);
}

TEST_CASE("measuring a logical is rejected") {
  auto planar = build_planar_code(braid_spec(), true);
  DeformationState state(planar);
  CHECK_THROWS_AS(state.apply_measurement(planar.code.logical_pairs[0].first),
                  std::invalid_argument);
}

TEST_CASE("empty path gives an empty script") {
  auto planar = build_planar_code(braid_spec());
  auto script = move_hole(planar, 0, {});
  CHECK(script.steps.empty());
  auto result = run_braid(planar, script);
  CHECK(is_identity(result.tableau));
}

TEST_CASE("single translation emits a fixed carve/fill block") {
  auto planar = build_planar_code(braid_spec());
  auto script = move_hole(planar, 0, {Dir::right});
  REQUIRE(script.steps.size() == 2);
  CHECK(script.steps[0].kind == StepKind::carve);
  CHECK(script.steps[0].basis == 'Z');
  CHECK((script.steps[0].target == Coord{2, 3}));
  CHECK(script.steps[1].kind == StepKind::fill);
  CHECK((script.steps[1].target == Coord{2, 2}));
  CHECK(script_to_text(script) ==
        "carve Z 2 3\nfill star 2 2\nmove 0 R\n");
}

TEST_CASE("script text round trip") {
  auto planar = build_planar_code(braid_spec());
  auto script = move_hole(planar, 0, out_and_back());
  auto text = script_to_text(script);
  auto parsed = script_from_text(text);
  CHECK(parsed.steps.size() == script.steps.size());
  CHECK(parsed.moves.size() == script.moves.size());
  CHECK(script_to_text(parsed) == text);
  CHECK_THROWS_AS(script_from_text("carve Q 1 1\n"), std::invalid_argument);
}

TEST_CASE("out-and-back path is the identity") {
  auto planar = build_planar_code(braid_spec());
  auto script = move_hole(planar, 0, out_and_back());
  auto result = run_braid(planar, script);
  CHECK(equals_up_to_phase(result.tableau, CliffordTableau::identity(3)));
  CHECK(result.byproduct.phase() % 2 == 0);
}

TEST_CASE("displaced ending is rejected") {
  auto planar = build_planar_code(braid_spec());
  auto script = move_hole(planar, 0, {Dir::right, Dir::down});
  CHECK_THROWS_AS(run_braid(planar, script), std::invalid_argument);
}

TEST_CASE("path collisions are rejected at script generation") {
  LatticeSpec spec;
  spec.width = 6;
  spec.height = 4;
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 1, 1, 1});
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 3, 1, 1});
  auto planar = build_planar_code(spec);
  // Straight into the second hole.
  CHECK_THROWS_AS(move_hole(planar, 0, {Dir::right, Dir::right}),
                  std::invalid_argument);
  // Off the lattice.
  CHECK_THROWS_AS(move_hole(planar, 0, {Dir::up}), std::invalid_argument);
}

TEST_CASE("monodromy of a rough hole around a smooth hole is a CNOT") {
  auto planar = build_planar_code(braid_spec());
  REQUIRE(planar.code.k() == 3);
  REQUIRE(planar.logical_names ==
          std::vector<std::string>{"boundary", "hole0", "hole1"});

  auto script = move_hole(planar, 0, loop_path());
  RunOptions options;
  options.distance_floor = 2;
  auto result = run_braid(planar, script, options);
  CHECK(result.checkpoints == loop_path().size());

  // Control: the rough-hole qubit (index 1); target: the smooth-hole qubit.
  auto expected = CliffordTableau::cnot(3, 1, 2);
  CHECK(equals_up_to_phase(result.tableau, expected));
}

TEST_CASE("braid tableau lies in the group generated by hole CNOTs") {
  auto planar = build_planar_code(braid_spec());
  auto result = run_braid(planar, move_hole(planar, 0, loop_path()));
  std::vector<CliffordTableau> gens = {CliffordTableau::cnot(3, 1, 2),
                                       CliffordTableau::cnot(3, 2, 1)};
  auto group = generate_group(gens, 100);
  REQUIRE(group.closed);
  bool member = false;
  for (const auto& el : group.elements) {
    member |= equals_up_to_phase(el, result.tableau);
  }
  CHECK(member);
}

TEST_CASE("braiding two rough holes acts trivially") {
  LatticeSpec spec;
  spec.width = 6;
  spec.height = 5;
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 1, 1, 1});
  spec.holes.push_back(HoleSpec{Boundary::rough, 2, 3, 1, 1});
  auto planar = build_planar_code(spec);
  REQUIRE(planar.code.k() == 3);

  using enum Dir;
  std::vector<Dir> path = {right, right, right, down, down, down,
                           left,  left,  left,  up,   up,   up};
  auto result = run_braid(planar, move_hole(planar, 0, path));
  CHECK(equals_up_to_phase(result.tableau, CliffordTableau::identity(3)));
}

TEST_CASE("a braid followed by its reverse is the identity") {
  auto planar = build_planar_code(braid_spec());
  using enum Dir;
  std::vector<Dir> there = {right, right, down};
  std::vector<Dir> back = {up, left, left};
  std::vector<Dir> both = there;
  both.insert(both.end(), back.begin(), back.end());
  auto result = run_braid(planar, move_hole(planar, 0, both));
  CHECK(equals_up_to_phase(result.tableau, CliffordTableau::identity(3)));
}

TEST_CASE("representatives stay symplectically consistent throughout") {
  auto planar = build_planar_code(braid_spec(), true);
  DeformationState state(planar);
  auto script = move_hole(planar, 0, out_and_back());
  for (const auto& step : script.steps) {
    PauliOperator m =
        step.kind == StepKind::carve
            ? PauliOperator::single(planar.code.n,
                                    planar.layout.qubit_index(step.target),
                                    step.basis)
            : planar.layout.pristine_site_op(step.target);
    state.apply_measurement(m);
    for (std::size_t i = 0; i < state.representatives().size(); ++i) {
      const auto& [xi, zi] = state.representatives()[i];
      CHECK_FALSE(commutes(xi, zi));
      for (const auto& g : state.generators()) {
        CHECK(commutes(xi, g));
        CHECK(commutes(zi, g));
      }
      for (std::size_t j = i + 1; j < state.representatives().size(); ++j) {
        const auto& [xj, zj] = state.representatives()[j];
        CHECK(commutes(xi, xj));
        CHECK(commutes(xi, zj));
        CHECK(commutes(zi, xj));
        CHECK(commutes(zi, zj));
      }
    }
    // The frame stays a valid Hermitian Pauli.
    CHECK(state.byproduct_frame().phase() % 2 == 0);
  }
}
