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

#include "defectkit/deform.hpp"
#include "defectkit/scheme.hpp"
#include "defectkit/verify.hpp"

using namespace dk;

// The same physics at two levels of description must agree: the microscopic
// code-deformation braid on the lattice, and the declarative hole-pair
// descriptor scheme.

namespace {

Scheme microscopic_twin_scheme() {
  Scheme scheme;
  scheme.name = "hole_pair_twin";
  auto model = builtin_model("surface_2d");
  scheme.setup.model = model;
  ExcMask e = *model->parse_excitation("e");
  ExcMask m = *model->parse_excitation("m");
  // One rough hole paired with the rough outer boundary, one smooth hole
  // paired with the smooth boundary, as in the lattice fixture.
  scheme.setup.defects = {
      Defect{"boundary_rough", DefectKind::hole, 0, {0, e}, std::nullopt, "outer"},
      Defect{"r1", DefectKind::hole, 0, {0, e}, std::nullopt, "point"},
      Defect{"boundary_smooth", DefectKind::hole, 0, {0, m}, std::nullopt, "outer"},
      Defect{"s1", DefectKind::hole, 0, {0, m}, std::nullopt, "point"},
  };
  auto exc = [&](ExcMask mask) { return Excitation{model, mask}; };
  scheme.setup.qubits = {
      QubitDescriptor{"hole0",
                      {exc(e), TopoClass::connects("r1", "boundary_rough"), {}},
                      {exc(m), TopoClass::encloses("r1"), {}}},
      QubitDescriptor{"hole1",
                      {exc(e), TopoClass::encloses("s1"), {}},
                      {exc(m), TopoClass::connects("s1", "boundary_smooth"), {}}},
  };
  BraidMove mono;
  mono.name = "monodromy_r1_s1";
  mono.kind = BraidMove::Kind::monodromy;
  mono.d1 = "r1";
  mono.d2 = "s1";
  mono.transform["X:hole0"] = FormalWord{0, {"X:hole0", "X:hole1"}};
  mono.transform["Z:hole1"] = FormalWord{0, {"Z:hole0", "Z:hole1"}};
  scheme.moves.push_back(mono);
  return scheme;
}

}  // namespace

TEST_CASE("descriptor-level braid matches the microscopic ground truth") {
  // Microscopic: rough hole orbits the smooth hole on the lattice.
  LatticeSpec spec;
  spec.width = 5;
  spec.height = 5;
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 1, 1, 1});
  spec.holes.push_back(HoleSpec{Boundary::smooth, 2, 2, 1, 1});
  auto planar = build_planar_code(spec);
  REQUIRE(planar.logical_names ==
          std::vector<std::string>{"boundary", "hole0", "hole1"});

  using enum Dir;
  auto script = move_hole(
      planar, 0, {right, right, right, down, down, down, left, left, left, up, up, up});
  auto micro = run_braid(planar, script);

  // Descriptor level: the declared monodromy on the hole-pair setup.
  auto scheme = microscopic_twin_scheme();
  auto macro = braid_action(scheme.setup, scheme.moves[0]);

  // Embed the 2-qubit descriptor tableau alongside the idle boundary qubit
  // (logical order on the lattice: boundary, hole0, hole1).
  REQUIRE(macro.num_qubits() == 2);
  std::vector<PauliOperator> xs, zs;
  auto embed = [&](const PauliOperator& p) {
    PauliOperator out(3);
    for (std::size_t i = 0; i < 2; ++i) {
      out.set_x(i + 1, p.x_bit(i));
      out.set_z(i + 1, p.z_bit(i));
    }
    out.set_phase(p.phase());
    return out;
  };
  xs.push_back(PauliOperator::single(3, 0, 'X'));
  zs.push_back(PauliOperator::single(3, 0, 'Z'));
  for (std::size_t i = 0; i < 2; ++i) {
    xs.push_back(embed(macro.x_image(i)));
    zs.push_back(embed(macro.z_image(i)));
  }
  auto macro_embedded = CliffordTableau::from_images(xs, zs);

  CHECK(equals_up_to_phase(micro.tableau, macro_embedded));
}

TEST_CASE("universal-scheme braid tableau matches the compiler primitive") {
  // The declared puncture braid and the compiler's braid instruction are the
  // same operator on the 5-qubit register (order q1 q2 q3 qa qb vs data
  // 1..3, a, b).
  auto scheme = builtin_scheme("universal_3d_punctures");
  auto macro = braid_action(scheme.setup, scheme.moves[0]);

  LogicalProgram p;
  p.reg = LogicalRegister::make(3);
  emit_braid_cnot(p, 1);

  // Dense check: conjugation action of the primitive agrees with the
  // tableau on every generator image.
  for (std::size_t i = 0; i < 5; ++i) {
    for (char basis : {'X', 'Z'}) {
      auto before = PauliOperator::single(5, i, basis);
      auto after = conjugate(macro, before);
      // The compiler primitive is CNOT(a->1) CNOT(2->b): conjugate through
      // the pair of CNOT tableaux directly.
      auto prim = compose(CliffordTableau::cnot(5, 3, 0), CliffordTableau::cnot(5, 1, 4));
      CHECK(after == conjugate(prim, before));
    }
  }
}
