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

#include "defectkit/textform.hpp"

using namespace dk;

namespace {

const char* kSurfaceModel = R"(defectkit-format 1
kind model

# the 2D surface code excitation algebra
dimension 2
generator e dim=0 theta=+1
generator m dim=0 theta=+1
braid e m -1

wall hadamard dim=1
  map e -> m
  map m -> e
end
)";

const char* kTwistScheme = R"(defectkit-format 1
kind scheme
name twists_from_file

model builtin surface_2d
use_wall wall_left hadamard
use_wall wall_right hadamard
defect tl twist dim=0 wall=wall_left tag=point
defect bl twist dim=0 wall=wall_left tag=point
defect tr twist dim=0 wall=wall_right tag=point
defect br twist dim=0 wall=wall_right tag=point
qubit q0
  x em connects tl tr
  z e encloses_pair tl bl
end
move s exchange tl bl
  X:q0 -> i X:q0 Z:q0
end
move h exchange bl tr
  X:q0 -> Z:q0
  Z:q0 -> X:q0
end
)";

}  // namespace

TEST_CASE("model files parse and validate") {
  auto model = parse_model_text(kSurfaceModel);
  CHECK(model->spatial_dim() == 2);
  CHECK(model->generator_count() == 2);
  CHECK(model->braiding(0, 1) == -1);
  auto wall = get_wall(model, "hadamard");
  CHECK(wall_apply(wall, make_excitation(model, "e")) == make_excitation(model, "m"));
  auto report = clifford_eligibility(model, wall);
  CHECK(report.eligible);
}

TEST_CASE("model emitter round-trips") {
  auto model = builtin_model("surface_2d_2copy");
  auto text = model_to_text(*model);
  auto parsed = parse_model_text(text);
  CHECK(parsed->generator_count() == model->generator_count());
  CHECK(parsed->wall_specs().size() == model->wall_specs().size());
  CHECK(model_to_text(*parsed) == text);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_model_text("defectkit-format 1\nkind model\ndimension 2\nbogus x\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_model_text("kind model\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_model_text("defectkit-format 2\nkind model\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_lattice_text(kSurfaceModel), std::invalid_argument);
}

TEST_CASE("lattice files round-trip") {
  LatticeSpec spec;
  spec.width = 5;
  spec.height = 5;
  spec.holes.push_back(HoleSpec{Boundary::rough, 1, 1, 1, 1});
  spec.holes.push_back(HoleSpec{Boundary::smooth, 2, 2, 1, 1});
  auto text = lattice_to_text(spec);
  auto parsed = parse_lattice_text(text);
  CHECK(parsed.width == 5);
  CHECK(parsed.holes.size() == 2);
  CHECK(parsed.holes[1].type == Boundary::smooth);
  CHECK(lattice_to_text(parsed) == text);
  CHECK(peek_kind(text) == "lattice");
}

TEST_CASE("invalid lattice documents are rejected with context") {
  const char* bad = R"(defectkit-format 1
kind lattice
width 3
height 2
hole rough 0 0 1 1
)";
  CHECK_THROWS_AS(parse_lattice_text(bad), std::invalid_argument);
}

TEST_CASE("scheme files reproduce the built-in twist scheme") {
  auto scheme = parse_scheme_text(kTwistScheme);
  CHECK(scheme.name == "twists_from_file");
  CHECK(qubit_basis(scheme.setup).size() == 1);
  REQUIRE(scheme.moves.size() == 2);

  auto s_tab = braid_action(scheme.setup, scheme.moves[0]);
  CHECK(s_tab.x_image(0).str() == "+Y");
  auto h_tab = braid_action(scheme.setup, scheme.moves[1]);
  CHECK(equals_up_to_phase(h_tab, CliffordTableau::hadamard(1, 0)));

  auto group = generate_braid_group(scheme.setup, scheme.moves, 100);
  CHECK(group.group.order == 24);
}

TEST_CASE("scheme files support inline models") {
  std::string text = R"(defectkit-format 1
kind scheme
name inline_holes

dimension 2
generator e dim=0 theta=+1
generator m dim=0 theta=+1
braid e m -1

defect r1 hole dim=0 condenses e
defect r2 hole dim=0 condenses e
qubit q0
  x e connects r1 r2
  z m encloses r1
end
)";
  auto scheme = parse_scheme_text(text);
  CHECK(scheme.setup.model->generator_count() == 2);
  CHECK(qubit_basis(scheme.setup).size() == 1);
  CHECK(scheme.setup.defect("r1").condensable.size() == 2);
}

TEST_CASE("scheme validation failures surface during parsing") {
  std::string text = R"(defectkit-format 1
kind scheme
model builtin surface_2d
defect s1 hole dim=0 condenses m
qubit q0
  x e connects s1 s1
  z m encloses s1
end
)";
  // e cannot condense on an m-condensing hole.
  CHECK_THROWS_AS(parse_scheme_text(text), std::invalid_argument);
}
