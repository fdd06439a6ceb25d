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

#include <algorithm>
#include <set>
#include <stdexcept>

#include "defectkit/anyon.hpp"

using namespace dk;

TEST_CASE("surface code fusion and statistics") {
  auto model = builtin_model("surface_2d");
  auto e = make_excitation(model, "e");
  auto m = make_excitation(model, "m");
  auto em = make_excitation(model, "em");
  auto vac = vacuum(model);

  CHECK(fuse(e, m) == em);
  CHECK(fuse(e, e) == vac);
  CHECK(fuse(vac, m) == m);

  CHECK(statistics(e) == 1);
  CHECK(statistics(m) == 1);
  CHECK(statistics(em) == -1);
  CHECK(statistics(vac) == 1);
  CHECK(statistics(em) == statistics(e) * statistics(m) * braid_phase(e, m));

  CHECK(braid_phase(e, m) == -1);
  CHECK(braid_phase(e, vac) == 1);

  CHECK(is_generalised_fermion(em));
  CHECK_FALSE(is_generalised_fermion(vac));
  CHECK_FALSE(is_generalised_fermion(e));
}

TEST_CASE("independent copies commute") {
  auto model = builtin_model("surface_2d_3copy");
  auto e1 = make_excitation(model, "e1");
  auto m1 = make_excitation(model, "m1");
  auto m2 = make_excitation(model, "m2");
  CHECK(braid_phase(e1, m1) == -1);
  CHECK(braid_phase(e1, m2) == 1);
}

TEST_CASE("statistics and braiding are consistent on all elements") {
  for (const auto& name : builtin_model_names()) {
    auto model = builtin_model(name);
    CAPTURE(name);
    CHECK(validate_model(*model).ok);
    ExcMask full = model->full_mask();
    for (ExcMask a = 0; a <= full; ++a) {
      Excitation ea{model, a};
      for (ExcMask b = 0; b <= full; ++b) {
        Excitation eb{model, b};
        CHECK(statistics(fuse(ea, eb)) ==
              statistics(ea) * statistics(eb) * braid_phase(ea, eb));
        // Bilinearity of the braiding form.
        for (ExcMask c = 0; c <= full && full <= 15; ++c) {
          Excitation ec{model, c};
          CHECK(braid_phase(fuse(ea, eb), ec) ==
                braid_phase(ea, ec) * braid_phase(eb, ec));
        }
      }
    }
  }
}

TEST_CASE("model mismatch is rejected") {
  auto m1 = builtin_model("surface_2d");
  auto m2 = builtin_model("surface_2d");
  CHECK_THROWS_AS(fuse(make_excitation(m1, "e"), make_excitation(m2, "e")),
                  std::invalid_argument);
}

TEST_CASE("hadamard wall action") {
  auto model = builtin_model("surface_2d");
  auto wall = get_wall(model, "hadamard");
  auto e = make_excitation(model, "e");
  auto m = make_excitation(model, "m");
  CHECK(wall_apply(wall, e) == m);
  CHECK(wall_apply(wall, m) == e);
  CHECK(wall_apply(wall, vacuum(model)) == vacuum(model));
  // The wall is an involution on all four excitations.
  for (ExcMask a = 0; a <= model->full_mask(); ++a) {
    Excitation x{model, a};
    CHECK(wall_apply(wall, wall_apply(wall, x)) == x);
  }
}

TEST_CASE("wall validation preserves theta, braiding, dimension") {
  auto model = builtin_model("surface_3d");
  // e (dim 0) <-> m (dim 1) cannot be a wall in the 3D surface code.
  WallSpec bad{"bad_swap", {ExcMask{2}, ExcMask{1}}, 1};
  auto report = validate_wall(model, bad);
  CHECK_FALSE(report.ok);
  CHECK(report.message.find("dimension") != std::string::npos);
  CHECK_THROWS_AS(make_wall(model, bad), std::invalid_argument);

  // A non-invertible map is rejected.
  auto model2d = builtin_model("surface_2d");
  WallSpec degenerate{"degenerate", {ExcMask{1}, ExcMask{1}}, 1};
  CHECK_FALSE(validate_wall(model2d, degenerate).ok);

  // In the Levin-Wen model the same letter swap breaks theta.
  auto lw = builtin_model("levin_wen_3d");
  WallSpec lw_swap{"swap", {ExcMask{2}, ExcMask{1}}, 1};
  auto lw_report = validate_wall(lw, lw_swap);
  CHECK_FALSE(lw_report.ok);
}

TEST_CASE("condensable excitations at twists") {
  auto model = builtin_model("surface_2d");
  auto condensed = condensable_at_twist(get_wall(model, "hadamard"));
  std::set<ExcMask> masks;
  for (const auto& x : condensed) masks.insert(x.bits);
  CHECK(masks == std::set<ExcMask>{0, 3});  // vacuum and em

  auto identity = condensable_at_twist(identity_wall(model));
  CHECK(identity.size() == 1);
  CHECK(identity[0].is_vacuum());

  auto model2 = builtin_model("surface_2d_2copy");
  auto swap_condensed = condensable_at_twist(get_wall(model2, "swap_copies"));
  std::set<std::string> names;
  for (const auto& x : swap_condensed) names.insert(model2->describe_mask(x.bits));
  CHECK(names == std::set<std::string>{"1", "e1.e2", "m1.m2", "e1.m1.e2.m2"});
  // Always a subgroup containing the vacuum.
  CHECK(names.count("1") == 1);
}

TEST_CASE("condensable set is a subgroup") {
  for (const auto& name : builtin_model_names()) {
    auto model = builtin_model(name);
    for (const auto& spec : model->wall_specs()) {
      auto wall = make_wall(model, spec);
      auto condensed = condensable_at_twist(wall);
      std::set<ExcMask> masks;
      for (const auto& x : condensed) masks.insert(x.bits);
      CHECK(masks.count(0) == 1);
      for (ExcMask a : masks) {
        for (ExcMask b : masks) {
          CHECK(masks.count(a ^ b) == 1);
        }
      }
    }
  }
}

TEST_CASE("eligibility of the three twist schemes") {
  SUBCASE("2D surface code") {
    auto model = builtin_model("surface_2d");
    auto report = clifford_eligibility(model, get_wall(model, "hadamard"));
    REQUIRE(report.eligible);
    CHECK(model->describe_mask(report.fermion->bits) == "e.m");
    CHECK(model->describe_mask(report.partner->bits) == "e");
    CHECK(report.fermion_dim == 0);
    CHECK(report.twist_dim == 0);
    CHECK(report.braid_check);
    CHECK_FALSE(report.needs_threaded_puncture);
  }
  SUBCASE("4D self-dual surface code") {
    auto model = builtin_model("surface_4d_selfdual");
    auto report = clifford_eligibility(model, get_wall(model, "hadamard"));
    REQUIRE(report.eligible);
    CHECK(model->describe_mask(report.fermion->bits) == "e.m");
    CHECK(report.fermion_dim == 1);
    CHECK(report.twist_dim == 2);
    CHECK(report.braid_check);
    CHECK(report.needs_threaded_puncture);
  }
  SUBCASE("3D Levin-Wen fermion model") {
    auto model = builtin_model("levin_wen_3d");
    auto report = clifford_eligibility(model, get_wall(model, "attach_fermion"));
    REQUIRE(report.eligible);
    CHECK(model->describe_mask(report.fermion->bits) == "e");
    CHECK(model->describe_mask(report.partner->bits) == "m");
    CHECK(report.twist_dim == 0);
    CHECK(report.braid_check);
  }
}

TEST_CASE("eligibility negatives") {
  auto model = builtin_model("surface_2d");
  auto report = clifford_eligibility(model, identity_wall(model));
  CHECK_FALSE(report.eligible);
  CHECK_FALSE(report.reason.empty());

  auto model2 = builtin_model("surface_2d_2copy");
  auto boson = clifford_eligibility(model2, get_wall(model2, "swap_copies"));
  CHECK_FALSE(boson.eligible);
}

TEST_CASE("eligibility is stable under trivial embedding") {
  auto base = builtin_model("surface_2d");
  auto base_report = clifford_eligibility(base, get_wall(base, "hadamard"));

  // Same model with an extra decoupled boson generator appended.
  auto extended = std::make_shared<ExcitationModel>(
      2, std::vector<std::string>{"e", "m", "x"}, std::vector<int>{0, 0, 0},
      std::vector<int>{1, 1, 1},
      std::vector<std::vector<int>>{{1, -1, 1}, {-1, 1, 1}, {1, 1, 1}});
  WallSpec wall{"hadamard", {ExcMask{2}, ExcMask{1}, ExcMask{4}}, 1};
  auto ext_report =
      clifford_eligibility(extended, make_wall(ModelPtr(extended), wall));

  REQUIRE(base_report.eligible);
  REQUIRE(ext_report.eligible);
  CHECK(base->describe_mask(base_report.fermion->bits) ==
        extended->describe_mask(ext_report.fermion->bits));
  CHECK(base->describe_mask(base_report.partner->bits) ==
        extended->describe_mask(ext_report.partner->bits));
  CHECK(base_report.twist_dim == ext_report.twist_dim);
}

TEST_CASE("selfdual family scales") {
  for (int dim : {2, 4, 6, 8}) {
    auto model = selfdual_model(dim);
    auto report = clifford_eligibility(model, get_wall(model, "hadamard"));
    CAPTURE(dim);
    REQUIRE(report.eligible);
    CHECK(report.fermion_dim == dim / 2 - 1);
    CHECK(report.twist_dim == 2 * (dim / 2 - 1));
  }
}

TEST_CASE("non-eigenstate labels are carried as metadata") {
  auto model = builtin_model("surface_3d_3copy");
  REQUIRE(model->labels().size() == 3);
  CHECK(model->labels()[0].name == "s12");
  CHECK(model->labels()[0].dim == 1);
}

TEST_CASE("excitation parsing") {
  auto model = builtin_model("surface_2d_2copy");
  CHECK(make_excitation(model, "e1.m2").bits ==
        (make_excitation(model, "e1").bits | make_excitation(model, "m2").bits));
  CHECK(make_excitation(model, "e1m2") == make_excitation(model, "e1.m2"));
  CHECK(make_excitation(model, "1").is_vacuum());
  CHECK_THROWS_AS(make_excitation(model, "zz"), std::invalid_argument);
}
