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

#include "defectkit/deform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "defectkit/gf2.hpp"

namespace dk {

namespace {

std::pair<int, int> dir_delta(Dir d) {
  switch (d) {
    case Dir::up:
      return {-2, 0};
    case Dir::down:
      return {2, 0};
    case Dir::left:
      return {0, -2};
    case Dir::right:
      return {0, 2};
  }
  return {0, 0};
}

CoordBox shifted(const CoordBox& box, int dr, int dc) {
  return CoordBox{box.r0 + dr, box.c0 + dc, box.r1 + dr, box.c1 + dc};
}

CoordBox bounding(const CoordBox& a, const CoordBox& b) {
  return CoordBox{std::min(a.r0, b.r0), std::min(a.c0, b.c0),
                  std::max(a.r1, b.r1), std::max(a.c1, b.c1)};
}

CoordBox expand(const CoordBox& b, int by) {
  return CoordBox{b.r0 - by, b.c0 - by, b.r1 + by, b.c1 + by};
}

bool boxes_intersect(const CoordBox& a, const CoordBox& b) {
  return a.r0 <= b.r1 && b.r0 <= a.r1 && a.c0 <= b.c1 && b.c0 <= a.c1;
}

bool is_vertex_site(Coord p) {
  return ((p.r % 2) + 2) % 2 == 0 && ((p.c % 2) + 2) % 2 == 0;
}

}  // namespace

DeformationState::DeformationState(const PlanarCode& deformable)
    : n_(deformable.code.n),
      generators_(deformable.code.generators),
      frame_(PauliOperator::identity(deformable.code.n)) {
  if (!deformable.layout.stabilise_holes()) {
    throw std::invalid_argument(
        "DeformationState requires a code built with stabilised holes");
  }
  reps_ = deformable.code.logical_pairs;
}

void DeformationState::apply_measurement(const PauliOperator& m) {
  if (m.num_qubits() != n_) {
    throw std::invalid_argument("apply_measurement: qubit count mismatch");
  }
  if (m.phase() % 2 != 0) {
    throw std::invalid_argument("apply_measurement: non-Hermitian operator");
  }
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!commutes(generators_[i], m)) hits.push_back(i);
  }
  if (hits.empty()) {
    // Either already in the group (no-op) or a logical measurement.
    PauliSpan span(n_, generators_);
    if (span.contains(m)) {
      return;
    }
    throw std::invalid_argument(
        "logical measurement attempted: operator commutes with the group but "
        "is not in it");
  }
  PauliOperator pivot = generators_[hits[0]];
  for (std::size_t i = 1; i < hits.size(); ++i) {
    generators_[hits[i]] = multiply(generators_[hits[i]], pivot);
  }
  for (auto& [xb, zb] : reps_) {
    if (!commutes(xb, m)) xb = multiply(xb, pivot);
    if (!commutes(zb, m)) zb = multiply(zb, pivot);
  }
  PauliOperator replacement = m;
  replacement.set_phase(0);
  generators_[hits[0]] = replacement;
  frame_ = multiply(frame_, pivot);
  // A Pauli frame is letters plus a sign; drop any accumulated i from
  // reordering non-commuting corrections.
  frame_.set_phase(frame_.phase() & 2u);
}

std::size_t DeformationState::k() const {
  return n_ - symplectic_rank(n_, generators_);
}

BraidScript move_hole(const PlanarCode& code, std::size_t hole_index,
                      const std::vector<Dir>& path) {
  const LatticeSpec& spec = code.layout.spec();
  if (hole_index >= spec.holes.size()) {
    throw std::invalid_argument("move_hole: no such hole");
  }
  const PlanarLayout& layout = code.layout;
  std::vector<CoordBox> boxes;
  for (const auto& h : spec.holes) boxes.push_back(hole_box(h));
  bool rough = spec.holes[hole_index].type == Boundary::rough;

  BraidScript script;
  for (Dir d : path) {
    auto [dr, dc] = dir_delta(d);
    CoordBox current = boxes[hole_index];
    CoordBox next = shifted(current, dr, dc);
    CoordBox transient = bounding(current, next);
    // Stay well inside the outer boundary.
    if (transient.r0 - layout.r_lo() < 2 || layout.r_hi() - transient.r1 < 2 ||
        transient.c0 - layout.c_lo() < 2 || layout.c_hi() - transient.c1 < 2) {
      throw std::invalid_argument("move_hole: path leaves the bulk");
    }
    for (std::size_t j = 0; j < boxes.size(); ++j) {
      if (j == hole_index) continue;
      if (boxes_intersect(transient, boxes[j])) {
        throw std::invalid_argument("move_hole: path collides with another hole");
      }
      // Carve/fill supports reach one site beyond the transient box; they
      // must not touch another hole's stabilised interior qubits.
      for (Coord p : layout.qubit_points_in_box(boxes[j])) {
        if (expand(transient, 1).contains(p)) {
          throw std::invalid_argument(
              "move_hole: path would disturb another hole's interior");
        }
      }
    }
    // Carve the qubits the hole grows over.
    for (Coord p : layout.qubit_points_in_box(transient)) {
      if (current.contains(p)) continue;
      script.steps.push_back(DeformationStep{StepKind::carve,
                                             rough ? 'Z' : 'X', p});
    }
    // Fill the stabiliser sites the hole vacates.
    auto sites = rough ? layout.star_sites_in_box(transient)
                       : layout.face_sites_in_box(transient);
    for (Coord site : sites) {
      if (next.contains(site)) continue;
      script.steps.push_back(DeformationStep{StepKind::fill, ' ', site});
    }
    script.moves.push_back(HoleMove{hole_index, d});
    boxes[hole_index] = next;
  }
  return script;
}

BraidResult run_braid(const PlanarCode& code, const BraidScript& script,
                      const RunOptions& options) {
  // Work on the stabilised-hole twin so carved qubits stay in the register.
  PlanarCode twin = code.layout.stabilise_holes()
                        ? code
                        : build_planar_code(code.layout.spec(), true);
  const PlanarLayout& layout = twin.layout;
  DeformationState state(twin);
  std::size_t k0 = twin.code.k();

  // Hole configuration tracking for the restoration check.
  std::vector<CoordBox> boxes;
  for (const auto& h : layout.spec().holes) boxes.push_back(hole_box(h));
  std::vector<CoordBox> initial_boxes = boxes;
  for (const auto& mv : script.moves) {
    auto [dr, dc] = dir_delta(mv.dir);
    if (mv.hole_index >= boxes.size()) {
      throw std::invalid_argument("run_braid: move references missing hole");
    }
    boxes[mv.hole_index] = shifted(boxes[mv.hole_index], dr, dc);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (boxes[i].r0 != initial_boxes[i].r0 || boxes[i].c0 != initial_boxes[i].c0) {
      throw std::invalid_argument(
          "run_braid: configuration not restored (hole " + std::to_string(i) +
          " ends displaced)");
    }
  }

  BraidResult result;
  for (std::size_t s = 0; s < script.steps.size(); ++s) {
    const auto& step = script.steps[s];
    PauliOperator m(twin.code.n);
    if (step.kind == StepKind::carve) {
      m = PauliOperator::single(twin.code.n, layout.qubit_index(step.target),
                                step.basis);
    } else {
      m = layout.pristine_site_op(step.target);
    }
    state.apply_measurement(m);
    if (state.k() != k0) {
      throw std::runtime_error("run_braid: encoded qubit count changed mid-script");
    }
    bool translation_end =
        step.kind == StepKind::fill &&
        (s + 1 == script.steps.size() || script.steps[s + 1].kind == StepKind::carve);
    if (options.distance_floor > 1 && translation_end) {
      StabiliserCode snapshot{twin.code.n, state.generators(), {}};
      auto d = distance_bruteforce(snapshot, options.distance_floor - 1);
      if (d.found) {
        throw std::runtime_error(
            "run_braid: distance floor violated (weight " +
            std::to_string(d.distance) + " logical found)");
      }
      ++result.checkpoints;
    }
  }

  // The final stabiliser group must equal the initial one.
  PauliSpan initial_span(twin.code.n, twin.code.generators);
  Gf2Echelon combined(2 * twin.code.n);
  for (const auto& g : twin.code.generators) combined.add_row(symplectic_row(g));
  std::size_t rank0 = combined.rank();
  for (const auto& g : state.generators()) {
    if (!initial_span.contains(g)) {
      throw std::invalid_argument(
          "run_braid: configuration not restored (stabiliser group changed)");
    }
  }
  if (symplectic_rank(twin.code.n, state.generators()) != rank0) {
    throw std::runtime_error("run_braid: stabiliser rank drifted");
  }

  // Express each final representative in the initial basis modulo the
  // initial stabiliser group, tracking the exact sign.
  std::vector<PauliOperator> basis = twin.code.generators;
  std::size_t gen_count = basis.size();
  for (const auto& [xb, zb] : twin.code.logical_pairs) {
    basis.push_back(xb);
    basis.push_back(zb);
  }
  Gf2Echelon ech(2 * twin.code.n);
  for (const auto& b : basis) ech.add_row(symplectic_row(b));

  std::size_t k = twin.code.logical_pairs.size();
  auto logical_image = [&](const PauliOperator& rep) {
    auto combo = ech.decompose(symplectic_row(rep));
    if (!combo) {
      throw std::runtime_error("run_braid: representative left the initial span");
    }
    PauliOperator big = PauliOperator::identity(twin.code.n);
    PauliOperator small = PauliOperator::identity(k);
    for (std::size_t j : *combo) {
      big = multiply(big, basis[j]);
      if (j >= gen_count) {
        std::size_t l = j - gen_count;
        small = multiply(small, PauliOperator::single(k, l / 2, l % 2 == 0 ? 'X' : 'Z'));
      }
    }
    if (!big.same_letters(rep)) {
      throw std::runtime_error("run_braid: decomposition mismatch");
    }
    unsigned sign = (rep.phase() + 4 - big.phase()) & 3u;
    if (sign % 2 != 0) {
      throw std::runtime_error("run_braid: non-Hermitian sign in decomposition");
    }
    small.set_phase(small.phase() + sign);
    return small;
  };

  std::vector<PauliOperator> x_images, z_images;
  for (const auto& [xb, zb] : state.representatives()) {
    x_images.push_back(logical_image(xb));
    z_images.push_back(logical_image(zb));
  }
  result.tableau = CliffordTableau::from_images(std::move(x_images), std::move(z_images));
  result.byproduct = state.byproduct_frame();
  return result;
}

std::string script_to_text(const BraidScript& script) {
  std::ostringstream out;
  for (const auto& step : script.steps) {
    if (step.kind == StepKind::carve) {
      out << "carve " << step.basis << ' ' << step.target.r << ' '
          << step.target.c << '\n';
    } else {
      out << "fill " << (is_vertex_site(step.target) ? "star" : "face") << ' '
          << step.target.r << ' ' << step.target.c << '\n';
    }
  }
  for (const auto& mv : script.moves) {
    char d = mv.dir == Dir::up      ? 'U'
             : mv.dir == Dir::down  ? 'D'
             : mv.dir == Dir::left  ? 'L'
                                    : 'R';
    out << "move " << mv.hole_index << ' ' << d << '\n';
  }
  return out.str();
}

BraidScript script_from_text(const std::string& text) {
  BraidScript script;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "carve") {
      char basis;
      int r, c;
      if (!(ls >> basis >> r >> c) || (basis != 'Z' && basis != 'X')) {
        throw std::invalid_argument("script line " + std::to_string(line_no) +
                                    ": expected 'carve Z|X r c'");
      }
      script.steps.push_back(DeformationStep{StepKind::carve, basis, Coord{r, c}});
    } else if (word == "fill") {
      std::string site;
      int r, c;
      if (!(ls >> site >> r >> c)) {
        throw std::invalid_argument("script line " + std::to_string(line_no) +
                                    ": expected 'fill star|face r c'");
      }
      script.steps.push_back(DeformationStep{StepKind::fill, ' ', Coord{r, c}});
    } else if (word == "move") {
      std::size_t hole;
      char d;
      if (!(ls >> hole >> d)) {
        throw std::invalid_argument("script line " + std::to_string(line_no) +
                                    ": expected 'move <hole> U|D|L|R'");
      }
      Dir dir = d == 'U' ? Dir::up : d == 'D' ? Dir::down : d == 'L' ? Dir::left : Dir::right;
      script.moves.push_back(HoleMove{hole, dir});
    } else {
      throw std::invalid_argument("script line " + std::to_string(line_no) +
                                  ": unknown step '" + word + "'");
    }
  }
  return script;
}

}  // namespace dk
