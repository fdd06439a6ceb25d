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

#include "defectkit/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "defectkit/gf2.hpp"

namespace dk {

namespace {

bool is_vertex(Coord p) { return p.r % 2 == 0 && p.c % 2 == 0; }
bool is_face(Coord p) { return ((p.r % 2) + 2) % 2 == 1 && ((p.c % 2) + 2) % 2 == 1; }

int floor_mod2(int v) { return ((v % 2) + 2) % 2; }

CoordBox expand(const CoordBox& b, int by) {
  return CoordBox{b.r0 - by, b.c0 - by, b.r1 + by, b.c1 + by};
}

bool boxes_intersect(const CoordBox& a, const CoordBox& b) {
  return a.r0 <= b.r1 && b.r0 <= a.r1 && a.c0 <= b.c1 && b.c0 <= a.c1;
}

std::vector<Coord> incident_points(Coord site) {
  return {{site.r - 1, site.c}, {site.r + 1, site.c},
          {site.r, site.c - 1}, {site.r, site.c + 1}};
}

}  // namespace

CoordBox hole_box(const HoleSpec& hole) {
  if (hole.type == Boundary::rough) {
    return CoordBox{2 * hole.r0, 2 * hole.c0, 2 * (hole.r0 + hole.rows - 1),
                    2 * (hole.c0 + hole.cols - 1)};
  }
  return CoordBox{2 * hole.r0 + 1, 2 * hole.c0 + 1,
                  2 * (hole.r0 + hole.rows - 1) + 1,
                  2 * (hole.c0 + hole.cols - 1) + 1};
}

LatticeReport validate_spec(const LatticeSpec& spec) {
  if (spec.width < 1 || spec.height < 1) {
    return {false, "lattice must have at least one plaquette in each direction", {}};
  }
  int r_lo = spec.top == Boundary::smooth ? 0 : -1;
  int r_hi = spec.bottom == Boundary::smooth ? 2 * spec.height : 2 * spec.height + 1;
  int c_lo = spec.left == Boundary::smooth ? 0 : -1;
  int c_hi = spec.right == Boundary::smooth ? 2 * spec.width : 2 * spec.width + 1;
  std::vector<CoordBox> boxes;
  for (std::size_t i = 0; i < spec.holes.size(); ++i) {
    const HoleSpec& h = spec.holes[i];
    if (h.rows < 1 || h.cols < 1) {
      return {false, "hole " + std::to_string(i) + " has empty extent", {}};
    }
    CoordBox box = hole_box(h);
    if (box.r0 - r_lo < 2 || r_hi - box.r1 < 2 || box.c0 - c_lo < 2 ||
        c_hi - box.c1 < 2) {
      return {false,
              "hole " + std::to_string(i) +
                  " touches the outer boundary (one stabiliser line of "
                  "separation is required)",
              {}};
    }
    boxes.push_back(box);
  }
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    for (std::size_t j = i + 1; j < boxes.size(); ++j) {
      if (boxes_intersect(expand(boxes[i], 1), expand(boxes[j], 1))) {
        return {false,
                "holes " + std::to_string(i) + " and " + std::to_string(j) +
                    " are adjacent or overlapping; their boundaries would merge",
                std::make_pair(i, j)};
      }
    }
  }
  return {};
}

PlanarLayout PlanarLayout::build(const LatticeSpec& spec, bool stabilise_holes) {
  auto report = validate_spec(spec);
  if (!report.ok) {
    throw std::invalid_argument("lattice spec: " + report.message);
  }
  PlanarLayout layout;
  layout.spec_ = spec;
  layout.stabilise_holes_ = stabilise_holes;
  layout.r_lo_ = spec.top == Boundary::smooth ? 0 : -1;
  layout.r_hi_ = spec.bottom == Boundary::smooth ? 2 * spec.height : 2 * spec.height + 1;
  layout.c_lo_ = spec.left == Boundary::smooth ? 0 : -1;
  layout.c_hi_ = spec.right == Boundary::smooth ? 2 * spec.width : 2 * spec.width + 1;

  std::vector<CoordBox> boxes;
  for (const auto& h : spec.holes) boxes.push_back(hole_box(h));

  for (int r = layout.r_lo_; r <= layout.r_hi_; ++r) {
    for (int c = layout.c_lo_; c <= layout.c_hi_; ++c) {
      Coord p{r, c};
      if (floor_mod2(r + c) != 1) continue;
      if (!stabilise_holes) {
        bool deleted = false;
        for (const auto& box : boxes) {
          if (box.contains(p)) {
            deleted = true;
            break;
          }
        }
        if (deleted) continue;
      }
      layout.index_[p] = layout.points_.size();
      layout.points_.push_back(p);
    }
  }
  return layout;
}

bool PlanarLayout::in_outer_box(Coord p) const {
  return p.r >= r_lo_ && p.r <= r_hi_ && p.c >= c_lo_ && p.c <= c_hi_;
}

bool PlanarLayout::is_qubit_point(Coord p) const {
  return in_outer_box(p) && floor_mod2(p.r + p.c) == 1;
}

bool PlanarLayout::qubit_exists(Coord p) const { return index_.count(p) > 0; }

std::size_t PlanarLayout::qubit_index(Coord p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw std::invalid_argument("no qubit at (" + std::to_string(p.r) + "," +
                                std::to_string(p.c) + ")");
  }
  return it->second;
}

PauliOperator PlanarLayout::pristine_site_op(Coord site) const {
  char basis = is_vertex(site) ? 'X' : 'Z';
  if (!is_vertex(site) && !is_face(site)) {
    throw std::invalid_argument("not a stabiliser site");
  }
  PauliOperator op(points_.size());
  for (Coord p : incident_points(site)) {
    if (!is_qubit_point(p)) continue;
    std::size_t idx = qubit_index(p);  // throws if trimmed away
    if (basis == 'X') {
      op.set_x(idx, true);
    } else {
      op.set_z(idx, true);
    }
  }
  return op;
}

std::optional<PauliOperator> PlanarLayout::truncated_site_op(Coord site) const {
  char basis = is_vertex(site) ? 'X' : 'Z';
  PauliOperator op(points_.size());
  std::size_t weight = 0;
  for (Coord p : incident_points(site)) {
    if (!is_qubit_point(p) || !qubit_exists(p)) continue;
    std::size_t idx = qubit_index(p);
    if (basis == 'X') {
      op.set_x(idx, true);
    } else {
      op.set_z(idx, true);
    }
    ++weight;
  }
  if (weight == 0) return std::nullopt;
  return op;
}

std::vector<Coord> PlanarLayout::star_sites_in_box(const CoordBox& box) const {
  std::vector<Coord> out;
  for (int r = box.r0; r <= box.r1; ++r) {
    for (int c = box.c0; c <= box.c1; ++c) {
      Coord p{r, c};
      if (is_vertex(p) && in_outer_box(p)) out.push_back(p);
    }
  }
  return out;
}

std::vector<Coord> PlanarLayout::face_sites_in_box(const CoordBox& box) const {
  std::vector<Coord> out;
  for (int r = box.r0; r <= box.r1; ++r) {
    for (int c = box.c0; c <= box.c1; ++c) {
      Coord p{r, c};
      if (is_face(p) && in_outer_box(p)) out.push_back(p);
    }
  }
  return out;
}

std::vector<Coord> PlanarLayout::qubit_points_in_box(const CoordBox& box) const {
  std::vector<Coord> out;
  for (int r = box.r0; r <= box.r1; ++r) {
    for (int c = box.c0; c <= box.c1; ++c) {
      Coord p{r, c};
      if (is_qubit_point(p)) out.push_back(p);
    }
  }
  return out;
}

namespace {

// Accumulates a pure-type support as a coordinate set with XOR semantics.
class SupportBuilder {
 public:
  void toggle(Coord p) {
    auto it = points_.find(p);
    if (it == points_.end()) {
      points_.insert(p);
    } else {
      points_.erase(it);
    }
  }
  std::optional<PauliOperator> to_pauli(const PlanarLayout& layout, char basis) const {
    PauliOperator op(layout.num_qubits());
    if (points_.empty()) return std::nullopt;
    for (Coord p : points_) {
      if (!layout.qubit_exists(p)) return std::nullopt;
      std::size_t idx = layout.qubit_index(p);
      if (basis == 'X') {
        op.set_x(idx, true);
      } else {
        op.set_z(idx, true);
      }
    }
    return op;
  }

 private:
  std::set<Coord> points_;
};

struct Seed {
  std::string name;
  PauliOperator x_bar;
  PauliOperator z_bar;
};

// Straight or L-shaped primal path between two vertex boxes (rough holes):
// Z operators whose endpoints rest on the removed-star regions.
void primal_path_between(SupportBuilder& sb, const CoordBox& a, const CoordBox& b) {
  int col = a.c0;
  int row = b.r0;
  // Vertical run along `col` from box a to row `row`.
  int r_from = std::min(a.r1, row), r_to = std::max(a.r0, row);
  if (row > a.r1) {
    r_from = a.r1;
    r_to = row;
  } else if (row < a.r0) {
    r_from = row;
    r_to = a.r0;
  } else {
    r_from = r_to = row;  // already aligned: no vertical run
  }
  for (int r = r_from + 1; r < r_to; r += 1) {
    if (floor_mod2(r) == 1) sb.toggle({r, col});
  }
  // Horizontal run along `row` from col to box b.
  int c_from, c_to;
  if (b.c0 > col) {
    c_from = col;
    c_to = b.c0;
  } else if (b.c1 < col) {
    c_from = b.c1;
    c_to = col;
  } else {
    return;  // vertically aligned
  }
  for (int c = c_from + 1; c < c_to; c += 1) {
    if (floor_mod2(c) == 1) sb.toggle({row, c});
  }
}

// Same on the dual lattice (smooth holes): X operators between face boxes.
void dual_path_between(SupportBuilder& sb, const CoordBox& a, const CoordBox& b) {
  int col = a.c0;
  int row = b.r0;
  int r_from, r_to;
  if (row > a.r1) {
    r_from = a.r1;
    r_to = row;
  } else if (row < a.r0) {
    r_from = row;
    r_to = a.r0;
  } else {
    r_from = r_to = row;
  }
  for (int r = r_from + 1; r < r_to; r += 1) {
    if (floor_mod2(r + col) == 1) sb.toggle({r, col});
  }
  int c_from, c_to;
  if (b.c0 > col) {
    c_from = col;
    c_to = b.c0;
  } else if (b.c1 < col) {
    c_from = b.c1;
    c_to = col;
  } else {
    return;
  }
  for (int c = c_from + 1; c < c_to; c += 1) {
    if (floor_mod2(row + c) == 1) sb.toggle({row, c});
  }
}

std::vector<Seed> geometric_seeds(const PlanarLayout& layout) {
  const LatticeSpec& spec = layout.spec();
  std::vector<Seed> seeds;
  std::vector<CoordBox> boxes;
  for (const auto& h : spec.holes) boxes.push_back(hole_box(h));

  auto clear_of_holes = [&](Coord p) {
    for (const auto& box : boxes) {
      if (expand(box, 1).contains(p)) return false;
    }
    return true;
  };

  // Boundary-encoded qubit for the standard strip configurations.
  bool tb_rough = spec.top == Boundary::rough && spec.bottom == Boundary::rough &&
                  spec.left == Boundary::smooth && spec.right == Boundary::smooth;
  bool lr_rough = spec.left == Boundary::rough && spec.right == Boundary::rough &&
                  spec.top == Boundary::smooth && spec.bottom == Boundary::smooth;
  if (tb_rough || lr_rough) {
    // Z-string between the rough pair of sides, X-string between the smooth
    // pair, placed on the first clear line.
    // Hole strings run to the top (rough) and right (smooth) when possible,
    // so the patch strings are routed along the bottom / left to avoid
    // crossing them.
    std::optional<PauliOperator> zs, xs;
    if (tb_rough) {
      for (int c = layout.c_lo(); c <= layout.c_hi() && !zs; c += 1) {
        if (floor_mod2(c) != 0) continue;
        SupportBuilder sb;
        bool clear = true;
        for (int r = layout.r_lo(); r <= layout.r_hi(); ++r) {
          if (!clear_of_holes({r, c})) clear = false;
          if (floor_mod2(r) == 1) sb.toggle({r, c});
        }
        if (clear) zs = sb.to_pauli(layout, 'Z');
      }
      for (int r = layout.r_hi(); r >= layout.r_lo() && !xs; r -= 1) {
        if (floor_mod2(r) != 1) continue;
        SupportBuilder sb;
        bool clear = true;
        for (int c = layout.c_lo(); c <= layout.c_hi(); ++c) {
          if (!clear_of_holes({r, c})) clear = false;
          if (floor_mod2(c) == 0) sb.toggle({r, c});
        }
        if (clear) xs = sb.to_pauli(layout, 'X');
      }
    } else {
      for (int r = layout.r_lo(); r <= layout.r_hi() && !zs; r += 1) {
        if (floor_mod2(r) != 0) continue;
        SupportBuilder sb;
        bool clear = true;
        for (int c = layout.c_lo(); c <= layout.c_hi(); ++c) {
          if (!clear_of_holes({r, c})) clear = false;
          if (floor_mod2(c) == 1) sb.toggle({r, c});
        }
        if (clear) zs = sb.to_pauli(layout, 'Z');
      }
      for (int c = layout.c_hi(); c >= layout.c_lo() && !xs; c -= 1) {
        if (floor_mod2(c) != 1) continue;
        SupportBuilder sb;
        bool clear = true;
        for (int r = layout.r_lo(); r <= layout.r_hi(); ++r) {
          if (!clear_of_holes({r, c})) clear = false;
          if (floor_mod2(r) == 0) sb.toggle({r, c});
        }
        if (clear) xs = sb.to_pauli(layout, 'X');
      }
    }
    if (zs && xs) {
      // X-bar is the string between the rough sides (e transfer), matching
      // the hole encoding convention.
      seeds.push_back(Seed{"boundary", *zs, *xs});
    }
  }

  // Hole qubits, in spec order.
  std::optional<std::size_t> prev_rough, prev_smooth;
  for (std::size_t i = 0; i < spec.holes.size(); ++i) {
    const HoleSpec& hole = spec.holes[i];
    const CoordBox box = boxes[i];
    std::string name = "hole" + std::to_string(i);
    if (hole.type == Boundary::rough) {
      // Loop: product of the removed stars.
      SupportBuilder loop;
      for (Coord site : layout.star_sites_in_box(box)) {
        for (Coord p : incident_points(site)) {
          if (layout.is_qubit_point(p)) loop.toggle(p);
        }
      }
      auto z_bar = loop.to_pauli(layout, 'X');
      // String: to a rough outer side if one exists, else to the previous
      // rough hole.
      SupportBuilder string;
      if (spec.top == Boundary::rough) {
        for (int r = layout.r_lo(); r < box.r0; ++r) {
          if (floor_mod2(r) == 1) string.toggle({r, box.c0});
        }
      } else if (spec.bottom == Boundary::rough) {
        for (int r = box.r1 + 1; r <= layout.r_hi(); ++r) {
          if (floor_mod2(r) == 1) string.toggle({r, box.c0});
        }
      } else if (spec.left == Boundary::rough) {
        for (int c = layout.c_lo(); c < box.c0; ++c) {
          if (floor_mod2(c) == 1) string.toggle({box.r0, c});
        }
      } else if (spec.right == Boundary::rough) {
        for (int c = box.c1 + 1; c <= layout.c_hi(); ++c) {
          if (floor_mod2(c) == 1) string.toggle({box.r0, c});
        }
      } else if (prev_rough) {
        primal_path_between(string, box, boxes[*prev_rough]);
      }
      auto x_bar = string.to_pauli(layout, 'Z');
      if (x_bar && z_bar) {
        seeds.push_back(Seed{name, *x_bar, *z_bar});
      }
      prev_rough = i;
    } else {
      SupportBuilder loop;
      for (Coord site : layout.face_sites_in_box(box)) {
        for (Coord p : incident_points(site)) {
          if (layout.is_qubit_point(p)) loop.toggle(p);
        }
      }
      auto x_bar = loop.to_pauli(layout, 'Z');
      SupportBuilder string;
      if (spec.right == Boundary::smooth) {
        for (int c = box.c1 + 1; c <= layout.c_hi(); ++c) {
          if (floor_mod2(box.r0 + c) == 1) string.toggle({box.r0, c});
        }
      } else if (spec.left == Boundary::smooth) {
        for (int c = layout.c_lo(); c < box.c0; ++c) {
          if (floor_mod2(box.r0 + c) == 1) string.toggle({box.r0, c});
        }
      } else if (spec.bottom == Boundary::smooth) {
        for (int r = box.r1 + 1; r <= layout.r_hi(); ++r) {
          if (floor_mod2(r + box.c0) == 1) string.toggle({r, box.c0});
        }
      } else if (spec.top == Boundary::smooth) {
        for (int r = layout.r_lo(); r < box.r0; ++r) {
          if (floor_mod2(r + box.c0) == 1) string.toggle({r, box.c0});
        }
      } else if (prev_smooth) {
        dual_path_between(string, box, boxes[*prev_smooth]);
      }
      auto z_bar = string.to_pauli(layout, 'X');
      if (x_bar && z_bar) {
        seeds.push_back(Seed{name, *x_bar, *z_bar});
      }
      prev_smooth = i;
    }
  }
  return seeds;
}

std::vector<PauliOperator> build_generators(const PlanarLayout& layout) {
  const LatticeSpec& spec = layout.spec();
  std::vector<CoordBox> boxes;
  for (const auto& h : spec.holes) boxes.push_back(hole_box(h));
  auto in_hole = [&](Coord site) {
    for (const auto& box : boxes) {
      if (box.contains(site)) return true;
    }
    return false;
  };

  std::vector<PauliOperator> gens;
  for (int r = layout.r_lo(); r <= layout.r_hi(); ++r) {
    for (int c = layout.c_lo(); c <= layout.c_hi(); ++c) {
      Coord site{r, c};
      if (!is_vertex(site) && !is_face(site)) continue;
      if (in_hole(site)) continue;
      auto op = layout.truncated_site_op(site);
      if (op) gens.push_back(std::move(*op));
    }
  }
  if (layout.stabilise_holes()) {
    for (std::size_t i = 0; i < spec.holes.size(); ++i) {
      char basis = spec.holes[i].type == Boundary::rough ? 'Z' : 'X';
      for (Coord p : layout.qubit_points_in_box(boxes[i])) {
        gens.push_back(
            PauliOperator::single(layout.num_qubits(), layout.qubit_index(p), basis));
      }
    }
  }
  return gens;
}

}  // namespace

PlanarCode build_planar_code(const LatticeSpec& spec, bool stabilise_holes) {
  PlanarCode out;
  out.layout = PlanarLayout::build(spec, stabilise_holes);
  out.code.n = out.layout.num_qubits();
  out.code.generators = build_generators(out.layout);

  auto seeds = geometric_seeds(out.layout);
  std::vector<PauliOperator> seed_ops;
  for (const auto& s : seeds) {
    seed_ops.push_back(s.x_bar);
    seed_ops.push_back(s.z_bar);
  }
  out.code.logical_pairs = extract_logicals(out.code, seed_ops);
  for (const auto& pair : out.code.logical_pairs) {
    std::string name = "q" + std::to_string(out.logical_names.size());
    for (const auto& s : seeds) {
      if (pair.first.same_letters(s.x_bar) && pair.second.same_letters(s.z_bar)) {
        name = s.name;
        break;
      }
    }
    out.logical_names.push_back(name);
  }
  return out;
}

LatticeReport validate(const StabiliserCode& code) {
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    const auto& g = code.generators[i];
    if (g.num_qubits() != code.n) {
      return {false, "generator " + std::to_string(i) + " has wrong qubit count", {}};
    }
    if (g.is_identity_up_to_phase()) {
      return {false, "generator " + std::to_string(i) + " is the identity", {}};
    }
    if (g.phase() != 0) {
      return {false,
              "contains -I: generator " + std::to_string(i) +
                  " carries a nonzero phase",
              {}};
    }
  }
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < code.generators.size(); ++j) {
      if (!commutes(code.generators[i], code.generators[j])) {
        return {false,
                "generators " + std::to_string(i) + " and " + std::to_string(j) +
                    " anticommute",
                std::make_pair(i, j)};
      }
    }
  }
  // Dependent products must multiply to exactly +I.
  Gf2Echelon ech(2 * code.n);
  for (std::size_t i = 0; i < code.generators.size(); ++i) {
    if (!ech.add_row(symplectic_row(code.generators[i]))) {
      auto combo = ech.decompose(symplectic_row(code.generators[i]));
      PauliOperator prod = PauliOperator::identity(code.n);
      for (std::size_t j : *combo) prod = multiply(prod, code.generators[j]);
      if (prod != code.generators[i]) {
        return {false,
                "contains -I: dependent generator " + std::to_string(i) +
                    " multiplies to a signed identity",
                {}};
      }
    }
  }
  std::size_t rank = ech.rank();
  if (code.n < rank) {
    return {false, "generator rank exceeds qubit count", {}};
  }
  if (code.logical_pairs.size() != code.n - rank) {
    return {false,
            "logical pair count " + std::to_string(code.logical_pairs.size()) +
                " does not equal n - rank = " + std::to_string(code.n - rank),
            {}};
  }
  for (std::size_t i = 0; i < code.logical_pairs.size(); ++i) {
    const auto& [xb, zb] = code.logical_pairs[i];
    for (std::size_t g = 0; g < code.generators.size(); ++g) {
      if (!commutes(xb, code.generators[g]) || !commutes(zb, code.generators[g])) {
        return {false,
                "logical pair " + std::to_string(i) +
                    " does not commute with generator " + std::to_string(g),
                std::make_pair(i, g)};
      }
    }
    if (commutes(xb, zb)) {
      return {false, "logical pair " + std::to_string(i) + " fails to anticommute", {}};
    }
    for (std::size_t j = i + 1; j < code.logical_pairs.size(); ++j) {
      const auto& [xj, zj] = code.logical_pairs[j];
      if (!commutes(xb, xj) || !commutes(xb, zj) || !commutes(zb, xj) ||
          !commutes(zb, zj)) {
        return {false,
                "logical pairs " + std::to_string(i) + " and " + std::to_string(j) +
                    " are not symplectically disjoint",
                std::make_pair(i, j)};
      }
    }
  }
  return {};
}

std::vector<std::pair<PauliOperator, PauliOperator>> extract_logicals(
    const StabiliserCode& code, std::vector<PauliOperator> seeds) {
  Gf2Echelon combined(2 * code.n);
  for (const auto& g : code.generators) {
    combined.add_row(symplectic_row(g));
  }
  std::size_t rank = combined.rank();
  std::size_t expected = 2 * (code.n - rank);

  std::vector<PauliOperator> pool;
  for (const auto& seed : seeds) {
    bool central = true;
    for (const auto& g : code.generators) {
      if (!commutes(seed, g)) {
        central = false;
        break;
      }
    }
    if (!central) continue;
    if (combined.add_row(symplectic_row(seed))) {
      pool.push_back(seed);
    }
  }
  for (const auto& c : centraliser_basis(code.n, code.generators)) {
    auto row = symplectic_row(c);
    auto reduced = row;
    combined.reduce(reduced);
    bool nonzero = false;
    for (auto w : reduced) nonzero |= w != 0;
    if (!nonzero) continue;
    combined.add_row(row);
    PauliOperator p(code.n);
    for (std::size_t q = 0; q < code.n; ++q) {
      if ((reduced[q / 64] >> (q % 64)) & 1u) p.set_x(q, true);
      std::size_t zq = code.n + q;
      if ((reduced[zq / 64] >> (zq % 64)) & 1u) p.set_z(q, true);
    }
    pool.push_back(std::move(p));
  }
  if (pool.size() != expected) {
    throw std::runtime_error("extract_logicals: inconsistent code (pool size " +
                             std::to_string(pool.size()) + ", expected " +
                             std::to_string(expected) + ")");
  }
  return symplectic_pairs(std::move(pool));
}

DistanceResult distance_bruteforce(const StabiliserCode& code,
                                   std::size_t max_weight,
                                   std::uint64_t work_budget) {
  DistanceResult result;
  std::size_t n = code.n;
  PauliSpan span(n, code.generators);

  bool css = true;
  for (const auto& g : code.generators) {
    bool has_x = false, has_z = false;
    for (std::size_t q = 0; q < n; ++q) {
      has_x |= g.x_bit(q);
      has_z |= g.z_bit(q);
    }
    if (has_x && has_z) {
      css = false;
      break;
    }
  }

  auto binom = [](std::size_t nn, std::size_t kk) -> double {
    double v = 1;
    for (std::size_t i = 0; i < kk; ++i) v = v * double(nn - i) / double(i + 1);
    return v;
  };

  auto is_logical = [&](const PauliOperator& cand) {
    for (const auto& g : code.generators) {
      if (!commutes(cand, g)) return false;
    }
    return !span.contains(cand);
  };

  std::vector<std::size_t> idx;
  for (std::size_t t = 1; t <= max_weight; ++t) {
    double work = binom(n, t) * double(code.generators.size());
    if (!css) work *= double(1u << (2 * std::min<std::size_t>(t, 15)));
    if (work > double(work_budget)) {
      result.searched_weight = t - 1;
      return result;
    }
    // Enumerate position subsets of size t in lexicographic order.
    idx.assign(t, 0);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    bool done = t > n;
    while (!done) {
      if (css) {
        for (char basis : {'X', 'Z'}) {
          PauliOperator cand(n);
          for (std::size_t i : idx) {
            if (basis == 'X') {
              cand.set_x(i, true);
            } else {
              cand.set_z(i, true);
            }
          }
          if (is_logical(cand)) {
            result.found = true;
            result.distance = t;
            result.searched_weight = t;
            return result;
          }
        }
      } else {
        // All 3^t letter assignments.
        std::vector<int> letters(t, 0);
        while (true) {
          PauliOperator cand(n);
          for (std::size_t i = 0; i < t; ++i) {
            if (letters[i] == 0 || letters[i] == 2) cand.set_x(idx[i], true);
            if (letters[i] == 1 || letters[i] == 2) cand.set_z(idx[i], true);
          }
          if (is_logical(cand)) {
            result.found = true;
            result.distance = t;
            result.searched_weight = t;
            return result;
          }
          std::size_t pos = 0;
          while (pos < t && letters[pos] == 2) {
            letters[pos] = 0;
            ++pos;
          }
          if (pos == t) break;
          ++letters[pos];
        }
      }
      // Next combination.
      bool advanced = false;
      std::size_t i = t;
      while (i-- > 0) {
        if (idx[i] != i + n - t) {
          ++idx[i];
          for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) done = true;
    }
    result.searched_weight = t;
  }
  return result;
}

PlanarCode hole_punch(const PlanarCode& code, const HoleSpec& hole) {
  LatticeSpec spec = code.layout.spec();
  spec.holes.push_back(hole);
  return build_planar_code(spec, code.layout.stabilise_holes());
}

std::string export_generators(const StabiliserCode& code) {
  std::string out;
  for (const auto& g : code.generators) {
    out += g.str();
    out.push_back('\n');
  }
  return out;
}

std::string sketch(const PlanarLayout& layout) {
  std::string out;
  std::vector<CoordBox> boxes;
  for (const auto& h : layout.spec().holes) boxes.push_back(hole_box(h));
  auto in_hole = [&](Coord p) {
    for (const auto& box : boxes) {
      if (box.contains(p)) return true;
    }
    return false;
  };
  for (int r = layout.r_lo(); r <= layout.r_hi(); ++r) {
    for (int c = layout.c_lo(); c <= layout.c_hi(); ++c) {
      Coord p{r, c};
      if (in_hole(p)) {
        out.push_back('o');
      } else if (is_vertex(p)) {
        out.push_back('+');
      } else if (is_face(p)) {
        out.push_back('*');
      } else if (floor_mod2(p.r) == 0) {
        out.push_back('-');
      } else {
        out.push_back('|');
      }
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace dk
