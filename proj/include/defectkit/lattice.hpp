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

#ifndef DEFECTKIT_LATTICE_HPP
#define DEFECTKIT_LATTICE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defectkit/pauli.hpp"

namespace dk {

// Planar surface code on the edges of a square lattice, in a single integer
// coordinate grid: vertices at (even, even) carry X-type star stabilisers,
// faces at (odd, odd) carry Z-type plaquette stabilisers, and qubits sit at
// the remaining points (r + c odd).  A boundary line on an even row/column
// is smooth (truncated stars, condenses m); on an odd row/column it is rough
// (dangling edges, condenses e).

struct Coord {
  int r = 0;
  int c = 0;
  auto operator<=>(const Coord&) const = default;
};

enum class Boundary { rough, smooth };

/// A rectangular hole.  Rough holes are given in vertex units (stars
/// removed), smooth holes in plaquette units (faces removed); `rows` and
/// `cols` count removed stabiliser sites.
struct HoleSpec {
  Boundary type = Boundary::rough;
  int r0 = 0;
  int c0 = 0;
  int rows = 1;
  int cols = 1;
};

struct LatticeSpec {
  int width = 2;   // interior plaquette columns
  int height = 1;  // interior plaquette rows
  Boundary top = Boundary::rough;
  Boundary bottom = Boundary::rough;
  Boundary left = Boundary::smooth;
  Boundary right = Boundary::smooth;
  std::vector<HoleSpec> holes;
};

/// Closed coordinate box (all four corner parities equal).
struct CoordBox {
  int r0 = 0, c0 = 0, r1 = 0, c1 = 0;
  bool contains(Coord p) const {
    return p.r >= r0 && p.r <= r1 && p.c >= c0 && p.c <= c1;
  }
};

CoordBox hole_box(const HoleSpec& hole);

struct StabiliserCode {
  std::size_t n = 0;
  std::vector<PauliOperator> generators;
  std::vector<std::pair<PauliOperator, PauliOperator>> logical_pairs;

  std::size_t k() const { return logical_pairs.size(); }
};

/// Geometry bookkeeping for a built planar code.  In `stabilise_holes`
/// style every grid qubit exists and hole interiors carry single-qubit
/// stabilisers; in the default trimmed style hole-interior qubits are
/// removed from the code outright.
class PlanarLayout {
 public:
  static PlanarLayout build(const LatticeSpec& spec, bool stabilise_holes);

  const LatticeSpec& spec() const { return spec_; }
  bool stabilise_holes() const { return stabilise_holes_; }
  int r_lo() const { return r_lo_; }
  int r_hi() const { return r_hi_; }
  int c_lo() const { return c_lo_; }
  int c_hi() const { return c_hi_; }

  bool in_outer_box(Coord p) const;
  bool is_qubit_point(Coord p) const;     // grid parity + inside, ignores holes
  bool qubit_exists(Coord p) const;       // present in this code's qubit set
  std::size_t num_qubits() const { return points_.size(); }
  std::size_t qubit_index(Coord p) const;
  Coord qubit_point(std::size_t idx) const { return points_[idx]; }

  /// Star / face operator of the pristine (hole-free) lattice at a site,
  /// over this layout's qubit indexing.  Throws if a support qubit is
  /// missing from the qubit set.
  PauliOperator pristine_site_op(Coord site) const;

  /// Stabiliser op truncated to existing qubits (empty support -> nullopt).
  std::optional<PauliOperator> truncated_site_op(Coord site) const;

  std::vector<Coord> star_sites_in_box(const CoordBox& box) const;
  std::vector<Coord> face_sites_in_box(const CoordBox& box) const;
  std::vector<Coord> qubit_points_in_box(const CoordBox& box) const;

 private:
  LatticeSpec spec_;
  bool stabilise_holes_ = false;
  int r_lo_ = 0, r_hi_ = 0, c_lo_ = 0, c_hi_ = 0;
  std::vector<Coord> points_;
  std::map<Coord, std::size_t> index_;
};

struct PlanarCode {
  StabiliserCode code;
  PlanarLayout layout;
  /// Indices into code.logical_pairs, in spec order: the boundary qubit (if
  /// any) first, then one entry per charge-carrying hole.
  std::vector<std::string> logical_names;
};

struct LatticeReport {
  bool ok = true;
  std::string message;
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
};

LatticeReport validate_spec(const LatticeSpec& spec);

/// Builds the planar code: stabiliser generators, then logical pairs via
/// extract_logicals seeded with the geometric string/loop candidates.
PlanarCode build_planar_code(const LatticeSpec& spec,
                             bool stabilise_holes = false);

/// Checks the stabiliser-code invariants; reports the first violation.
LatticeReport validate(const StabiliserCode& code);

/// Symplectic Gram-Schmidt over the centraliser modulo the stabiliser
/// group; deterministic given generator order.  Seeds, when given, are
/// validated and consumed first (ordered X1, Z1, X2, Z2, ...).
std::vector<std::pair<PauliOperator, PauliOperator>> extract_logicals(
    const StabiliserCode& code, std::vector<PauliOperator> seeds = {});

struct DistanceResult {
  bool found = false;
  std::size_t distance = 0;        // valid when found
  std::size_t searched_weight = 0; // highest fully searched weight
};

/// Exact minimum weight of a centraliser element outside the stabiliser
/// group, by weight-stratified exhaustive search up to max_weight.  The
/// work estimate is capped; exceeding the budget reports not-found.
DistanceResult distance_bruteforce(const StabiliserCode& code,
                                   std::size_t max_weight,
                                   std::uint64_t work_budget = 400'000'000);

/// Returns a new planar code with one more hole.
PlanarCode hole_punch(const PlanarCode& code, const HoleSpec& hole);

/// One generator per line, as a Pauli string.
std::string export_generators(const StabiliserCode& code);

/// Fixed-format text sketch of the lattice (human-facing).
std::string sketch(const PlanarLayout& layout);

}  // namespace dk

#endif  // DEFECTKIT_LATTICE_HPP
