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

#ifndef DEFECTKIT_SCHEME_HPP
#define DEFECTKIT_SCHEME_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "defectkit/anyon.hpp"
#include "defectkit/tableau.hpp"

namespace dk {

enum class DefectKind { twist, hole, threaded_puncture };

struct Defect {
  std::string id;
  DefectKind kind = DefectKind::twist;
  int dim = 0;
  std::vector<ExcMask> condensable;       // subgroup of condensing excitations
  std::optional<std::string> wall_id;     // twists only
  std::string geometry_tag;               // e.g. "point", "S^1 x S^1"
};

/// Homotopy class of an excitation worldline relative to the defect setup.
struct TopoClass {
  enum class Kind { connects, encloses, encloses_pair, absorbs };
  Kind kind = Kind::connects;
  std::string a;
  std::string b;  // connects / encloses_pair only

  static TopoClass connects(std::string i, std::string j) {
    return {Kind::connects, std::move(i), std::move(j)};
  }
  static TopoClass encloses(std::string i) { return {Kind::encloses, std::move(i), {}}; }
  static TopoClass encloses_pair(std::string i, std::string j) {
    return {Kind::encloses_pair, std::move(i), std::move(j)};
  }
  static TopoClass absorbs(std::string i) { return {Kind::absorbs, std::move(i), {}}; }

  bool references(const std::string& id) const { return a == id || b == id; }
};

/// A logical operator described as an excitation moved along a class of
/// paths, with its declared domain-wall crossings.
struct PathDescriptor {
  Excitation excitation;
  TopoClass where;
  std::map<std::string, int> wall_crossings;

  bool references(const std::string& id) const { return where.references(id); }
};

struct QubitDescriptor {
  std::string name;
  PathDescriptor x;
  PathDescriptor z;
};

struct Relation {
  enum class Kind { concentric, threaded_through };
  Kind kind = Kind::concentric;
  std::string a;
  std::string b;
};

struct DefectSetup {
  ModelPtr model;
  std::map<std::string, DomainWall> walls;
  std::vector<Defect> defects;
  std::vector<Relation> relations;
  std::vector<QubitDescriptor> qubits;

  const Defect& defect(const std::string& id) const;
};

/// Image of one basis descriptor under a braid move: i^phase times a product
/// of basis descriptors, referenced by label ("X:<qubit>" or "Z:<qubit>").
struct FormalWord {
  unsigned phase = 0;
  std::vector<std::string> factors;
};

struct BraidMove {
  enum class Kind { exchange, monodromy };
  std::string name;
  Kind kind = Kind::exchange;
  std::string d1;
  std::string d2;
  std::map<std::string, FormalWord> transform;  // missing label = fixed
};

struct SetupReport {
  bool ok = true;
  std::string message;
};

SetupReport validate_setup(const DefectSetup& setup);

/// Commutation of two path descriptors: they anticommute iff the excitations
/// braid to -1 and the topological intersection parity of their classes is
/// odd.
bool descriptor_commutes(const DefectSetup& setup, const PathDescriptor& p,
                         const PathDescriptor& q);

/// The declared encoded-qubit basis, validated to satisfy the standard
/// symplectic pattern; throws naming the offending pair otherwise.
std::vector<QubitDescriptor> qubit_basis(const DefectSetup& setup);

/// Applies the declared transform to every basis descriptor and re-expresses
/// the images in the basis; the result must be symplectically consistent.
CliffordTableau braid_action(const DefectSetup& setup, const BraidMove& move);

struct BraidGroupReport {
  GroupReport group;
  bool all_clifford = true;  // every element symplectically consistent
};

BraidGroupReport generate_braid_group(const DefectSetup& setup,
                                      const std::vector<BraidMove>& moves,
                                      std::size_t bound = 4096);

struct Scheme {
  std::string name;
  DefectSetup setup;
  std::vector<BraidMove> moves;
};

/// Built-in schemes: twist_2d_surface, selfdual_surface_<2k>, levin_wen_3d,
/// universal_3d_punctures.
Scheme builtin_scheme(std::string_view name);
std::vector<std::string> builtin_scheme_names();

/// The four-twist construction for any eligible model/wall pair: two walls
/// ending in concentric twist pairs, threaded when the condensing fermion
/// has positive dimension.  Throws when ineligible.
Scheme general_scheme(ModelPtr model, const DomainWall& wall);

}  // namespace dk

#endif  // DEFECTKIT_SCHEME_HPP
