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

#include "defectkit/scheme.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dk {

namespace {

int parity_atomic(const TopoClass& p, const TopoClass& q) {
  using Kind = TopoClass::Kind;
  // Intersection parity table for the path classes the figures use: a path
  // terminating on a defect crosses a loop around that defect once; loops
  // never cross loops, open paths never cross open paths.
  auto endpoint_count = [](const TopoClass& path, const std::string& defect) {
    int count = 0;
    if (path.kind == Kind::connects) {
      count += path.a == defect;
      count += path.b == defect;
    } else if (path.kind == Kind::absorbs) {
      count += path.a == defect;
    }
    return count;
  };
  if (q.kind == Kind::encloses) {
    return endpoint_count(p, q.a);
  }
  if (p.kind == Kind::encloses) {
    return endpoint_count(q, p.a);
  }
  return 0;
}

int parity(const TopoClass& p, const TopoClass& q) {
  using Kind = TopoClass::Kind;
  auto split = [](const TopoClass& t) {
    std::vector<TopoClass> atoms;
    if (t.kind == Kind::encloses_pair) {
      atoms.push_back(TopoClass::encloses(t.a));
      atoms.push_back(TopoClass::encloses(t.b));
    } else {
      atoms.push_back(t);
    }
    return atoms;
  };
  int total = 0;
  for (const auto& pa : split(p)) {
    for (const auto& qa : split(q)) {
      total += parity_atomic(pa, qa);
    }
  }
  return total & 1;
}

bool defect_condenses(const Defect& d, ExcMask exc) {
  if (exc == 0) return true;
  return std::find(d.condensable.begin(), d.condensable.end(), exc) !=
         d.condensable.end();
}

Excitation cross_walls(const DefectSetup& setup, const PathDescriptor& p) {
  Excitation current = p.excitation;
  for (const auto& [wall_id, count] : p.wall_crossings) {
    auto it = setup.walls.find(wall_id);
    if (it == setup.walls.end()) {
      throw std::invalid_argument("descriptor crosses unknown wall '" + wall_id + "'");
    }
    for (int i = 0; i < count; ++i) current = wall_apply(it->second, current);
  }
  return current;
}

std::string describe(const DefectSetup& setup, const PathDescriptor& p) {
  std::string out = setup.model->describe_mask(p.excitation.bits);
  using Kind = TopoClass::Kind;
  switch (p.where.kind) {
    case Kind::connects:
      out += " connects(" + p.where.a + "," + p.where.b + ")";
      break;
    case Kind::encloses:
      out += " encloses(" + p.where.a + ")";
      break;
    case Kind::encloses_pair:
      out += " encloses_pair(" + p.where.a + "," + p.where.b + ")";
      break;
    case Kind::absorbs:
      out += " absorbs(" + p.where.a + ")";
      break;
  }
  return out;
}

}  // namespace

const Defect& DefectSetup::defect(const std::string& id) const {
  for (const auto& d : defects) {
    if (d.id == id) return d;
  }
  throw std::invalid_argument("no defect named '" + id + "'");
}

SetupReport validate_setup(const DefectSetup& setup) {
  if (!setup.model) return {false, "setup has no excitation model"};
  std::set<std::string> ids;
  for (const auto& d : setup.defects) {
    if (!ids.insert(d.id).second) {
      return {false, "duplicate defect id '" + d.id + "'"};
    }
  }
  for (const auto& d : setup.defects) {
    // Condensable sets are subgroups containing the vacuum.
    for (ExcMask a : d.condensable) {
      for (ExcMask b : d.condensable) {
        if (!defect_condenses(d, a ^ b)) {
          return {false, "condensable set of '" + d.id + "' is not a subgroup"};
        }
      }
    }
    if (d.kind == DefectKind::twist) {
      if (!d.wall_id) {
        return {false, "twist '" + d.id + "' has no wall"};
      }
      auto it = setup.walls.find(*d.wall_id);
      if (it == setup.walls.end()) {
        return {false, "twist '" + d.id + "' references unknown wall '" + *d.wall_id + "'"};
      }
      std::set<ExcMask> expected;
      for (const auto& e : condensable_at_twist(it->second)) expected.insert(e.bits);
      std::set<ExcMask> declared(d.condensable.begin(), d.condensable.end());
      declared.insert(0);
      if (declared != expected) {
        return {false,
                "twist '" + d.id + "' condensable set does not match its wall"};
      }
    }
  }
  for (const auto& rel : setup.relations) {
    if (!ids.count(rel.a) || !ids.count(rel.b)) {
      return {false, "relation references unknown defect"};
    }
  }
  // threaded_through must be acyclic.
  std::map<std::string, std::vector<std::string>> threaded;
  for (const auto& rel : setup.relations) {
    if (rel.kind == Relation::Kind::threaded_through) {
      threaded[rel.a].push_back(rel.b);
    }
  }
  std::set<std::string> visiting, done;
  std::function<bool(const std::string&)> has_cycle = [&](const std::string& v) {
    if (done.count(v)) return false;
    if (!visiting.insert(v).second) return true;
    for (const auto& next : threaded[v]) {
      if (has_cycle(next)) return true;
    }
    visiting.erase(v);
    done.insert(v);
    return false;
  };
  for (const auto& [v, _] : threaded) {
    if (has_cycle(v)) return {false, "threaded-puncture relations form a cycle"};
  }

  for (const auto& q : setup.qubits) {
    for (const PathDescriptor* p : {&q.x, &q.z}) {
      if (p->excitation.model != setup.model) {
        return {false, "descriptor of '" + q.name + "' uses a foreign model"};
      }
      using Kind = TopoClass::Kind;
      Excitation out = cross_walls(setup, *p);
      if (p->where.kind == Kind::connects) {
        if (!defect_condenses(setup.defect(p->where.a), p->excitation.bits)) {
          return {false, "excitation of '" + q.name +
                             "' cannot condense at '" + p->where.a + "'"};
        }
        if (!defect_condenses(setup.defect(p->where.b), out.bits)) {
          return {false, "excitation of '" + q.name +
                             "' cannot condense at '" + p->where.b + "'"};
        }
      } else if (p->where.kind == Kind::absorbs) {
        if (!defect_condenses(setup.defect(p->where.a), p->excitation.bits)) {
          return {false, "excitation of '" + q.name +
                             "' cannot condense at '" + p->where.a + "'"};
        }
      } else {
        setup.defect(p->where.a);
        if (p->where.kind == Kind::encloses_pair) setup.defect(p->where.b);
        // A closed loop must return to the same excitation type.
        if (out.bits != p->excitation.bits) {
          return {false, "loop descriptor of '" + q.name +
                             "' changes excitation type over its crossings"};
        }
      }
    }
  }
  return {};
}

bool descriptor_commutes(const DefectSetup& setup, const PathDescriptor& p,
                         const PathDescriptor& q) {
  if (p.excitation.model != setup.model || q.excitation.model != setup.model) {
    throw std::invalid_argument("descriptors from different setups");
  }
  bool braid_minus = braid_phase(p.excitation, q.excitation) == -1;
  return !(braid_minus && parity(p.where, q.where) == 1);
}

std::vector<QubitDescriptor> qubit_basis(const DefectSetup& setup) {
  auto report = validate_setup(setup);
  if (!report.ok) {
    throw std::invalid_argument("invalid setup: " + report.message);
  }
  const auto& qs = setup.qubits;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (descriptor_commutes(setup, qs[i].x, qs[i].z)) {
      throw std::invalid_argument("descriptors of qubit '" + qs[i].name +
                                  "' fail to anticommute: " +
                                  describe(setup, qs[i].x) + " vs " +
                                  describe(setup, qs[i].z));
    }
    for (std::size_t j = i + 1; j < qs.size(); ++j) {
      for (const PathDescriptor* a : {&qs[i].x, &qs[i].z}) {
        for (const PathDescriptor* b : {&qs[j].x, &qs[j].z}) {
          if (!descriptor_commutes(setup, *a, *b)) {
            throw std::invalid_argument(
                "descriptors of qubits '" + qs[i].name + "' and '" + qs[j].name +
                "' anticommute: " + describe(setup, *a) + " vs " +
                describe(setup, *b));
          }
        }
      }
    }
  }
  return qs;
}

CliffordTableau braid_action(const DefectSetup& setup, const BraidMove& move) {
  auto basis = qubit_basis(setup);
  std::size_t k = basis.size();

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < k; ++i) index[basis[i].name] = i;

  auto build_image = [&](const std::string& label,
                         const PathDescriptor& descriptor,
                         const PauliOperator& fallback) {
    auto it = move.transform.find(label);
    if (it == move.transform.end()) {
      // Fixed descriptors must not reference the moved defects unless they
      // are explicitly declared invariant; identity is always admissible.
      (void)descriptor;
      return fallback;
    }
    PauliOperator image = PauliOperator::identity(k);
    image.set_phase(it->second.phase);
    for (const auto& factor : it->second.factors) {
      auto sep = factor.find(':');
      if (sep == std::string::npos) {
        throw std::invalid_argument("move '" + move.name + "': bad factor '" +
                                    factor + "'");
      }
      std::string axis = factor.substr(0, sep);
      std::string qubit = factor.substr(sep + 1);
      auto qi = index.find(qubit);
      if (qi == index.end() || (axis != "X" && axis != "Z")) {
        throw std::invalid_argument("move '" + move.name +
                                    "': transform output not expressible in the "
                                    "declared basis (factor '" + factor + "')");
      }
      image = multiply(image, PauliOperator::single(k, qi->second, axis == "X" ? 'X' : 'Z'));
    }
    return image;
  };

  // Descriptors that do not reference the moved defects must stay fixed.
  for (std::size_t i = 0; i < k; ++i) {
    for (auto [axis, d] : {std::pair{std::string("X"), &basis[i].x},
                           std::pair{std::string("Z"), &basis[i].z}}) {
      std::string label = axis + ":" + basis[i].name;
      bool refs = d->references(move.d1) || d->references(move.d2);
      auto it = move.transform.find(label);
      if (!refs && it != move.transform.end()) {
        bool identity = it->second.phase == 0 && it->second.factors.size() == 1 &&
                        it->second.factors[0] == label;
        if (!identity) {
          throw std::invalid_argument("move '" + move.name + "' transforms '" +
                                      label +
                                      "', which does not reference the moved "
                                      "defects");
        }
      }
    }
  }

  std::vector<PauliOperator> x_images, z_images;
  for (std::size_t i = 0; i < k; ++i) {
    x_images.push_back(build_image("X:" + basis[i].name, basis[i].x,
                                   PauliOperator::single(k, i, 'X')));
    z_images.push_back(build_image("Z:" + basis[i].name, basis[i].z,
                                   PauliOperator::single(k, i, 'Z')));
  }
  try {
    return CliffordTableau::from_images(std::move(x_images), std::move(z_images));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument("move '" + move.name +
                                "' does not preserve the commutation matrix: " +
                                e.what());
  }
}

BraidGroupReport generate_braid_group(const DefectSetup& setup,
                                      const std::vector<BraidMove>& moves,
                                      std::size_t bound) {
  BraidGroupReport report;
  std::size_t k = qubit_basis(setup).size();
  std::vector<CliffordTableau> gens;
  for (const auto& mv : moves) gens.push_back(braid_action(setup, mv));
  if (gens.empty()) gens.push_back(CliffordTableau::identity(k));
  report.group = generate_group(gens, bound);
  for (const auto& el : report.group.elements) {
    report.all_clifford &= el.is_symplectic();
  }
  return report;
}

namespace {

// Shared four-twist construction: two domain walls terminated by twist
// pairs, X-bar propagating the condensing fermion between the walls, Z-bar
// the partner excitation enclosing the left wall.
Scheme four_twist_scheme(std::string name, ModelPtr model, const DomainWall& wall,
                         ExcMask fermion, ExcMask partner, int twist_dim,
                         bool threaded, const std::string& left_outer,
                         const std::string& left_inner,
                         const std::string& right_outer,
                         const std::string& right_inner,
                         const std::string& s_move_name,
                         const std::string& h_move_name) {
  Scheme scheme;
  scheme.name = std::move(name);
  scheme.setup.model = model;
  scheme.setup.walls.emplace("wall_left", wall);
  scheme.setup.walls.emplace("wall_right", wall);

  std::string tag = twist_dim == 0
                        ? "point"
                        : "S^" + std::to_string(twist_dim / 2) + " x S^" +
                              std::to_string(twist_dim / 2);
  std::vector<ExcMask> condensable;
  for (const auto& e : condensable_at_twist(wall)) condensable.push_back(e.bits);

  for (const auto& [id, wall_id] :
       std::vector<std::pair<std::string, std::string>>{{left_outer, "wall_left"},
                                                        {left_inner, "wall_left"},
                                                        {right_outer, "wall_right"},
                                                        {right_inner, "wall_right"}}) {
    scheme.setup.defects.push_back(
        Defect{id, DefectKind::twist, twist_dim, condensable, wall_id, tag});
  }
  if (twist_dim > 0) {
    scheme.setup.relations.push_back(
        Relation{Relation::Kind::concentric, left_inner, left_outer});
    scheme.setup.relations.push_back(
        Relation{Relation::Kind::concentric, right_inner, right_outer});
  }
  if (threaded) {
    scheme.setup.defects.push_back(Defect{
        "thread", DefectKind::threaded_puncture, twist_dim, {}, std::nullopt,
        "threaded through both wall holes"});
    for (const auto& id : {left_outer, left_inner, right_outer, right_inner}) {
      scheme.setup.relations.push_back(
          Relation{Relation::Kind::threaded_through, "thread", id});
    }
  }

  QubitDescriptor q;
  q.name = "q0";
  q.x = PathDescriptor{Excitation{model, fermion},
                       TopoClass::connects(left_outer, right_outer),
                       {}};
  q.z = PathDescriptor{Excitation{model, partner},
                       TopoClass::encloses_pair(left_outer, left_inner),
                       {}};
  scheme.setup.qubits.push_back(q);

  BraidMove s_move;
  s_move.name = s_move_name;
  s_move.kind = BraidMove::Kind::exchange;
  s_move.d1 = left_outer;
  s_move.d2 = left_inner;
  s_move.transform["X:q0"] = FormalWord{1, {"X:q0", "Z:q0"}};  // X -> Y
  scheme.moves.push_back(s_move);

  BraidMove h_move;
  h_move.name = h_move_name;
  h_move.kind = BraidMove::Kind::exchange;
  h_move.d1 = left_inner;
  h_move.d2 = right_outer;
  h_move.transform["X:q0"] = FormalWord{0, {"Z:q0"}};
  h_move.transform["Z:q0"] = FormalWord{0, {"X:q0"}};
  scheme.moves.push_back(h_move);

  // Full monodromies are the squares of the exchanges.
  BraidMove s_mono;
  s_mono.name = s_move_name + "_monodromy";
  s_mono.kind = BraidMove::Kind::monodromy;
  s_mono.d1 = s_move.d1;
  s_mono.d2 = s_move.d2;
  s_mono.transform["X:q0"] = FormalWord{2, {"X:q0"}};  // X -> -X
  scheme.moves.push_back(s_mono);

  BraidMove h_mono;
  h_mono.name = h_move_name + "_monodromy";
  h_mono.kind = BraidMove::Kind::monodromy;
  h_mono.d1 = h_move.d1;
  h_mono.d2 = h_move.d2;
  scheme.moves.push_back(h_mono);  // identity transform

  return scheme;
}

Scheme universal_punctures_scheme() {
  Scheme scheme;
  scheme.name = "universal_3d_punctures";
  auto model = builtin_model("surface_3d_3copy");
  scheme.setup.model = model;

  auto mask = [&](const char* text) { return *model->parse_excitation(text); };
  auto subgroup = [&](std::vector<ExcMask> gens) {
    std::set<ExcMask> members{0};
    bool grew = true;
    while (grew) {
      grew = false;
      for (ExcMask g : gens) {
        for (ExcMask m : std::vector<ExcMask>(members.begin(), members.end())) {
          grew |= members.insert(m ^ g).second;
        }
      }
    }
    return std::vector<ExcMask>(members.begin(), members.end());
  };

  auto data_cond = subgroup({mask("e1"), mask("m2"), mask("m3")});
  auto anc_cond = subgroup({mask("m1"), mask("e2"), mask("m3")});
  auto thread_cond = subgroup({mask("e1"), mask("e2"), mask("m3")});

  scheme.setup.defects = {
      Defect{"h1", DefectKind::hole, 2, data_cond, std::nullopt, "torus"},
      Defect{"h2", DefectKind::hole, 2, data_cond, std::nullopt, "torus"},
      Defect{"halpha", DefectKind::hole, 2, anc_cond, std::nullopt, "torus"},
      Defect{"hbeta", DefectKind::hole, 2, anc_cond, std::nullopt, "torus"},
      Defect{"h3", DefectKind::threaded_puncture, 2, thread_cond, std::nullopt,
             "torus threaded through the other four"},
  };
  for (const char* id : {"h1", "h2", "halpha", "hbeta"}) {
    scheme.setup.relations.push_back(
        Relation{Relation::Kind::threaded_through, "h3", id});
  }

  auto exc = [&](const char* text) { return Excitation{model, mask(text)}; };
  scheme.setup.qubits = {
      QubitDescriptor{"q1",
                      {exc("m1"), TopoClass::encloses("h1"), {}},
                      {exc("e1"), TopoClass::connects("h1", "h2"), {}}},
      QubitDescriptor{"q2",
                      {exc("m2"), TopoClass::connects("h1", "h2"), {}},
                      {exc("e2"), TopoClass::encloses("h1"), {}}},
      QubitDescriptor{"q3",
                      {exc("m3"), TopoClass::absorbs("h3"), {}},
                      {exc("e3"), TopoClass::encloses("h3"), {}}},
      QubitDescriptor{"qa",
                      {exc("m1"), TopoClass::connects("halpha", "hbeta"), {}},
                      {exc("e1"), TopoClass::encloses("halpha"), {}}},
      QubitDescriptor{"qb",
                      {exc("m2"), TopoClass::encloses("halpha"), {}},
                      {exc("e2"), TopoClass::connects("halpha", "hbeta"), {}}},
  };

  // Braiding the second data hole around the first ancilla hole entangles
  // the data pair with the ancilla pair.
  BraidMove braid;
  braid.name = "braid_h2_around_halpha";
  braid.kind = BraidMove::Kind::monodromy;
  braid.d1 = "h2";
  braid.d2 = "halpha";
  braid.transform["X:q2"] = FormalWord{0, {"X:q2", "X:qb"}};
  braid.transform["X:qa"] = FormalWord{0, {"X:qa", "X:q1"}};
  braid.transform["Z:q1"] = FormalWord{0, {"Z:q1", "Z:qa"}};
  braid.transform["Z:qb"] = FormalWord{0, {"Z:qb", "Z:q2"}};
  scheme.moves.push_back(braid);
  return scheme;
}

}  // namespace

Scheme general_scheme(ModelPtr model, const DomainWall& wall) {
  auto report = clifford_eligibility(model, wall);
  if (!report.eligible) {
    throw std::invalid_argument("model/wall pair is not eligible: " + report.reason);
  }
  bool concentric = report.twist_dim > 0;
  return four_twist_scheme(
      "general", model, wall, report.fermion->bits, report.partner->bits,
      report.twist_dim, report.needs_threaded_puncture,
      concentric ? "ol" : "tl", concentric ? "il" : "bl",
      concentric ? "or" : "tr", concentric ? "ir" : "br",
      "exchange_left_pair", concentric ? "exchange_inner_left_outer_right"
                                       : "exchange_diagonal");
}

Scheme builtin_scheme(std::string_view name) {
  if (name == "twist_2d_surface") {
    auto model = builtin_model("surface_2d");
    auto scheme = general_scheme(model, get_wall(model, "hadamard"));
    scheme.name = "twist_2d_surface";
    return scheme;
  }
  if (name == "levin_wen_3d") {
    auto model = builtin_model("levin_wen_3d");
    auto scheme = general_scheme(model, get_wall(model, "attach_fermion"));
    scheme.name = "levin_wen_3d";
    return scheme;
  }
  if (name.starts_with("selfdual_surface_")) {
    int dim = std::stoi(std::string(name.substr(17)));
    auto model = selfdual_model(dim);
    auto scheme = general_scheme(model, get_wall(model, "hadamard"));
    scheme.name = std::string(name);
    return scheme;
  }
  if (name == "universal_3d_punctures") {
    return universal_punctures_scheme();
  }
  throw std::invalid_argument("unknown builtin scheme '" + std::string(name) + "'");
}

std::vector<std::string> builtin_scheme_names() {
  return {"twist_2d_surface", "selfdual_surface_4", "levin_wen_3d",
          "universal_3d_punctures"};
}

}  // namespace dk
