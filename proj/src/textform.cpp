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

#include "defectkit/textform.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line{number, {}};
    std::string token;
    while (ls >> token) line.tokens.push_back(token);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

void check_header(const std::vector<Line>& lines) {
  if (lines.empty() || lines[0].tokens.size() != 2 ||
      lines[0].tokens[0] != "defectkit-format") {
    fail(lines.empty() ? 1 : lines[0].number,
         "expected header 'defectkit-format 1'");
  }
  if (lines[0].tokens[1] != "1") {
    fail(lines[0].number, "unsupported format version " + lines[0].tokens[1]);
  }
  if (lines.size() < 2 || lines[1].tokens.size() != 2 ||
      lines[1].tokens[0] != "kind") {
    fail(lines.size() < 2 ? lines[0].number : lines[1].number,
         "expected 'kind model|lattice|scheme'");
  }
}

int parse_int(const Line& line, const std::string& token) {
  try {
    std::size_t used = 0;
    int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("");
    return value;
  } catch (...) {
    fail(line.number, "expected an integer, got '" + token + "'");
  }
}

// key=value option, or the bare default.
std::string option(const Line& line, const std::string& key,
                   const std::string& fallback = "") {
  for (const auto& token : line.tokens) {
    if (token.starts_with(key + "=")) return token.substr(key.size() + 1);
  }
  if (fallback.empty()) {
    fail(line.number, "missing option '" + key + "='");
  }
  return fallback;
}

int parse_sign(const Line& line, const std::string& token) {
  if (token == "+1" || token == "+") return 1;
  if (token == "-1" || token == "-") return -1;
  fail(line.number, "expected +1 or -1, got '" + token + "'");
}

struct ModelBuilder {
  int dimension = -1;
  std::vector<std::string> names;
  std::vector<int> dims;
  std::vector<int> thetas;
  std::vector<std::tuple<std::string, std::string, int>> braids;
  std::vector<WallSpec> walls;
  std::vector<NamedExcitationLabel> labels;

  ModelPtr build(std::size_t line_no) const {
    if (dimension < 2) fail(line_no, "model needs 'dimension D' with D >= 2");
    if (names.empty()) fail(line_no, "model declares no generators");
    std::size_t k = names.size();
    std::vector<std::vector<int>> b(k, std::vector<int>(k, 1));
    auto index = [&](const std::string& name, std::size_t ln) {
      for (std::size_t i = 0; i < k; ++i) {
        if (names[i] == name) return i;
      }
      fail(ln, "unknown generator '" + name + "'");
    };
    for (const auto& [x, y, sign] : braids) {
      std::size_t i = index(x, line_no);
      std::size_t j = index(y, line_no);
      b[i][j] = b[j][i] = sign;
    }
    auto model = std::make_shared<ExcitationModel>(dimension, names, dims, thetas, b);
    for (const auto& wall : walls) {
      auto report = validate_wall(model, wall);
      if (!report.ok) {
        fail(line_no, "wall '" + wall.name + "': " + report.message);
      }
      model->add_wall(wall);
    }
    for (const auto& label : labels) model->add_label(label);
    return model;
  }
};

// Parses the shared model vocabulary.  Returns false when the line belongs
// to the enclosing document instead.
bool parse_model_line(ModelBuilder& mb, const std::vector<Line>& lines,
                      std::size_t& idx) {
  const Line& line = lines[idx];
  const auto& t = line.tokens;
  if (t[0] == "dimension") {
    if (t.size() != 2) fail(line.number, "usage: dimension D");
    mb.dimension = parse_int(line, t[1]);
    ++idx;
    return true;
  }
  if (t[0] == "generator") {
    if (t.size() < 2) fail(line.number, "usage: generator <name> dim=<d> theta=<+1|-1>");
    mb.names.push_back(t[1]);
    mb.dims.push_back(parse_int(line, option(line, "dim")));
    mb.thetas.push_back(parse_sign(line, option(line, "theta", "+1")));
    ++idx;
    return true;
  }
  if (t[0] == "braid") {
    if (t.size() != 4) fail(line.number, "usage: braid <g1> <g2> <+1|-1>");
    mb.braids.emplace_back(t[1], t[2], parse_sign(line, t[3]));
    ++idx;
    return true;
  }
  if (t[0] == "label") {
    if (t.size() < 2) fail(line.number, "usage: label <name> dim=<d>");
    mb.labels.push_back(
        NamedExcitationLabel{t[1], parse_int(line, option(line, "dim", "1"))});
    ++idx;
    return true;
  }
  if (t[0] == "wall") {
    if (t.size() < 2) fail(line.number, "usage: wall <name> [dim=<d>] ... end");
    WallSpec wall;
    wall.name = t[1];
    wall.wall_dim = parse_int(line, option(line, "dim", "1"));
    std::map<std::string, std::string> mapping;
    ++idx;
    for (; idx < lines.size(); ++idx) {
      const auto& inner = lines[idx].tokens;
      if (inner[0] == "end") {
        ++idx;
        break;
      }
      if (inner.size() == 4 && inner[0] == "map" && inner[2] == "->") {
        mapping[inner[1]] = inner[3];
      } else {
        fail(lines[idx].number, "usage inside wall: map <g> -> <excitation> | end");
      }
    }
    // Image construction is deferred: record by generator order.
    for (const auto& name : mb.names) {
      auto it = mapping.find(name);
      std::string target = it == mapping.end() ? name : it->second;
      ExcMask mask = 0;
      // Resolve against the generators declared so far (dot-joined names).
      std::string part;
      std::istringstream ts(target);
      std::vector<std::string> parts;
      while (std::getline(ts, part, '.')) parts.push_back(part);
      if (parts.empty()) parts.push_back(target);
      for (const auto& piece : parts) {
        bool found = false;
        for (std::size_t i = 0; i < mb.names.size(); ++i) {
          if (mb.names[i] == piece) {
            mask ^= ExcMask{1} << i;
            found = true;
            break;
          }
        }
        if (!found) fail(line.number, "wall maps to unknown excitation '" + target + "'");
      }
      wall.images.push_back(mask);
    }
    mb.walls.push_back(std::move(wall));
    return true;
  }
  return false;
}

Excitation parse_excitation_checked(ModelPtr model, const std::string& text,
                                    std::size_t line_no) {
  auto mask = model->parse_excitation(text);
  if (!mask) fail(line_no, "unknown excitation '" + text + "'");
  return Excitation{std::move(model), *mask};
}

}  // namespace

std::string peek_kind(const std::string& text) {
  auto lines = tokenize(text);
  check_header(lines);
  return lines[1].tokens[1];
}

ModelPtr parse_model_text(const std::string& text) {
  auto lines = tokenize(text);
  check_header(lines);
  if (lines[1].tokens[1] != "model") {
    fail(lines[1].number, "expected a model document");
  }
  ModelBuilder mb;
  std::size_t idx = 2;
  while (idx < lines.size()) {
    if (!parse_model_line(mb, lines, idx)) {
      fail(lines[idx].number, "unknown model key '" + lines[idx].tokens[0] + "'");
    }
  }
  return mb.build(lines.back().number);
}

LatticeSpec parse_lattice_text(const std::string& text) {
  auto lines = tokenize(text);
  check_header(lines);
  if (lines[1].tokens[1] != "lattice") {
    fail(lines[1].number, "expected a lattice document");
  }
  LatticeSpec spec;
  auto boundary = [&](const Line& line, const std::string& token) {
    if (token == "rough") return Boundary::rough;
    if (token == "smooth") return Boundary::smooth;
    fail(line.number, "boundary must be rough or smooth");
  };
  for (std::size_t idx = 2; idx < lines.size(); ++idx) {
    const Line& line = lines[idx];
    const auto& t = line.tokens;
    if (t[0] == "width" && t.size() == 2) {
      spec.width = parse_int(line, t[1]);
    } else if (t[0] == "height" && t.size() == 2) {
      spec.height = parse_int(line, t[1]);
    } else if (t[0] == "boundary" && t.size() == 3) {
      Boundary b = boundary(line, t[2]);
      if (t[1] == "top") {
        spec.top = b;
      } else if (t[1] == "bottom") {
        spec.bottom = b;
      } else if (t[1] == "left") {
        spec.left = b;
      } else if (t[1] == "right") {
        spec.right = b;
      } else {
        fail(line.number, "boundary side must be top|bottom|left|right");
      }
    } else if (t[0] == "hole" && t.size() == 6) {
      HoleSpec hole;
      hole.type = boundary(line, t[1]);
      hole.r0 = parse_int(line, t[2]);
      hole.c0 = parse_int(line, t[3]);
      hole.rows = parse_int(line, t[4]);
      hole.cols = parse_int(line, t[5]);
      spec.holes.push_back(hole);
    } else {
      fail(line.number, "unknown lattice key '" + t[0] + "'");
    }
  }
  auto report = validate_spec(spec);
  if (!report.ok) {
    throw std::invalid_argument("lattice document: " + report.message);
  }
  return spec;
}

Scheme parse_scheme_text(const std::string& text) {
  auto lines = tokenize(text);
  check_header(lines);
  if (lines[1].tokens[1] != "scheme") {
    fail(lines[1].number, "expected a scheme document");
  }
  Scheme scheme;
  ModelBuilder mb;
  bool inline_model = false;
  std::size_t idx = 2;

  auto model_ready = [&]() {
    if (!scheme.setup.model) {
      fail(lines[idx].number, "declare the model before defects and qubits");
    }
  };

  while (idx < lines.size()) {
    const Line& line = lines[idx];
    const auto& t = line.tokens;
    if (t[0] == "name" && t.size() == 2) {
      scheme.name = t[1];
      ++idx;
      continue;
    }
    if (t[0] == "model" && t.size() == 3 && t[1] == "builtin") {
      scheme.setup.model = builtin_model(t[2]);
      ++idx;
      continue;
    }
    if (!scheme.setup.model && parse_model_line(mb, lines, idx)) {
      inline_model = true;
      continue;
    }
    if (inline_model && !scheme.setup.model) {
      scheme.setup.model = mb.build(line.number);
      // Fall through to interpret the current line as a scheme key.
    }
    if (t[0] == "use_wall" && (t.size() == 3)) {
      model_ready();
      scheme.setup.walls.emplace(t[1], get_wall(scheme.setup.model, t[2]));
      ++idx;
      continue;
    }
    if (t[0] == "defect" && t.size() >= 3) {
      model_ready();
      Defect d;
      d.id = t[1];
      if (t[2] == "twist") {
        d.kind = DefectKind::twist;
      } else if (t[2] == "hole") {
        d.kind = DefectKind::hole;
      } else if (t[2] == "threaded_puncture") {
        d.kind = DefectKind::threaded_puncture;
      } else {
        fail(line.number, "defect kind must be twist|hole|threaded_puncture");
      }
      d.dim = parse_int(line, option(line, "dim", "0"));
      d.geometry_tag = option(line, "tag", "-");
      if (d.kind == DefectKind::twist) {
        d.wall_id = option(line, "wall");
        auto it = scheme.setup.walls.find(*d.wall_id);
        if (it == scheme.setup.walls.end()) {
          fail(line.number, "defect references undeclared wall '" + *d.wall_id + "'");
        }
        for (const auto& e : condensable_at_twist(it->second)) {
          d.condensable.push_back(e.bits);
        }
      } else {
        // condenses <names...>: the generated subgroup.
        std::set<ExcMask> members{0};
        bool listing = false;
        for (const auto& token : t) {
          if (token == "condenses") {
            listing = true;
            continue;
          }
          if (!listing || token.find('=') != std::string::npos) continue;
          ExcMask g =
              parse_excitation_checked(scheme.setup.model, token, line.number).bits;
          for (ExcMask m : std::vector<ExcMask>(members.begin(), members.end())) {
            members.insert(m ^ g);
          }
        }
        d.condensable.assign(members.begin(), members.end());
      }
      scheme.setup.defects.push_back(std::move(d));
      ++idx;
      continue;
    }
    if (t[0] == "relation" && t.size() == 4) {
      Relation rel;
      if (t[1] == "concentric") {
        rel.kind = Relation::Kind::concentric;
      } else if (t[1] == "threaded_through") {
        rel.kind = Relation::Kind::threaded_through;
      } else {
        fail(line.number, "relation must be concentric|threaded_through");
      }
      rel.a = t[2];
      rel.b = t[3];
      scheme.setup.relations.push_back(rel);
      ++idx;
      continue;
    }
    if (t[0] == "qubit" && t.size() == 2) {
      model_ready();
      QubitDescriptor q;
      q.name = t[1];
      bool have_x = false, have_z = false;
      ++idx;
      for (; idx < lines.size(); ++idx) {
        const auto& inner = lines[idx].tokens;
        if (inner[0] == "end") {
          ++idx;
          break;
        }
        if ((inner[0] != "x" && inner[0] != "z") || inner.size() < 4) {
          fail(lines[idx].number,
               "usage: x|z <excitation> connects|encloses|encloses_pair|absorbs "
               "<defects...> [cross <wall>=<count> ...]");
        }
        PathDescriptor d;
        d.excitation =
            parse_excitation_checked(scheme.setup.model, inner[1], lines[idx].number);
        const std::string& cls = inner[2];
        std::size_t arg = 3;
        if (cls == "connects" || cls == "encloses_pair") {
          if (inner.size() < 5) fail(lines[idx].number, "class needs two defects");
          d.where = cls == "connects" ? TopoClass::connects(inner[3], inner[4])
                                      : TopoClass::encloses_pair(inner[3], inner[4]);
          arg = 5;
        } else if (cls == "encloses") {
          d.where = TopoClass::encloses(inner[3]);
          arg = 4;
        } else if (cls == "absorbs") {
          d.where = TopoClass::absorbs(inner[3]);
          arg = 4;
        } else {
          fail(lines[idx].number, "unknown path class '" + cls + "'");
        }
        for (; arg < inner.size(); ++arg) {
          auto eq = inner[arg].find('=');
          if (eq == std::string::npos) {
            fail(lines[idx].number, "expected <wall>=<count> crossing");
          }
          d.wall_crossings[inner[arg].substr(0, eq)] =
              parse_int(lines[idx], inner[arg].substr(eq + 1));
        }
        if (inner[0] == "x") {
          q.x = std::move(d);
          have_x = true;
        } else {
          q.z = std::move(d);
          have_z = true;
        }
      }
      if (!have_x || !have_z) {
        fail(line.number, "qubit '" + q.name + "' needs both x and z descriptors");
      }
      scheme.setup.qubits.push_back(std::move(q));
      continue;
    }
    if (t[0] == "move" && t.size() == 5) {
      BraidMove mv;
      mv.name = t[1];
      if (t[2] == "exchange") {
        mv.kind = BraidMove::Kind::exchange;
      } else if (t[2] == "monodromy") {
        mv.kind = BraidMove::Kind::monodromy;
      } else {
        fail(line.number, "move must be exchange|monodromy");
      }
      mv.d1 = t[3];
      mv.d2 = t[4];
      ++idx;
      for (; idx < lines.size(); ++idx) {
        const auto& inner = lines[idx].tokens;
        if (inner[0] == "end") {
          ++idx;
          break;
        }
        if (inner.size() < 3 || inner[1] != "->") {
          fail(lines[idx].number, "usage: <X|Z>:<qubit> -> [i|-1|-i] factors...");
        }
        FormalWord word;
        std::size_t arg = 2;
        if (inner[arg] == "i") {
          word.phase = 1;
          ++arg;
        } else if (inner[arg] == "-1") {
          word.phase = 2;
          ++arg;
        } else if (inner[arg] == "-i") {
          word.phase = 3;
          ++arg;
        } else if (inner[arg] == "+1") {
          ++arg;
        }
        for (; arg < inner.size(); ++arg) word.factors.push_back(inner[arg]);
        mv.transform[inner[0]] = std::move(word);
      }
      scheme.moves.push_back(std::move(mv));
      continue;
    }
    fail(line.number, "unknown scheme key '" + t[0] + "'");
  }
  if (!scheme.setup.model && inline_model) {
    scheme.setup.model = mb.build(lines.back().number);
  }
  auto report = validate_setup(scheme.setup);
  if (!report.ok) {
    throw std::invalid_argument("scheme document: " + report.message);
  }
  return scheme;
}

std::string model_to_text(const ExcitationModel& model) {
  std::ostringstream out;
  out << "defectkit-format 1\nkind model\n\n";
  out << "dimension " << model.spatial_dim() << "\n";
  for (std::size_t i = 0; i < model.generator_count(); ++i) {
    out << "generator " << model.names()[i] << " dim=" << model.generator_dim(i)
        << " theta=" << (model.generator_theta(i) == 1 ? "+1" : "-1") << "\n";
  }
  for (std::size_t i = 0; i < model.generator_count(); ++i) {
    for (std::size_t j = i + 1; j < model.generator_count(); ++j) {
      if (model.braiding(i, j) == -1) {
        out << "braid " << model.names()[i] << ' ' << model.names()[j] << " -1\n";
      }
    }
  }
  for (const auto& label : model.labels()) {
    out << "label " << label.name << " dim=" << label.dim << "\n";
  }
  for (const auto& wall : model.wall_specs()) {
    out << "wall " << wall.name << " dim=" << wall.wall_dim << "\n";
    for (std::size_t i = 0; i < model.generator_count(); ++i) {
      out << "  map " << model.names()[i] << " -> "
          << model.describe_mask(wall.images[i]) << "\n";
    }
    out << "end\n";
  }
  return out.str();
}

std::string lattice_to_text(const LatticeSpec& spec) {
  std::ostringstream out;
  auto name = [](Boundary b) { return b == Boundary::rough ? "rough" : "smooth"; };
  out << "defectkit-format 1\nkind lattice\n\n";
  out << "width " << spec.width << "\nheight " << spec.height << "\n";
  out << "boundary top " << name(spec.top) << "\n";
  out << "boundary bottom " << name(spec.bottom) << "\n";
  out << "boundary left " << name(spec.left) << "\n";
  out << "boundary right " << name(spec.right) << "\n";
  for (const auto& hole : spec.holes) {
    out << "hole " << name(hole.type) << ' ' << hole.r0 << ' ' << hole.c0 << ' '
        << hole.rows << ' ' << hole.cols << "\n";
  }
  return out.str();
}

}  // namespace dk
