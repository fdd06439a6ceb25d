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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "defectkit/deform.hpp"
#include "defectkit/textform.hpp"
#include "defectkit/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.ends_with('\n')) std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::invalid_argument("cannot write '" + out_path + "'");
  }
  out << content;
}

ordered_json tableau_json(const dk::CliffordTableau& t) {
  ordered_json j;
  ordered_json xs = ordered_json::array();
  ordered_json zs = ordered_json::array();
  for (std::size_t i = 0; i < t.num_qubits(); ++i) {
    xs.push_back(t.x_image(i).str());
    zs.push_back(t.z_image(i).str());
  }
  j["x_images"] = xs;
  j["z_images"] = zs;
  return j;
}

std::string tableau_table(const dk::CliffordTableau& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.num_qubits(); ++i) {
    out << "  X" << i << " -> " << t.x_image(i).str() << "    Z" << i << " -> "
        << t.z_image(i).str() << "\n";
  }
  return out.str();
}

struct CommonOpts {
  std::string format = "json";
  std::string out_path;
};

int cmd_model_check(const std::string& input, const std::string& builtin,
                    const std::string& wall_name, const CommonOpts& common) {
  dk::ModelPtr model;
  std::string model_name;
  if (!builtin.empty()) {
    model = dk::builtin_model(builtin);
    model_name = builtin;
  } else {
    model = dk::parse_model_text(read_file(input));
    model_name = input;
  }
  auto model_report = dk::validate_model(*model);
  auto wall = dk::get_wall(model, wall_name);
  auto report = dk::clifford_eligibility(model, wall);

  ordered_json j;
  j["model"] = model_name;
  j["wall"] = wall_name;
  j["model_valid"] = model_report.ok;
  j["eligible"] = report.eligible;
  if (report.eligible) {
    ordered_json witness;
    witness["fermion"] = model->describe_mask(report.fermion->bits);
    witness["partner"] = model->describe_mask(report.partner->bits);
    witness["fermion_dim"] = report.fermion_dim;
    witness["twist_dim"] = report.twist_dim;
    witness["braid_check"] = report.braid_check;
    witness["needs_threaded_puncture"] = report.needs_threaded_puncture;
    j["witness"] = witness;
  } else {
    j["reason"] = report.reason;
  }

  if (common.format == "text") {
    std::ostringstream out;
    out << "model " << model_name << " with wall " << wall_name << ": "
        << (report.eligible ? "eligible" : "not eligible") << "\n";
    if (report.eligible) {
      out << "  condensing fermion: " << model->describe_mask(report.fermion->bits)
          << " (dim " << report.fermion_dim << ")\n"
          << "  partner:            " << model->describe_mask(report.partner->bits)
          << "\n"
          << "  twist dimension:    " << report.twist_dim << "\n"
          << "  threaded puncture:  "
          << (report.needs_threaded_puncture ? "required" : "not required") << "\n";
    } else {
      out << "  " << report.reason << "\n";
    }
    write_output(common.out_path, out.str());
  } else {
    write_output(common.out_path, j.dump(2) + "\n");
  }
  return report.eligible ? kExitOk : kExitNegative;
}

int cmd_scheme_braid(const std::string& input, const std::string& builtin,
                     std::size_t bound, const CommonOpts& common) {
  dk::Scheme scheme = !builtin.empty()
                          ? dk::builtin_scheme(builtin)
                          : dk::parse_scheme_text(read_file(input));
  auto basis = dk::qubit_basis(scheme.setup);
  auto group = dk::generate_braid_group(scheme.setup, scheme.moves, bound);

  ordered_json j;
  j["scheme"] = scheme.name;
  j["qubits"] = basis.size();
  ordered_json moves = ordered_json::array();
  for (const auto& mv : scheme.moves) {
    ordered_json m;
    m["name"] = mv.name;
    m["kind"] = mv.kind == dk::BraidMove::Kind::exchange ? "exchange" : "monodromy";
    m["defects"] = ordered_json::array({mv.d1, mv.d2});
    m["tableau"] = tableau_json(dk::braid_action(scheme.setup, mv));
    moves.push_back(m);
  }
  j["moves"] = moves;
  j["group_order"] = group.group.order;
  j["group_closed"] = group.group.closed;
  j["all_clifford"] = group.all_clifford;

  if (common.format == "text") {
    std::ostringstream out;
    out << "scheme " << scheme.name << ": " << basis.size() << " encoded qubit(s)\n";
    for (const auto& mv : scheme.moves) {
      out << "move " << mv.name << " (" << mv.d1 << ", " << mv.d2 << "):\n"
          << tableau_table(dk::braid_action(scheme.setup, mv));
    }
    out << "braid group order: " << group.group.order
        << (group.group.closed ? "" : " (truncated)") << "\n";
    write_output(common.out_path, out.str());
  } else {
    write_output(common.out_path, j.dump(2) + "\n");
  }
  return group.group.closed && group.all_clifford ? kExitOk : kExitNegative;
}

int cmd_lattice_build(const std::string& input, std::size_t distance_weight,
                      const CommonOpts& common) {
  auto spec = dk::parse_lattice_text(read_file(input));
  auto planar = dk::build_planar_code(spec);
  auto report = dk::validate(planar.code);

  ordered_json j;
  j["n"] = planar.code.n;
  j["k"] = planar.code.k();
  j["valid"] = report.ok;
  if (!report.ok) j["violation"] = report.message;
  ordered_json logicals = ordered_json::array();
  for (std::size_t i = 0; i < planar.code.logical_pairs.size(); ++i) {
    ordered_json q;
    q["name"] = planar.logical_names[i];
    q["x"] = planar.code.logical_pairs[i].first.str();
    q["z"] = planar.code.logical_pairs[i].second.str();
    logicals.push_back(q);
  }
  j["logicals"] = logicals;
  if (distance_weight > 0) {
    auto d = dk::distance_bruteforce(planar.code, distance_weight);
    j["distance"] = d.found ? ordered_json(d.distance) : ordered_json(nullptr);
    j["distance_searched_to"] = d.searched_weight;
  }

  if (common.format == "text") {
    std::ostringstream out;
    out << "n = " << planar.code.n << ", k = " << planar.code.k() << "\n";
    out << dk::sketch(planar.layout);
    out << dk::export_generators(planar.code);
    write_output(common.out_path, out.str());
  } else {
    write_output(common.out_path, j.dump(2) + "\n");
  }
  return report.ok ? kExitOk : kExitNegative;
}

int cmd_deform_run(const std::string& input, const std::string& script_path,
                   const std::string& hole_path, const std::string& expect,
                   std::size_t floor_value, const CommonOpts& common) {
  auto spec = dk::parse_lattice_text(read_file(input));
  auto planar = dk::build_planar_code(spec);

  dk::BraidScript script;
  if (!script_path.empty()) {
    script = dk::script_from_text(read_file(script_path));
  } else if (!hole_path.empty()) {
    auto colon = hole_path.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("--path takes <hole-index>:<UDLR...>");
    }
    std::size_t hole = std::stoul(hole_path.substr(0, colon));
    std::vector<dk::Dir> dirs;
    for (char c : hole_path.substr(colon + 1)) {
      switch (c) {
        case 'U':
          dirs.push_back(dk::Dir::up);
          break;
        case 'D':
          dirs.push_back(dk::Dir::down);
          break;
        case 'L':
          dirs.push_back(dk::Dir::left);
          break;
        case 'R':
          dirs.push_back(dk::Dir::right);
          break;
        default:
          throw std::invalid_argument("--path directions must be U, D, L or R");
      }
    }
    script = dk::move_hole(planar, hole, dirs);
  } else {
    throw std::invalid_argument("deform-run needs --script or --path");
  }

  dk::RunOptions options;
  options.distance_floor = floor_value;
  auto result = dk::run_braid(planar, script, options);

  bool pass = true;
  if (expect == "identity") {
    pass = dk::equals_up_to_phase(result.tableau,
                                  dk::CliffordTableau::identity(planar.code.k()));
  } else if (expect.rfind("cnot:", 0) == 0) {
    auto comma = expect.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("--expect cnot takes cnot:<c>,<t>");
    }
    std::size_t control = std::stoul(expect.substr(5, comma - 5));
    std::size_t target = std::stoul(expect.substr(comma + 1));
    pass = dk::equals_up_to_phase(
        result.tableau, dk::CliffordTableau::cnot(planar.code.k(), control, target));
  } else if (!expect.empty()) {
    throw std::invalid_argument("--expect takes identity or cnot:<c>,<t>");
  }

  ordered_json j;
  j["n"] = planar.code.n;
  j["k"] = planar.code.k();
  j["steps"] = script.steps.size();
  j["tableau"] = tableau_json(result.tableau);
  j["byproduct"] = result.byproduct.str();
  j["distance_checkpoints"] = result.checkpoints;
  if (!expect.empty()) {
    j["expected"] = expect;
    j["pass"] = pass;
  }

  if (common.format == "text") {
    std::ostringstream out;
    out << "k = " << planar.code.k() << ", steps = " << script.steps.size() << "\n";
    out << tableau_table(result.tableau);
    if (!expect.empty()) {
      out << "expected " << expect << ": " << (pass ? "pass" : "FAIL") << "\n";
    }
    write_output(common.out_path, out.str());
  } else {
    write_output(common.out_path, j.dump(2) + "\n");
  }
  return pass ? kExitOk : kExitNegative;
}

int cmd_compile(int n, const std::string& gate, bool no_verify,
                std::size_t branch_cap, const CommonOpts& common) {
  dk::LogicalProgram program;
  dk::VerifyTarget target;
  if (gate.rfind("h:", 0) == 0) {
    int q = std::stoi(gate.substr(2));
    program = dk::compile_H(n, q);
    target = dk::VerifyTarget::hadamard(q);
  } else if (gate.rfind("ccz:", 0) == 0) {
    int x, y, z;
    char c1, c2;
    std::istringstream in(gate.substr(4));
    if (!(in >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',') {
      throw std::invalid_argument("--gate ccz takes ccz:<x>,<y>,<z>");
    }
    program = dk::compile_CCZ(n, x, y, z);
    target = dk::VerifyTarget::ccz(x, y, z);
  } else if (gate.rfind("swap:", 0) == 0) {
    int x = std::stoi(gate.substr(5));
    program = dk::compile_SWAP(n, x);
    target = dk::VerifyTarget::swap_with_n(x);
  } else {
    throw std::invalid_argument("--gate takes h:<q>, ccz:<x>,<y>,<z> or swap:<x>");
  }

  auto resources = dk::resource_count(program);
  ordered_json j;
  j["n"] = n;
  j["gate"] = gate;
  ordered_json res;
  res["instructions"] = resources.instructions;
  res["h_gadgets"] = resources.h_gadgets;
  res["move_gadgets"] = resources.move_gadgets;
  res["measurements"] = resources.measurements;
  res["preparations"] = resources.preparations;
  res["conditional_paulis"] = resources.conditional_paulis;
  res["cz_count"] = resources.cz_count;
  res["global_transversal"] = resources.global_transversal;
  res["braid_operations"] = resources.braid_operations;
  j["resources"] = res;

  bool pass = true;
  if (!no_verify) {
    dk::VerifyOptions options;
    options.explicit_branch_cap = branch_cap;
    auto report = dk::verify(program, target, options);
    pass = report.all_passed;
    j["verification"] = ordered_json::parse(report.to_json(gate, target.describe()));
  }

  if (common.format == "text") {
    std::ostringstream out;
    out << "gate " << gate << " on N = " << n << " (" << resources.instructions
        << " instructions, " << resources.measurements << " measurements)\n";
    out << dk::program_to_text(program);
    if (!no_verify) {
      out << (pass ? "verification: all branches pass\n"
                   : "verification: FAILED\n");
    }
    write_output(common.out_path, out.str());
  } else {
    write_output(common.out_path, j.dump(2) + "\n");
  }
  return pass ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defect algebra toolkit for topological stabiliser codes"};
  app.require_subcommand(1);

  std::string input, builtin, wall = "identity", script, path, expect, gate;
  CommonOpts common;
  std::size_t bound = 4096, branch_cap = 4096, distance = 0, floor_value = 0;
  int n = 3;
  bool no_verify = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", common.out_path, "write the report to a file");
  };

  auto* model_check =
      app.add_subcommand("model-check", "validate a model and test eligibility");
  model_check->add_option("--input", input, "model definition file");
  model_check->add_option("--builtin", builtin, "built-in model name");
  model_check->add_option("--wall", wall, "wall to test (default: identity)");
  add_common(model_check);

  auto* scheme_braid =
      app.add_subcommand("scheme-braid", "derive braid tableaux and the group");
  scheme_braid->add_option("--input", input, "scheme definition file");
  scheme_braid->add_option("--builtin", builtin, "built-in scheme name");
  scheme_braid->add_option("--bound", bound, "group enumeration cap");
  add_common(scheme_braid);

  auto* lattice_build =
      app.add_subcommand("lattice-build", "build and validate a planar code");
  lattice_build->add_option("--input", input, "lattice definition file")->required();
  lattice_build->add_option("--distance", distance,
                            "brute-force the distance up to this weight");
  add_common(lattice_build);

  auto* deform_run =
      app.add_subcommand("deform-run", "run a hole-braid deformation script");
  deform_run->add_option("--input", input, "lattice definition file")->required();
  deform_run->add_option("--script", script, "deformation script file");
  deform_run->add_option("--path", path, "generated walk, e.g. 0:RRDDLLUU");
  deform_run->add_option("--expect", expect, "identity or cnot:<c>,<t>");
  deform_run->add_option("--floor", floor_value, "distance floor during motion");
  add_common(deform_run);

  auto* compile =
      app.add_subcommand("compile", "compile and verify a logical-level gate");
  compile->add_option("--n", n, "number of data qubits (odd, >= 3)")->required();
  compile->add_option("--gate", gate, "h:<q> | ccz:<x>,<y>,<z> | swap:<x>")
      ->required();
  compile->add_flag("--no-verify", no_verify, "skip branch verification");
  compile->add_option("--branch-cap", branch_cap, "explicit per-branch listing cap");
  add_common(compile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (model_check->parsed()) {
      if (input.empty() == builtin.empty()) {
        throw std::invalid_argument(
            "model-check needs exactly one of --input/--builtin");
      }
      return cmd_model_check(input, builtin, wall, common);
    }
    if (scheme_braid->parsed()) {
      if (input.empty() == builtin.empty()) {
        throw std::invalid_argument(
            "scheme-braid needs exactly one of --input/--builtin");
      }
      return cmd_scheme_braid(input, builtin, bound, common);
    }
    if (lattice_build->parsed()) {
      return cmd_lattice_build(input, distance, common);
    }
    if (deform_run->parsed()) {
      return cmd_deform_run(input, script, path, expect, floor_value, common);
    }
    if (compile->parsed()) {
      return cmd_compile(n, gate, no_verify, branch_cap, common);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}
