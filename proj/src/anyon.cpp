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

#include "defectkit/anyon.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace dk {

namespace {

constexpr std::size_t kMaxGenerators = 20;

void check_same_model(const Excitation& a, const Excitation& b) {
  if (a.model != b.model) {
    throw std::invalid_argument("excitations belong to different models");
  }
}

int mask_dim(const ExcitationModel& m, ExcMask mask) {
  int best = -1;
  for (std::size_t i = 0; i < m.generator_count(); ++i) {
    if (mask & (ExcMask{1} << i)) {
      best = std::max(best, m.generator_dim(i));
    }
  }
  return best;
}

int mask_theta(const ExcitationModel& m, ExcMask mask) {
  int sign = 1;
  std::size_t k = m.generator_count();
  for (std::size_t i = 0; i < k; ++i) {
    if (!(mask & (ExcMask{1} << i))) continue;
    sign *= m.generator_theta(i);
    for (std::size_t j = i + 1; j < k; ++j) {
      if (mask & (ExcMask{1} << j)) {
        sign *= m.braiding(i, j);
      }
    }
  }
  return sign;
}

int mask_braid(const ExcitationModel& m, ExcMask a, ExcMask b) {
  int sign = 1;
  std::size_t k = m.generator_count();
  for (std::size_t i = 0; i < k; ++i) {
    if (!(a & (ExcMask{1} << i))) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b & (ExcMask{1} << j)) {
        sign *= m.braiding(i, j);
      }
    }
  }
  return sign;
}

ExcMask apply_images(const std::vector<ExcMask>& images, ExcMask a) {
  ExcMask out = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (a & (ExcMask{1} << i)) out ^= images[i];
  }
  return out;
}

bool images_invertible(const std::vector<ExcMask>& images) {
  // Gaussian elimination on the image column vectors.
  std::vector<ExcMask> rows(images);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < images.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !(rows[sel] & (ExcMask{1} << col))) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && (rows[r] & (ExcMask{1} << col))) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == images.size();
}

}  // namespace

ExcitationModel::ExcitationModel(int spatial_dim, std::vector<std::string> names,
                                 std::vector<int> gen_dims, std::vector<int> theta_gen,
                                 std::vector<std::vector<int>> braiding)
    : spatial_dim_(spatial_dim), names_(std::move(names)), gen_dims_(std::move(gen_dims)) {
  std::size_t k = names_.size();
  if (k == 0 || k > kMaxGenerators) {
    throw std::invalid_argument("model: generator count out of range");
  }
  if (spatial_dim_ < 2) {
    throw std::invalid_argument("model: spatial dimension must be at least 2");
  }
  if (gen_dims_.size() != k || theta_gen.size() != k || braiding.size() != k) {
    throw std::invalid_argument("model: field length mismatch");
  }
  std::set<std::string> uniq(names_.begin(), names_.end());
  if (uniq.size() != k) {
    throw std::invalid_argument("model: duplicate generator names");
  }
  theta_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (theta_gen[i] != 1 && theta_gen[i] != -1) {
      throw std::invalid_argument("model: theta must be +1 or -1");
    }
    theta_[i] = theta_gen[i] == -1;
    if (gen_dims_[i] < 0 || gen_dims_[i] > spatial_dim_ - 2) {
      throw std::invalid_argument("model: generator dimension outside [0, D-2]");
    }
  }
  b_.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    if (braiding[i].size() != k) {
      throw std::invalid_argument("model: braiding matrix not square");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (braiding[i][j] != 1 && braiding[i][j] != -1) {
        throw std::invalid_argument("model: braiding entries must be +1 or -1");
      }
      b_[i][j] = braiding[i][j] == -1;
    }
  }
  auto report = validate_model(*this);
  if (!report.ok) {
    throw std::invalid_argument("model: " + report.message);
  }
}

std::optional<std::size_t> ExcitationModel::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::string ExcitationModel::describe_mask(ExcMask mask) const {
  if (mask == 0) return "1";
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (mask & (ExcMask{1} << i)) {
      if (!out.empty()) out += ".";
      out += names_[i];
    }
  }
  return out;
}

std::optional<ExcMask> ExcitationModel::parse_excitation(std::string_view text) const {
  if (text == "1" || text == "vacuum") return ExcMask{0};
  // Accept dot-separated generator names ("e.m") or a plain concatenation
  // when that is unambiguous ("em").
  ExcMask out = 0;
  std::string s(text);
  bool dotted = s.find('.') != std::string::npos;
  if (dotted) {
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t dot = s.find('.', start);
      std::string part = s.substr(start, dot == std::string::npos ? dot : dot - start);
      auto idx = generator_index(part);
      if (!idx) return std::nullopt;
      out ^= ExcMask{1} << *idx;
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    return out;
  }
  // Greedy longest-name match on the concatenated form.
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t best_len = 0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& nm = names_[i];
      if (nm.size() > best_len && s.compare(pos, nm.size(), nm) == 0) {
        best_len = nm.size();
        best_idx = i;
      }
    }
    if (best_len == 0) return std::nullopt;
    out ^= ExcMask{1} << best_idx;
    pos += best_len;
  }
  return out;
}

Excitation make_excitation(ModelPtr model, std::string_view names_text) {
  auto mask = model->parse_excitation(names_text);
  if (!mask) {
    throw std::invalid_argument("unknown excitation: " + std::string(names_text));
  }
  return Excitation{std::move(model), *mask};
}

Excitation vacuum(ModelPtr model) { return Excitation{std::move(model), 0}; }

Excitation fuse(const Excitation& a, const Excitation& b) {
  check_same_model(a, b);
  return Excitation{a.model, static_cast<ExcMask>(a.bits ^ b.bits)};
}

int statistics(const Excitation& a) { return mask_theta(*a.model, a.bits); }

int braid_phase(const Excitation& a, const Excitation& b) {
  check_same_model(a, b);
  return mask_braid(*a.model, a.bits, b.bits);
}

int dimension(const Excitation& a) { return mask_dim(*a.model, a.bits); }

bool is_generalised_fermion(const Excitation& a) { return statistics(a) == -1; }

ModelReport validate_model(const ExcitationModel& m) {
  std::size_t k = m.generator_count();
  for (std::size_t i = 0; i < k; ++i) {
    if (m.braiding(i, i) != 1) {
      return {false, "self-braiding B(" + m.names()[i] + "," + m.names()[i] +
                         ") must be +1 for a Z2 generator"};
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (m.braiding(i, j) != m.braiding(j, i)) {
        return {false, "braiding matrix is not symmetric"};
      }
      if (i < j && m.braiding(i, j) == -1 &&
          m.generator_dim(i) + m.generator_dim(j) != m.spatial_dim() - 2) {
        return {false, "mutually braiding generators " + m.names()[i] + "," +
                           m.names()[j] + " must have dimensions summing to D-2"};
      }
    }
  }
  // Composite statistics are consistent with the bilinear form; exhaustive for
  // small k.
  if (k <= 8) {
    ExcMask full = m.full_mask();
    for (ExcMask a = 0; a <= full; ++a) {
      for (ExcMask b = 0; b <= full; ++b) {
        int lhs = mask_theta(m, a ^ b);
        int rhs = mask_theta(m, a) * mask_theta(m, b) * mask_braid(m, a, b);
        if (lhs != rhs) {
          return {false, "composite statistics inconsistent at " +
                             m.describe_mask(a) + ", " + m.describe_mask(b)};
        }
      }
    }
  }
  return {};
}

WallReport validate_wall(ModelPtr model, const WallSpec& spec) {
  const ExcitationModel& m = *model;
  std::size_t k = m.generator_count();
  if (spec.images.size() != k) {
    return {false, "wall image count does not match generator count"};
  }
  if (spec.wall_dim < 1 || spec.wall_dim > m.spatial_dim() - 1) {
    return {false, "wall dimension outside [1, D-1]"};
  }
  if (!images_invertible(spec.images)) {
    return {false, "wall map is not invertible over GF(2)"};
  }
  bool exhaustive = k <= 8;
  for (std::size_t i = 0; i < k; ++i) {
    ExcMask g = ExcMask{1} << i;
    ExcMask fg = apply_images(spec.images, g);
    if (mask_theta(m, fg) != mask_theta(m, g)) {
      return {false, "wall does not preserve self-statistics of " + m.names()[i]};
    }
    if (mask_dim(m, fg) != mask_dim(m, g)) {
      return {false, "wall does not preserve the dimension of " + m.names()[i]};
    }
    for (std::size_t j = 0; j < k; ++j) {
      ExcMask h = ExcMask{1} << j;
      ExcMask fh = apply_images(spec.images, h);
      if (mask_braid(m, fg, fh) != mask_braid(m, g, h)) {
        return {false, "wall does not preserve braiding of " + m.names()[i] + "," +
                           m.names()[j]};
      }
    }
  }
  if (exhaustive) {
    ExcMask full = m.full_mask();
    for (ExcMask a = 0; a <= full; ++a) {
      ExcMask fa = apply_images(spec.images, a);
      if (mask_theta(m, fa) != mask_theta(m, a) ||
          mask_dim(m, fa) != mask_dim(m, a)) {
        return {false, "wall breaks statistics or dimension on composite " +
                           m.describe_mask(a)};
      }
    }
  }
  return {};
}

DomainWall make_wall(ModelPtr model, const WallSpec& spec) {
  auto report = validate_wall(model, spec);
  if (!report.ok) {
    throw std::invalid_argument("wall '" + spec.name + "': " + report.message);
  }
  return DomainWall{std::move(model), spec.images, spec.wall_dim, spec.name};
}

DomainWall identity_wall(ModelPtr model) {
  WallSpec spec;
  spec.name = "identity";
  for (std::size_t i = 0; i < model->generator_count(); ++i) {
    spec.images.push_back(ExcMask{1} << i);
  }
  return make_wall(std::move(model), spec);
}

DomainWall get_wall(ModelPtr model, std::string_view name) {
  if (name == "identity") return identity_wall(std::move(model));
  for (const auto& spec : model->wall_specs()) {
    if (spec.name == name) return make_wall(model, spec);
  }
  throw std::invalid_argument("model declares no wall named '" + std::string(name) + "'");
}

Excitation wall_apply(const DomainWall& w, const Excitation& a) {
  if (w.model != a.model) {
    throw std::invalid_argument("wall and excitation belong to different models");
  }
  return Excitation{a.model, apply_images(w.images, a.bits)};
}

std::vector<Excitation> condensable_at_twist(const DomainWall& w) {
  std::set<ExcMask> seen;
  ExcMask full = w.model->full_mask();
  for (ExcMask g = 0; g <= full; ++g) {
    seen.insert(static_cast<ExcMask>(g ^ apply_images(w.images, g)));
  }
  std::vector<Excitation> out;
  out.reserve(seen.size());
  for (ExcMask mask : seen) out.push_back(Excitation{w.model, mask});
  return out;
}

EligibilityReport clifford_eligibility(ModelPtr model, const DomainWall& wall) {
  if (wall.model != model) {
    throw std::invalid_argument("clifford_eligibility: wall belongs to another model");
  }
  const ExcitationModel& m = *model;
  EligibilityReport report;

  ExcMask full = m.full_mask();
  bool found_fermion = false;
  for (ExcMask g = 1; g <= full && !report.eligible; ++g) {
    ExcMask a = static_cast<ExcMask>(g ^ apply_images(wall.images, g));
    if (a == 0) continue;
    if (mask_theta(m, a) != -1) continue;
    found_fermion = true;
    ExcMask b = g;
    // Prefer the smallest partner, deterministically.
    for (ExcMask h = 1; h < g; ++h) {
      if ((h ^ apply_images(wall.images, h)) == a) {
        b = h;
        break;
      }
    }
    int ja = mask_dim(m, a);
    int jb = mask_dim(m, b);
    if (ja + jb != m.spatial_dim() - 2) continue;

    report.eligible = true;
    report.fermion = Excitation{model, a};
    report.partner = Excitation{model, b};
    report.fermion_dim = ja;
    report.twist_dim = 2 * ja;
    report.braid_check = mask_braid(m, b, static_cast<ExcMask>(a ^ b)) == -1;
    report.needs_threaded_puncture = ja >= 1;
  }
  if (!report.eligible) {
    report.reason = found_fermion
                        ? "condensable fermions exist but none satisfies the "
                          "dimension condition dim(a) + dim(b) = D - 2"
                        : "no condensable excitation is a generalised fermion";
  }
  return report;
}

namespace {

ModelPtr make_surface_2d_copies(int copies) {
  std::vector<std::string> names;
  std::vector<int> dims, theta;
  std::size_t k = static_cast<std::size_t>(2 * copies);
  std::vector<std::vector<int>> braid(k, std::vector<int>(k, 1));
  for (int c = 0; c < copies; ++c) {
    std::string suffix = copies == 1 ? "" : std::to_string(c + 1);
    names.push_back("e" + suffix);
    names.push_back("m" + suffix);
    dims.push_back(0);
    dims.push_back(0);
    theta.push_back(1);
    theta.push_back(1);
    braid[2 * c][2 * c + 1] = braid[2 * c + 1][2 * c] = -1;
  }
  auto model = std::make_shared<ExcitationModel>(2, names, dims, theta, braid);
  // Per-copy e <-> m wall.
  WallSpec hadamard;
  hadamard.name = "hadamard";
  hadamard.wall_dim = 1;
  for (int c = 0; c < copies; ++c) {
    hadamard.images.push_back(ExcMask{1} << (2 * c + 1));
    hadamard.images.push_back(ExcMask{1} << (2 * c));
  }
  model->add_wall(hadamard);
  if (copies >= 2) {
    // Swap of the first two copies: e1<->e2, m1<->m2 (condenses bosons only).
    WallSpec swap;
    swap.name = "swap_copies";
    swap.wall_dim = 1;
    for (std::size_t i = 0; i < k; ++i) swap.images.push_back(ExcMask{1} << i);
    swap.images[0] = ExcMask{1} << 2;
    swap.images[2] = ExcMask{1} << 0;
    swap.images[1] = ExcMask{1} << 3;
    swap.images[3] = ExcMask{1} << 1;
    model->add_wall(swap);
  }
  return model;
}

}  // namespace

ModelPtr selfdual_model(int two_k) {
  if (two_k < 2 || two_k % 2 != 0) {
    throw std::invalid_argument("selfdual_model: dimension must be even and >= 2");
  }
  int j = two_k / 2 - 1;
  auto model = std::make_shared<ExcitationModel>(
      two_k, std::vector<std::string>{"e", "m"}, std::vector<int>{j, j},
      std::vector<int>{1, 1},
      std::vector<std::vector<int>>{{1, -1}, {-1, 1}});
  model->add_wall(WallSpec{"hadamard", {ExcMask{2}, ExcMask{1}}, two_k - 1});
  return model;
}

ModelPtr builtin_model(std::string_view name) {
  if (name == "surface_2d") return make_surface_2d_copies(1);
  if (name == "surface_2d_2copy") return make_surface_2d_copies(2);
  if (name == "surface_2d_3copy") return make_surface_2d_copies(3);
  if (name == "surface_3d") {
    return std::make_shared<ExcitationModel>(
        3, std::vector<std::string>{"e", "m"}, std::vector<int>{0, 1},
        std::vector<int>{1, 1},
        std::vector<std::vector<int>>{{1, -1}, {-1, 1}});
  }
  if (name == "levin_wen_3d") {
    auto model = std::make_shared<ExcitationModel>(
        3, std::vector<std::string>{"e", "m"}, std::vector<int>{0, 1},
        std::vector<int>{-1, 1},
        std::vector<std::vector<int>>{{1, -1}, {-1, 1}});
    // Wall terminating at point twists: m gains a fermion on crossing, so
    // the composite e = m + phi(m) condenses there.
    model->add_wall(WallSpec{"attach_fermion", {ExcMask{1}, ExcMask{3}}, 1});
    return model;
  }
  if (name == "surface_4d_selfdual") return selfdual_model(4);
  if (name == "surface_3d_3copy") {
    std::vector<std::string> names;
    std::vector<int> dims, theta;
    std::vector<std::vector<int>> braid(6, std::vector<int>(6, 1));
    for (int c = 0; c < 3; ++c) {
      std::string suffix = std::to_string(c + 1);
      names.push_back("e" + suffix);
      names.push_back("m" + suffix);
      dims.push_back(0);
      dims.push_back(1);
      theta.push_back(1);
      theta.push_back(1);
      braid[2 * c][2 * c + 1] = braid[2 * c + 1][2 * c] = -1;
    }
    auto model = std::make_shared<ExcitationModel>(3, names, dims, theta, braid);
    model->add_label({"s12", 1});
    model->add_label({"s23", 1});
    model->add_label({"s31", 1});
    return model;
  }
  if (name.starts_with("selfdual_surface_")) {
    int dim = std::stoi(std::string(name.substr(17)));
    return selfdual_model(dim);
  }
  throw std::invalid_argument("unknown builtin model '" + std::string(name) + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"surface_2d",      "surface_2d_2copy",    "surface_2d_3copy",
          "surface_3d",      "levin_wen_3d",        "surface_4d_selfdual",
          "surface_3d_3copy"};
}

}  // namespace dk
