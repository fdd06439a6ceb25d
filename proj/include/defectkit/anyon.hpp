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

#ifndef DEFECTKIT_ANYON_HPP
#define DEFECTKIT_ANYON_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace dk {

/// Subset of generators, one bit per generator index.
using ExcMask = std::uint32_t;

/// Raw domain-wall data: a group automorphism given by generator images.
struct WallSpec {
  std::string name;
  std::vector<ExcMask> images;  // images[i] = image of generator i
  int wall_dim = 1;
};

/// A named non-eigenstate excitation.  These arise as boundaries of
/// non-Pauli locality-preserving operators; the bilinear Z2 data below
/// cannot house their statistics, so they are carried as labels only.
struct NamedExcitationLabel {
  std::string name;
  int dim = 1;
};

/// An abelian Z2^k excitation algebra in D spatial dimensions: per-generator
/// spatial dimensions, self-exchange statistics, and the mutual braiding
/// form, plus the domain walls the model declares.
class ExcitationModel {
 public:
  ExcitationModel(int spatial_dim, std::vector<std::string> names,
                  std::vector<int> gen_dims, std::vector<int> theta_gen,
                  std::vector<std::vector<int>> braiding);

  int spatial_dim() const { return spatial_dim_; }
  std::size_t generator_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int generator_dim(std::size_t i) const { return gen_dims_[i]; }
  /// +1 or -1.
  int generator_theta(std::size_t i) const { return theta_[i] ? -1 : 1; }
  /// +1 or -1.
  int braiding(std::size_t i, std::size_t j) const { return b_[i][j] ? -1 : 1; }

  std::optional<std::size_t> generator_index(std::string_view name) const;

  void add_wall(WallSpec spec) { walls_.push_back(std::move(spec)); }
  const std::vector<WallSpec>& wall_specs() const { return walls_; }

  void add_label(NamedExcitationLabel label) { labels_.push_back(std::move(label)); }
  const std::vector<NamedExcitationLabel>& labels() const { return labels_; }

  ExcMask full_mask() const { return (ExcMask{1} << names_.size()) - 1; }

  std::string describe_mask(ExcMask mask) const;  // e.g. "em", "1" for vacuum
  std::optional<ExcMask> parse_excitation(std::string_view text) const;

 private:
  int spatial_dim_;
  std::vector<std::string> names_;
  std::vector<int> gen_dims_;
  std::vector<bool> theta_;               // true = -1
  std::vector<std::vector<bool>> b_;      // true = -1
  std::vector<WallSpec> walls_;
  std::vector<NamedExcitationLabel> labels_;
};

using ModelPtr = std::shared_ptr<const ExcitationModel>;

/// An element of the excitation group of a model.
struct Excitation {
  ModelPtr model;
  ExcMask bits = 0;

  bool is_vacuum() const { return bits == 0; }
  bool operator==(const Excitation& other) const {
    return model == other.model && bits == other.bits;
  }
};

/// A domain wall of a model, validated at construction.
struct DomainWall {
  ModelPtr model;
  std::vector<ExcMask> images;
  int wall_dim = 1;
  std::string name;
};

Excitation make_excitation(ModelPtr model, std::string_view names_text);
Excitation vacuum(ModelPtr model);

/// Bitwise fusion (Z2 group law).
Excitation fuse(const Excitation& a, const Excitation& b);
/// Self-exchange statistic in {+1, -1}, extended from generator data by
/// theta(g + h) = theta(g) theta(h) B(g, h).
int statistics(const Excitation& a);
/// Full monodromy phase in {+1, -1}, the bilinear extension of B.
int braid_phase(const Excitation& a, const Excitation& b);
/// Spatial dimension of an excitation: the largest constituent generator
/// dimension (-1 for the vacuum).
int dimension(const Excitation& a);
bool is_generalised_fermion(const Excitation& a);

DomainWall make_wall(ModelPtr model, const WallSpec& spec);
DomainWall identity_wall(ModelPtr model);
/// Looks up a wall declared by the model.
DomainWall get_wall(ModelPtr model, std::string_view name);

Excitation wall_apply(const DomainWall& w, const Excitation& a);
/// The subgroup { g + phi(g) } of excitations condensing at a twist
/// terminating the wall.
std::vector<Excitation> condensable_at_twist(const DomainWall& w);

struct ModelReport {
  bool ok = true;
  std::string message;
};
ModelReport validate_model(const ExcitationModel& model);

struct WallReport {
  bool ok = true;
  std::string message;
};
WallReport validate_wall(ModelPtr model, const WallSpec& spec);

struct EligibilityReport {
  bool eligible = false;
  std::string reason;
  std::optional<Excitation> fermion;   // a, condensable with theta = -1
  std::optional<Excitation> partner;   // b with phi(b) = a + b
  int fermion_dim = -1;                // j
  int twist_dim = -1;                  // 2j
  bool braid_check = false;            // braid_phase(b, a+b) == -1
  bool needs_threaded_puncture = false;
};

/// Decides whether the wall supports a Clifford-by-braiding twist scheme:
/// some condensable excitation must be a generalised fermion, with the
/// dimension bookkeeping that makes the four-twist construction valid.
EligibilityReport clifford_eligibility(ModelPtr model, const DomainWall& wall);

/// Built-in model library.  Known names: surface_2d, surface_2d_2copy,
/// surface_2d_3copy, surface_3d, levin_wen_3d, surface_4d_selfdual,
/// surface_3d_3copy, selfdual_surface_<2k>.
ModelPtr builtin_model(std::string_view name);
std::vector<std::string> builtin_model_names();
/// Self-dual surface-code family in 2k dimensions, (k-1)-dimensional e and m.
ModelPtr selfdual_model(int two_k);

}  // namespace dk

#endif  // DEFECTKIT_ANYON_HPP
