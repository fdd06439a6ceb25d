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

#include "defectkit/tableau.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace dk {

CliffordTableau::CliffordTableau(std::size_t n) : n_(n) {
  x_images_.reserve(n);
  z_images_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x_images_.push_back(PauliOperator::single(n, i, 'X'));
    z_images_.push_back(PauliOperator::single(n, i, 'Z'));
  }
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliOperator> x_images,
                                             std::vector<PauliOperator> z_images) {
  if (x_images.size() != z_images.size()) {
    throw std::invalid_argument("tableau: image count mismatch");
  }
  CliffordTableau t;
  t.n_ = x_images.size();
  t.x_images_ = std::move(x_images);
  t.z_images_ = std::move(z_images);
  for (const auto& p : t.x_images_) {
    if (p.num_qubits() != t.n_) {
      throw std::invalid_argument("tableau: image has wrong qubit count");
    }
  }
  for (const auto& p : t.z_images_) {
    if (p.num_qubits() != t.n_) {
      throw std::invalid_argument("tableau: image has wrong qubit count");
    }
  }
  if (!t.is_symplectic()) {
    throw std::invalid_argument("tableau: images violate symplectic consistency");
  }
  return t;
}

CliffordTableau CliffordTableau::hadamard(std::size_t n, std::size_t q) {
  CliffordTableau t(n);
  t.x_images_[q] = PauliOperator::single(n, q, 'Z');
  t.z_images_[q] = PauliOperator::single(n, q, 'X');
  return t;
}

CliffordTableau CliffordTableau::phase_gate(std::size_t n, std::size_t q) {
  CliffordTableau t(n);
  t.x_images_[q] = PauliOperator::single(n, q, 'Y');
  return t;
}

CliffordTableau CliffordTableau::cnot(std::size_t n, std::size_t control,
                                      std::size_t target) {
  if (control == target) {
    throw std::invalid_argument("cnot: control equals target");
  }
  CliffordTableau t(n);
  t.x_images_[control] = multiply(PauliOperator::single(n, control, 'X'),
                                  PauliOperator::single(n, target, 'X'));
  t.z_images_[target] = multiply(PauliOperator::single(n, control, 'Z'),
                                 PauliOperator::single(n, target, 'Z'));
  return t;
}

CliffordTableau CliffordTableau::cz(std::size_t n, std::size_t a, std::size_t b) {
  if (a == b) {
    throw std::invalid_argument("cz: identical qubits");
  }
  CliffordTableau t(n);
  t.x_images_[a] = multiply(PauliOperator::single(n, a, 'X'),
                            PauliOperator::single(n, b, 'Z'));
  t.x_images_[b] = multiply(PauliOperator::single(n, a, 'Z'),
                            PauliOperator::single(n, b, 'X'));
  return t;
}

CliffordTableau CliffordTableau::pauli_conjugation(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  CliffordTableau t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!commutes(t.x_images_[i], p)) {
      t.x_images_[i].set_phase(t.x_images_[i].phase() + 2);
    }
    if (!commutes(t.z_images_[i], p)) {
      t.z_images_[i].set_phase(t.z_images_[i].phase() + 2);
    }
  }
  return t;
}

bool CliffordTableau::is_symplectic() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (x_images_[i].phase() % 2 != 0 || z_images_[i].phase() % 2 != 0) {
      return false;  // images must be Hermitian
    }
    if (commutes(x_images_[i], z_images_[i])) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!commutes(x_images_[i], x_images_[j])) return false;
      if (!commutes(z_images_[i], z_images_[j])) return false;
      if (!commutes(x_images_[i], z_images_[j])) return false;
      if (!commutes(z_images_[i], x_images_[j])) return false;
    }
  }
  return true;
}

std::string CliffordTableau::key(bool with_phases) const {
  std::string out;
  for (std::size_t i = 0; i < n_; ++i) {
    std::string xs = x_images_[i].str();
    std::string zs = z_images_[i].str();
    if (!with_phases) {
      xs = xs.substr(xs.find_first_of("IXYZ"));
      zs = zs.substr(zs.find_first_of("IXYZ"));
    }
    out += xs;
    out.push_back('|');
    out += zs;
    out.push_back(';');
  }
  return out;
}

PauliOperator conjugate(const CliffordTableau& t, const PauliOperator& p) {
  if (t.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument("conjugate: qubit count mismatch");
  }
  PauliOperator result = PauliOperator::identity(p.num_qubits());
  result.set_phase(p.phase());
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    bool x = p.x_bit(q);
    bool z = p.z_bit(q);
    if (x) result = multiply(result, t.x_image(q));
    if (z) result = multiply(result, t.z_image(q));
    if (x && z) {
      // Y = iXZ: the stored phase counted this Y as neutral, but the images
      // were multiplied as X then Z, so reinstate the i.
      result.set_phase(result.phase() + 1);
    }
  }
  return result;
}

CliffordTableau compose(const CliffordTableau& t1, const CliffordTableau& t2) {
  if (t1.num_qubits() != t2.num_qubits()) {
    throw std::invalid_argument("compose: qubit count mismatch");
  }
  std::size_t n = t1.num_qubits();
  std::vector<PauliOperator> xs;
  std::vector<PauliOperator> zs;
  xs.reserve(n);
  zs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(conjugate(t2, t1.x_image(i)));
    zs.push_back(conjugate(t2, t1.z_image(i)));
  }
  return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

bool equals_up_to_phase(const CliffordTableau& t1, const CliffordTableau& t2) {
  if (t1.num_qubits() != t2.num_qubits()) {
    throw std::invalid_argument("equals_up_to_phase: qubit count mismatch");
  }
  for (std::size_t i = 0; i < t1.num_qubits(); ++i) {
    if (!t1.x_image(i).same_letters(t2.x_image(i))) return false;
    if (!t1.z_image(i).same_letters(t2.z_image(i))) return false;
  }
  return true;
}

bool is_identity(const CliffordTableau& t) {
  return t == CliffordTableau::identity(t.num_qubits());
}

GroupReport generate_group(std::span<const CliffordTableau> generators,
                           std::size_t bound, GroupPhaseMode mode) {
  if (generators.empty()) {
    throw std::invalid_argument("generate_group: no generators");
  }
  std::size_t n = generators[0].num_qubits();
  for (const auto& g : generators) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("generate_group: mixed qubit counts");
    }
  }
  bool with_phases = mode == GroupPhaseMode::tableau_exact;

  GroupReport report;
  report.bound = bound;
  std::unordered_set<std::string> seen;
  std::deque<CliffordTableau> frontier;

  CliffordTableau id = CliffordTableau::identity(n);
  seen.insert(id.key(with_phases));
  report.elements.push_back(id);
  frontier.push_back(id);

  while (!frontier.empty()) {
    CliffordTableau current = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      CliffordTableau next = compose(current, g);
      if (seen.insert(next.key(with_phases)).second) {
        if (report.elements.size() >= bound) {
          report.truncated = true;
          report.order = report.elements.size();
          return report;
        }
        report.elements.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  report.closed = true;
  report.order = report.elements.size();
  return report;
}

}  // namespace dk
