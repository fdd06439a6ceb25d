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

#include "defectkit/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dk {

namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

bool get_bit(std::span<const std::uint64_t> v, std::size_t i) {
  return (v[i / 64] >> (i % 64)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& v, std::size_t i) {
  v[i / 64] ^= std::uint64_t{1} << (i % 64);
}

void xor_into(std::vector<std::uint64_t>& a, std::span<const std::uint64_t> b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] ^= b[i];
}

std::optional<std::size_t> lowest_set(std::span<const std::uint64_t> v) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (v[w] != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
    }
  }
  return std::nullopt;
}

std::vector<std::size_t> combo_indices(std::span<const std::uint64_t> combo) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < combo.size(); ++w) {
    std::uint64_t word = combo[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

}  // namespace

Gf2Echelon::Gf2Echelon(std::size_t cols)
    : cols_(cols), words_(word_count(cols)) {}

bool Gf2Echelon::add_row(std::vector<std::uint64_t> row) {
  if (row.size() != words_) {
    throw std::invalid_argument("Gf2Echelon::add_row: wrong row width");
  }
  std::size_t index = added_++;
  std::vector<std::uint64_t> combo(word_count(added_), 0);
  set_bit(combo, index);
  for (const Row& r : rows_) {
    if (get_bit(row, r.pivot)) {
      xor_into(row, r.bits);
      xor_into(combo, r.combo);
    }
  }
  auto pivot = lowest_set(row);
  if (!pivot) {
    return false;
  }
  Row entry{std::move(row), std::move(combo), *pivot};
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), entry.pivot,
      [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(entry));
  return true;
}

std::vector<std::size_t> Gf2Echelon::reduce(std::vector<std::uint64_t>& v) const {
  if (v.size() != words_) {
    throw std::invalid_argument("Gf2Echelon::reduce: wrong row width");
  }
  std::vector<std::uint64_t> combo;
  for (const Row& r : rows_) {
    if (get_bit(v, r.pivot)) {
      xor_into(v, r.bits);
      xor_into(combo, r.combo);
    }
  }
  return combo_indices(combo);
}

std::optional<std::vector<std::size_t>> Gf2Echelon::decompose(
    std::vector<std::uint64_t> v) const {
  auto combo = reduce(v);
  if (lowest_set(v)) {
    return std::nullopt;
  }
  return combo;
}

bool Gf2Echelon::contains(std::vector<std::uint64_t> v) const {
  reduce(v);
  return !lowest_set(v).has_value();
}

std::vector<std::uint64_t> symplectic_row(const PauliOperator& p) {
  std::size_t n = p.num_qubits();
  std::vector<std::uint64_t> row(word_count(2 * n), 0);
  for (std::size_t q = 0; q < n; ++q) {
    if (p.x_bit(q)) set_bit(row, q);
    if (p.z_bit(q)) set_bit(row, n + q);
  }
  return row;
}

PauliSpan::PauliSpan(std::size_t n, std::span<const PauliOperator> gens)
    : ech_(2 * n) {
  for (const auto& g : gens) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("PauliSpan: generator qubit count mismatch");
    }
    ech_.add_row(symplectic_row(g));
  }
}

bool PauliSpan::contains(const PauliOperator& p) const {
  return ech_.contains(symplectic_row(p));
}

std::optional<std::vector<std::size_t>> PauliSpan::decompose(
    const PauliOperator& p) const {
  return ech_.decompose(symplectic_row(p));
}

std::size_t symplectic_rank(std::size_t n, std::span<const PauliOperator> ops) {
  return PauliSpan(n, ops).rank();
}

std::vector<PauliOperator> centraliser_basis(std::size_t n,
                                             std::span<const PauliOperator> gens) {
  // p commutes with g iff g.z . p.x + g.x . p.z = 0; build the constraint
  // matrix with columns ordered [x | z] and find its kernel.
  std::size_t cols = 2 * n;
  std::size_t words = word_count(cols);
  std::vector<std::vector<std::uint64_t>> matrix;
  matrix.reserve(gens.size());
  for (const auto& g : gens) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("centraliser_basis: qubit count mismatch");
    }
    std::vector<std::uint64_t> row(words, 0);
    for (std::size_t q = 0; q < n; ++q) {
      if (g.z_bit(q)) set_bit(row, q);
      if (g.x_bit(q)) set_bit(row, n + q);
    }
    matrix.push_back(std::move(row));
  }

  // Reduced row-echelon form.
  std::vector<std::size_t> pivot_cols;
  std::size_t row_idx = 0;
  for (std::size_t col = 0; col < cols && row_idx < matrix.size(); ++col) {
    std::size_t sel = row_idx;
    while (sel < matrix.size() && !get_bit(matrix[sel], col)) ++sel;
    if (sel == matrix.size()) continue;
    std::swap(matrix[row_idx], matrix[sel]);
    for (std::size_t r = 0; r < matrix.size(); ++r) {
      if (r != row_idx && get_bit(matrix[r], col)) {
        xor_into(matrix[r], matrix[row_idx]);
      }
    }
    pivot_cols.push_back(col);
    ++row_idx;
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<PauliOperator> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint64_t> vec(words, 0);
    set_bit(vec, free_col);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
      if (get_bit(matrix[r], free_col)) {
        set_bit(vec, pivot_cols[r]);
      }
    }
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; ++q) {
      if (get_bit(vec, q)) p.set_x(q, true);
      if (get_bit(vec, n + q)) p.set_z(q, true);
    }
    basis.push_back(std::move(p));
  }
  return basis;
}

std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_pairs(
    std::vector<PauliOperator> pool) {
  std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
  while (!pool.empty()) {
    PauliOperator v = pool.front();
    pool.erase(pool.begin());
    std::size_t partner = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!commutes(v, pool[i])) {
        partner = i;
        break;
      }
    }
    if (partner == pool.size()) {
      throw std::runtime_error(
          "symplectic_pairs: element commutes with the whole pool "
          "(inconsistent logical complement)");
    }
    PauliOperator w = pool[partner];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
    for (auto& u : pool) {
      bool hit_v = !commutes(u, v);
      bool hit_w = !commutes(u, w);
      if (hit_w) u = multiply(u, v);
      if (hit_v) u = multiply(u, w);
      u.set_phase(0);
    }
    v.set_phase(0);
    w.set_phase(0);
    pairs.emplace_back(std::move(v), std::move(w));
  }
  return pairs;
}

}  // namespace dk
