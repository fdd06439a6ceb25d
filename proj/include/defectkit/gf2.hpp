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

#ifndef DEFECTKIT_GF2_HPP
#define DEFECTKIT_GF2_HPP

#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "defectkit/pauli.hpp"

namespace dk {

/// Incremental row-echelon form over GF(2) with combination tracking.
class Gf2Echelon {
 public:
  explicit Gf2Echelon(std::size_t cols);

  /// Returns true if the row was independent of previous rows.  Every call
  /// consumes one "original index" (independent or not) for combinations.
  bool add_row(std::vector<std::uint64_t> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Reduces v against the echelon.  Returns the set of original row indices
  /// whose sum was subtracted.  v is modified in place.
  std::vector<std::size_t> reduce(std::vector<std::uint64_t>& v) const;

  /// Original row indices expressing v as a sum of added rows, if v is in
  /// the span.
  std::optional<std::vector<std::size_t>> decompose(std::vector<std::uint64_t> v) const;

  bool contains(std::vector<std::uint64_t> v) const;

 private:
  struct Row {
    std::vector<std::uint64_t> bits;
    std::vector<std::uint64_t> combo;
    std::size_t pivot;
  };
  std::size_t cols_;
  std::size_t words_;
  std::size_t added_ = 0;
  std::vector<Row> rows_;  // sorted by pivot
};

/// The 2n-bit symplectic row [x | z] of a Pauli operator.
std::vector<std::uint64_t> symplectic_row(const PauliOperator& p);

/// GF(2) span of the (x, z) vectors of a generator list.
class PauliSpan {
 public:
  PauliSpan(std::size_t n, std::span<const PauliOperator> gens);

  std::size_t rank() const { return ech_.rank(); }
  bool contains(const PauliOperator& p) const;
  /// Indices into the generator list whose product matches p up to phase.
  std::optional<std::vector<std::size_t>> decompose(const PauliOperator& p) const;

 private:
  Gf2Echelon ech_;
};

std::size_t symplectic_rank(std::size_t n, std::span<const PauliOperator> ops);

/// Phase-0 Pauli basis of the group of operators commuting with every
/// generator (the centraliser of the generated group in the Pauli group).
std::vector<PauliOperator> centraliser_basis(std::size_t n,
                                             std::span<const PauliOperator> gens);

/// Pairs a pool of independent logical representatives into anticommuting
/// (X, Z) pairs by symplectic Gram-Schmidt.  Deterministic given input order.
/// All returned representatives are normalised to phase 0.
std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_pairs(
    std::vector<PauliOperator> pool);

}  // namespace dk

#endif  // DEFECTKIT_GF2_HPP
