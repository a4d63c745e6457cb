// Copyright 2026 The logmonoid Authors.
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace logmonoid {

/// Arithmetic in Z/p for a prime p < 2^16.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);
  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t reduce(std::int64_t a) const noexcept;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n) noexcept;

/// Sparse vector over Z/p, entries sorted by column, no zero entries.
using SparseVec = std::vector<std::pair<std::size_t, std::uint32_t>>;

/// Incremental row echelon form. Rows are kept with distinct leading
/// columns; reduction walks columns in increasing order.
class Echelon {
 public:
  explicit Echelon(PrimeField field) : field_(field) {}

  /// Reduces v against the stored rows; returns the remainder.
  SparseVec reduce(const SparseVec& v) const;
  /// Adds v to the span; returns false if v was already in it.
  bool insert(const SparseVec& v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<SparseVec>& rows() const noexcept { return rows_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  PrimeField field_;
  std::vector<SparseVec> rows_;
  std::map<std::size_t, std::size_t> pivot_;  // leading column -> row
};

Echelon span_of(const PrimeField& f, const std::vector<SparseVec>& vs);
bool same_span(const Echelon& a, const Echelon& b);
bool contains_span(const Echelon& big, const Echelon& small);

/// Basis of the intersection of two subspaces of F_p^dim (Zassenhaus).
std::vector<SparseVec> intersect(const Echelon& a, const Echelon& b, std::size_t dim);

/// Basis of {c : sum_i c_i images[i] = 0}; vectors indexed like images.
std::vector<SparseVec> kernel(const PrimeField& f, const std::vector<SparseVec>& images, std::size_t dim);

}  // namespace logmonoid
