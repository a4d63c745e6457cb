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

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace logmonoid {

using IntVector = std::vector<std::int64_t>;
using IntRows = std::vector<IntVector>;

/// Invariant factors of the abelian group Z^cols / <rows>.
struct SmithInvariants {
  int rank = 0;                        // rank of the row lattice
  std::vector<std::int64_t> factors;   // nonzero diagonal, each divides the next
};

/// Diagonalizes an integer matrix with unimodular row and column operations.
SmithInvariants smith_invariants(IntRows rows, std::size_t cols);

/// A sublattice of Z^n held in row Hermite normal form. `reduce` returns the
/// canonical representative of the coset v + L, so two vectors are congruent
/// modulo L exactly when their reductions coincide.
class Lattice {
 public:
  Lattice(std::size_t dim, const IntRows& generators);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const IntRows& basis() const noexcept { return basis_; }

  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;

 private:
  std::size_t dim_;
  IntRows basis_;
  std::vector<std::size_t> pivots_;
};

using Rational = boost::rational<std::int64_t>;

/// Solution set {particular + span(kernel)} of A x = b over Q.
struct RationalSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

/// Solves A x = b over the rationals; `columns[j]` is column j of A.
std::optional<RationalSolution> solve_rational(const std::vector<IntVector>& columns,
                                               const IntVector& rhs);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace logmonoid
