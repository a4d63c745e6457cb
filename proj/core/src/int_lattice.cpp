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

#include "logmonoid/int_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "logmonoid/error.hpp"

namespace logmonoid {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("integer overflow in lattice arithmetic");
  return r;
}

namespace {

// floor division for possibly negative numerators
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void axpy_row(IntVector& dst, const IntVector& src, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = checked_add(dst[i], checked_mul(k, src[i]));
}

}  // namespace

SmithInvariants smith_invariants(IntRows m, std::size_t cols) {
  const std::size_t nrows = m.size();
  std::size_t k = 0;
  std::vector<std::int64_t> diag;
  while (k < nrows && k < cols) {
    // smallest nonzero entry in the trailing block
    std::int64_t best = 0;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = k; i < nrows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
          best = std::llabs(m[i][j]);
          bi = i;
          bj = j;
        }
    if (best == 0) break;
    std::swap(m[k], m[bi]);
    for (auto& row : m) std::swap(row[k], row[bj]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = k + 1; i < nrows; ++i) {
        if (m[i][k] == 0) continue;
        std::int64_t q = floor_div(m[i][k], m[k][k]);
        axpy_row(m[i], m[k], -q);
        if (m[i][k] != 0) {
          std::swap(m[i], m[k]);
          clean = false;
        }
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        std::int64_t q = floor_div(m[k][j], m[k][k]);
        for (std::size_t i = 0; i < nrows; ++i)
          m[i][j] = checked_add(m[i][j], checked_mul(-q, m[i][k]));
        if (m[k][j] != 0) {
          for (auto& row : m) std::swap(row[k], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(std::llabs(m[k][k]));
    ++k;
  }
  // Normalize the diagonal into a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      std::int64_t g = std::gcd(diag[i], diag[j]);
      std::int64_t l = checked_mul(diag[i] / g, diag[j]);
      diag[i] = g;
      diag[j] = l;
    }
  SmithInvariants out;
  out.rank = static_cast<int>(diag.size());
  out.factors = std::move(diag);
  return out;
}

Lattice::Lattice(std::size_t dim, const IntRows& generators) : dim_(dim) {
  IntRows rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw InvalidArgument("lattice generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](std::int64_t x) { return x != 0; })) rows.push_back(g);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    // gcd-eliminate column c among rows r..end
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || std::llabs(rows[i][c]) < std::llabs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        axpy_row(rows[i], rows[r], -(rows[i][c] / rows[r][c]));
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& x : rows[r]) x = -x;
      pivots_.push_back(c);
      ++r;
    }
  }
  rows.resize(r);
  // reduce entries above each pivot into [0, pivot)
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t c = pivots_[i];
    for (std::size_t k = 0; k < i; ++k) {
      std::int64_t q = floor_div(rows[k][c], rows[i][c]);
      axpy_row(rows[k], rows[i], -q);
    }
  }
  basis_ = std::move(rows);
}

IntVector Lattice::reduce(IntVector v) const {
  if (v.size() != dim_) throw InvalidArgument("vector has wrong dimension for lattice");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    std::int64_t q = floor_div(v[c], basis_[i][c]);
    axpy_row(v, basis_[i], -q);
  }
  return v;
}

bool Lattice::contains(const IntVector& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

std::optional<RationalSolution> solve_rational(const std::vector<IntVector>& columns,
                                               const IntVector& rhs) {
  const std::size_t nvars = columns.size();
  const std::size_t neqs = rhs.size();
  std::vector<std::vector<Rational>> a(neqs, std::vector<Rational>(nvars + 1));
  for (std::size_t j = 0; j < nvars; ++j) {
    if (columns[j].size() != neqs) throw InvalidArgument("column height mismatch");
    for (std::size_t i = 0; i < neqs; ++i) a[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < neqs; ++i) a[i][nvars] = rhs[i];

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nvars && r < neqs; ++c) {
    std::size_t p = r;
    while (p < neqs && a[p][c].numerator() == 0) ++p;
    if (p == neqs) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < neqs; ++i) {
      if (i == r || a[i][c].numerator() == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = 0; k <= nvars; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < neqs; ++i)
    if (a[i][nvars].numerator() != 0) return std::nullopt;

  RationalSolution sol;
  sol.particular.assign(nvars, Rational(0));
  for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_col[i]] = a[i][nvars];
  std::vector<bool> is_pivot(nvars, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  for (std::size_t free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> k(nvars, Rational(0));
    k[free] = Rational(1);
    for (std::size_t i = 0; i < r; ++i) k[pivot_col[i]] = -a[i][free];
    sol.kernel.push_back(std::move(k));
  }
  return sol;
}

}  // namespace logmonoid
