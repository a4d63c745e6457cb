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


#include <random>

#include "doctest.h"
#include "logmonoid/int_lattice.hpp"
#include "logmonoid/modp_linalg.hpp"
#include "logmonoid/word.hpp"
#include "support/oracles.hpp"

using namespace logmonoid;

TEST_CASE("word arithmetic") {
  const Word a{1, 0, 2}, b{0, 3, 1};
  CHECK(degree(a) == 3);
  CHECK(add(a, b) == Word{1, 3, 3});
  CHECK(scale(a, 2) == Word{2, 0, 4});
  CHECK(divides(Word{1, 0, 1}, a));
  CHECK_FALSE(divides(b, a));
  CHECK(subtract(a, Word{1, 0, 1}) == Word{0, 0, 1});
  CHECK(meet(a, b) == Word{0, 0, 1});
  CHECK(join(a, b) == Word{1, 3, 2});
  CHECK(unit_vector(3, 1) == Word{0, 1, 0});
  CHECK(is_zero(Word{0, 0}));
}

TEST_CASE("word enumeration counts match binomials") {
  CHECK(words_of_degree(3, 2).size() == 6);
  CHECK(words_up_to_degree(3, 2).size() == 10);
  CHECK(words_up_to_degree(2, 4).size() == oracle::exponent_vectors(2, 4).size());
  CHECK(words_in_box(2, 2).size() == 9);
}

TEST_CASE("smith invariants agree with determinantal divisors") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-4, 4), shape(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(shape(rng)), cols = static_cast<std::size_t>(shape(rng));
    IntRows m(rows, IntVector(cols));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    const auto lib = smith_invariants(m, cols);
    const auto ref = oracle::cokernel_shape(m, cols);
    std::vector<std::int64_t> lib_torsion;
    for (auto f : lib.factors)
      if (f > 1) lib_torsion.push_back(f);
    CAPTURE(trial);
    CHECK(static_cast<int>(cols) - lib.rank == ref.rank);
    CHECK(lib_torsion == ref.torsion);
    for (std::size_t k = 1; k < lib.factors.size(); ++k) CHECK(lib.factors[k] % lib.factors[k - 1] == 0);
  }
}

TEST_CASE("smith invariants of the u-monoid relation") {
  const auto s = smith_invariants({{2, -2}}, 2);
  CHECK(s.rank == 1);
  CHECK(s.factors == std::vector<std::int64_t>{2});
}

TEST_CASE("lattice membership") {
  const Lattice L(3, {{2, 0, 0}, {0, 1, 1}});
  CHECK(L.rank() == 2);
  CHECK(L.contains({4, 3, 3}));
  CHECK_FALSE(L.contains({1, 0, 0}));
  CHECK_FALSE(L.contains({0, 1, 0}));
  CHECK(L.reduce({2, 1, 1}) == IntVector{0, 0, 0});
}

TEST_CASE("rational solve") {
  const auto sol = solve_rational({{1, 0}, {1, 1}}, {3, 1});
  REQUIRE(sol.has_value());
  CHECK(sol->particular[0].numerator() == 2);
  CHECK(sol->particular[1].numerator() == 1);
  CHECK(sol->kernel.empty());
  CHECK_FALSE(solve_rational({{1, 1}}, {1, 2}).has_value());
}

TEST_CASE("checked arithmetic overflows loudly") {
  CHECK(checked_mul(1 << 20, 1 << 20) == (std::int64_t{1} << 40));
  CHECK_THROWS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40));
  CHECK_THROWS(checked_add(INT64_MAX, 1));
}

TEST_CASE("prime field") {
  const PrimeField F(7);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.pow(3, 6) == 1);
  CHECK(F.reduce(-1) == 6);
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK_THROWS(PrimeField(6));
}

TEST_CASE("F_2 kernels agree with the bitset oracle") {
  std::mt19937_64 rng(5);
  const PrimeField F(2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 1 + rng() % 12, cols = 1 + rng() % 12;
    std::vector<SparseVec> images;
    std::vector<oracle::Bits> bits;
    for (std::size_t c = 0; c < cols; ++c) {
      SparseVec v;
      oracle::Bits b(dim);
      for (std::size_t i = 0; i < dim; ++i)
        if (rng() % 3 == 0) {
          v.emplace_back(i, 1);
          b.set(i);
        }
      images.push_back(v);
      bits.push_back(b);
    }
    CAPTURE(trial);
    CHECK(kernel(F, images, dim).size() == oracle::kernel_dim(bits, dim));
    CHECK(span_of(F, images).rank() == cols - oracle::kernel_dim(bits, dim));
  }
}

TEST_CASE("echelon spans") {
  const PrimeField F(3);
  Echelon a(F);
  CHECK(a.insert({{0, 1}, {1, 2}}));
  CHECK_FALSE(a.insert({{0, 2}, {1, 1}}));
  CHECK(a.contains({{0, 1}, {1, 2}}));
  Echelon b = span_of(F, {{{0, 1}, {1, 2}}, {{2, 1}}});
  CHECK(contains_span(b, a));
  CHECK_FALSE(same_span(a, b));
  const auto meet = intersect(a, b, 3);
  CHECK(meet.size() == 1);
}
