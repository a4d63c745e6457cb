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
#include "logmonoid/error.hpp"
#include "logmonoid/series_ring.hpp"

using namespace logmonoid;

namespace {

// x1 x2 = t y over F_2[t]/(t^4); monomials are [t, x1, x2, y]
SeriesRing model() { return SeriesRing::semistable_model(2, 4, 2, {1}, 1, 5); }

Poly mono(Mono m) { return Poly{{std::move(m), 1}}; }

}  // namespace

TEST_CASE("normal forms in the semistable model") {
  const auto R = model();
  CHECK(nf_series(R, mono({0, 1, 1, 0})).terms() == mono({1, 0, 0, 1}));
  CHECK(nf_series(R, mono({0, 1, 0, 0})).terms() == mono({0, 1, 0, 0}));
  CHECK(nf_series(R, mono({0, 2, 2, 0})).terms() == mono({2, 0, 0, 2}));
  CHECK(nf_series(R, mono({0, 4, 4, 0})).is_zero());
  CHECK(R.in_sigma({0, 3, 0, 2}));
  CHECK_FALSE(R.in_sigma({0, 1, 1, 0}));
  CHECK(R.var(0).to_string() == "x1");
}

TEST_CASE("ring axioms at truncation") {
  const auto R = model();
  std::mt19937_64 rng(9);
  const auto basis = R.sigma_basis(2);
  auto random_element = [&] {
    Poly f;
    for (const auto& m : basis)
      if (rng() % 4 == 0) f[m] = 1;
    return R.element(f);
  };
  for (int k = 0; k < 60; ++k) {
    const auto a = random_element(), b = random_element(), c = random_element();
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(sub(a, a).is_zero());
    CHECK(mul(a, R.one()) == a);
  }
}

TEST_CASE("truncation overflow is flagged") {
  const SeriesRing R(2, 4, {"X"}, std::nullopt, 2);
  const auto x = R.var(0);
  CHECK_FALSE(mul(x, x).overflow());
  const auto cube = mul(mul(x, x), x);
  CHECK(cube.overflow());
  CHECK(cube.is_zero());
}

TEST_CASE("relations that cannot terminate are rejected") {
  CHECK_THROWS_AS(SeriesRing(2, 4, {"X", "Y"}, SeriesRing::Relation{{1, 0}, mono({0, 1, 0})}, 3), InvalidArgument);
  CHECK_THROWS_AS(SeriesRing(2, 0, {"X"}, std::nullopt, 3), InvalidArgument);
}

TEST_CASE("ideal identities") {
  const auto R = model();
  const auto ty = R.element(mono({1, 0, 0, 1}));
  const auto meet = ideal_intersect(R, {{R.var(0), ty}, {R.var(1), ty}}, 5);
  std::vector<SeriesElement> meet_elems;
  for (const auto& p : meet) meet_elems.push_back(R.element(p));
  CHECK(ideal_equal(R, {ty}, meet_elems, 5));
  CHECK(ideal_equal(R, {R.one()}, {R.one()}, 5));
  CHECK(ideal_contains(R, {R.var(0)}, R.element(mono({0, 2, 0, 1})), 5));
  CHECK_FALSE(ideal_contains(R, {R.var(0)}, R.var(1), 5));
}

TEST_CASE("products of distinct y variables") {
  const auto R = SeriesRing::semistable_model(2, 4, 2, {1, 1}, 1, 5);
  const auto y1 = R.var(2), y2 = R.var(3);
  const auto meet = ideal_intersect(R, {{y1}, {y2}}, 5);
  std::vector<SeriesElement> elems;
  for (const auto& p : meet) elems.push_back(R.element(p));
  CHECK(ideal_equal(R, {mul(y1, y2)}, elems, 5));
}

TEST_CASE("primary decomposition report") {
  PrimaryDecompConfig c;
  c.l = 2;
  c.n = 1;
  c.a = 1;
  c.B = {1};
  c.I = {1};
  const auto rep = primary_decomp_check(c);
  CHECK(rep.all_passed());
  CHECK(rep.checks.front().name == "(3)");

  c.I = {0};
  CHECK(primary_decomp_check(c).all_passed());

  c.n = 0;
  c.B = {};
  c.I = {};
  const auto bare = primary_decomp_check(c);
  CHECK(bare.all_passed());
  CHECK(bare.checks.size() == 3);

  c.n = 1;
  c.B = {1};
  c.I = {2};
  CHECK_THROWS_AS(primary_decomp_check(c), ParamsOutOfRange);
}

TEST_CASE("regularity") {
  const SeriesRing R(2, 4, {"X"}, SeriesRing::Relation{{2}, mono({1, 0})}, 5);
  CHECK(is_regular(R, R.var(0), 5));
  CHECK_FALSE(is_regular(R, R.zero(), 5));

  const auto S = SeriesRing::unit_rigidity_model(2, 2, 4, 4);
  const auto rep = regularity_report(S, S.t_power(1), 4);
  CHECK(rep.regular);
  CHECK(rep.structural_kernel_dim == 0);
  CHECK(rep.truncation_kernel_dim > 0);
}

TEST_CASE("unit rigidity") {
  const auto R = SeriesRing::unit_rigidity_model(2, 2, 2, 4);
  const auto rep = unit_rigidity_check(R, {R.t_power(1)}, {{1, 0}, {0, 1}}, 4);
  CHECK(rep.only_trivial);
  CHECK(rep.square_zero);
  CHECK(rep.annihilator_claim);
  CHECK(rep.j_dim == 9);
  CHECK(unit_rigidity_check(R, {R.t_power(1)}, {{1, 1}}, 4).only_trivial);

  const auto R3 = SeriesRing::unit_rigidity_model(3, 2, 2, 3);
  CHECK(unit_rigidity_check(R3, {R3.t_power(1)}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3).only_trivial);
}

TEST_CASE("unit product identity") {
  const auto R = SeriesRing::semistable_model(2, 4, 2, {1}, 1, 4);
  const auto one = R.one();
  const auto ok = unit_product_identity(R, {one, one}, {one}, {1}, 4);
  CHECK(ok.regular);
  CHECK(ok.identity_holds);
  CHECK(ok.constraint_holds);

  const auto u = add(R.one(), R.element(mono({1, 0, 1, 0})));
  const auto sample = unit_product_identity(R, {u, R.one()}, {u}, {1}, 4);
  CHECK(sample.identity_holds);

  const auto bad = unit_product_identity(R, {u, R.one()}, {R.one()}, {1}, 4);
  CHECK_FALSE(bad.identity_holds);
  CHECK_FALSE(bad.constraint_holds);
}
