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
#include <set>

#include "doctest.h"
#include "logmonoid/error.hpp"
#include "logmonoid/monoid.hpp"
#include "logmonoid/series_ring.hpp"
#include "support/oracles.hpp"

using namespace logmonoid;

namespace {

struct RandomPresentation {
  MonoidPresentation monoid;
  std::vector<oracle::Rel> relations;
};

RandomPresentation random_homogeneous(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 3;
  std::vector<Relation> rels;
  std::vector<oracle::Rel> orels;
  const int count = static_cast<int>(rng() % 3);
  for (int k = 0; k < count; ++k) {
    const int deg = 1 + static_cast<int>(rng() % 3);
    Word l(n, 0), r(n, 0);
    for (int s = 0; s < deg; ++s) ++l[rng() % n];
    for (int s = 0; s < deg; ++s) ++r[rng() % n];
    if (l == r) continue;
    rels.push_back({l, r});
    orels.emplace_back(l, r);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  return {MonoidPresentation(names, rels), orels};
}

}  // namespace

TEST_CASE("normal forms are idempotent and compatible with addition") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [P, rels] = random_homogeneous(rng);
    const auto words = words_up_to_degree(P.rank(), 2);
    CAPTURE(trial);
    for (const auto& a : words) {
      const Word na = P.normal_form(a);
      CHECK(P.normal_form(na) == na);
      CHECK(degree(na) == degree(a));
      for (const auto& c : words) CHECK(P.normal_form(add(na, c)) == P.normal_form(add(a, c)));
    }
  }
}

TEST_CASE("class counts match the congruence oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [P, rels] = random_homogeneous(rng);
    const int d = 3;
    std::set<std::set<oracle::Vec>> classes;
    for (const auto& w : oracle::exponent_vectors(P.rank(), d)) classes.insert(oracle::congruence_class(rels, w, d));
    CAPTURE(trial);
    CHECK(P.classes_up_to(d).size() == classes.size());
  }
}

TEST_CASE("cokernels match determinantal divisors on random homomorphisms") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto [P, rels] = random_homogeneous(rng);
    const std::size_t q = rng() % 3;
    std::vector<std::string> names;
    std::vector<Word> images;
    for (std::size_t i = 0; i < q; ++i) {
      names.push_back("q" + std::to_string(i));
      Word w(P.rank(), 0);
      for (auto& x : w) x = static_cast<int>(rng() % 3);
      images.push_back(w);
    }
    const MonoidHom h(MonoidPresentation::free(names), P, images);
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& [l, r] : rels) {
      std::vector<std::int64_t> row(P.rank());
      for (std::size_t i = 0; i < P.rank(); ++i) row[i] = l[i] - r[i];
      rows.push_back(row);
    }
    for (const auto& w : images) rows.emplace_back(w.begin(), w.end());
    const auto ref = oracle::cokernel_shape(rows, P.rank());
    const auto lib = cokernel(h);
    CAPTURE(trial);
    CHECK(lib.rank == ref.rank);
    CHECK(lib.torsion_divisors == ref.torsion);
  }
}

TEST_CASE("the unit rigidity oracle sees solutions once supports overlap") {
  // X1 X2 (t f) = t^2 f = 0, so overlapping supports (1,1) impose nothing.
  const std::vector<Word> overlap{{1, 1}, {1, 1}};
  const auto ref = oracle::unit_rigidity_count(2, 4, overlap);
  CHECK(ref.solution_dim == ref.j_dim);
  CHECK(ref.enumerated);
  CHECK(ref.enumerated_solutions == (std::uint64_t{1} << ref.j_dim));
  const auto R = SeriesRing::unit_rigidity_model(2, 2, 2, 4);
  CHECK_THROWS_AS(unit_rigidity_report(R, {R.t_power(1)}, overlap, 4), InvalidArgument);
}

TEST_CASE("unit rigidity solution spaces agree with the oracle") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      const auto R = SeriesRing::unit_rigidity_model(n, 2, 2, d);
      std::vector<std::vector<Word>> layouts;
      layouts.push_back({Word(static_cast<std::size_t>(n), 1)});
      if (n >= 2) {
        Word rest(static_cast<std::size_t>(n), 1);
        rest[0] = 0;
        layouts.push_back({unit_vector(static_cast<std::size_t>(n), 0), rest});
      }
      for (const auto& sup : layouts) {
        const auto lib = unit_rigidity_report(R, {R.t_power(1)}, sup, d);
        const auto ref = oracle::unit_rigidity_count(n, d, sup);
        CAPTURE(n);
        CAPTURE(d);
        CHECK(lib.j_dim == ref.j_dim);
        CHECK(lib.solution_dim == ref.solution_dim);
      }
    }
}

TEST_CASE("the monoid-ideal oracle separates distinct ideals") {
  const oracle::SemistableMonoid M(2, 1, {1}, 12);
  const auto x1 = M.ideal({M.unit(M.x(0))});
  const auto x2 = M.ideal({M.unit(M.x(1))});
  CHECK(x1 != x2);
  // x1 + x2 = t + y, so (t + y) lies in both
  oracle::Vec ty = M.unit(0);
  ty[M.y(0)] = 1;
  CHECK(x1.count(ty));
  CHECK(x2.count(ty));
  CHECK_FALSE(M.complement_closed(M.ideal({M.unit(M.y(0), 2)})));
  const auto ids = oracle::primary_identities(2, 1, 1, {1}, {1});
  for (const auto& [name, ok] : ids) CHECK(ok);
}

TEST_CASE("the series oracle notices a wrong normal form") {
  oracle::SeriesConfig c;
  c.n = 2;
  c.d = 3;
  c.T = {1, 1};
  c.G = {{1, {0, 0}}};
  const auto audit = oracle::audit_series(c);
  CHECK(audit.quotient_dim == audit.sigma.size());
  CHECK(audit.sigma_independent);
  oracle::Bits wrong(audit.box.size());
  wrong.flip(audit.index.at({0, 1, 1}));
  wrong.flip(audit.index.at({2, 0, 0}));
  CHECK_FALSE(audit.ideal.contains(wrong));
  oracle::Bits right(audit.box.size());
  right.flip(audit.index.at({0, 1, 1}));
  right.flip(audit.index.at({1, 0, 0}));
  CHECK(audit.ideal.contains(right));
}
