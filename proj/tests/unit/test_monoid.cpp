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
#include "logmonoid/monoid.hpp"
#include "support/oracles.hpp"

using namespace logmonoid;

namespace {

MonoidPresentation x1x2t() { return MonoidPresentation({"x1", "x2", "t"}, {{{1, 1, 0}, {0, 0, 1}}}); }
MonoidPresentation u_monoid() { return MonoidPresentation({"u1", "u2"}, {{{2, 0}, {0, 2}}}); }

}  // namespace

TEST_CASE("normal forms") {
  const auto P = x1x2t();
  CHECK(P.normal_form({1, 1, 0}) == Word{0, 0, 1});
  CHECK(P.normal_form(P.normal_form({2, 1, 0})) == P.normal_form({2, 1, 0}));
  const auto N2 = MonoidPresentation::free({"a", "b"});
  CHECK(N2.normal_form({3, 5}) == Word{3, 5});
  CHECK(u_monoid().normal_form({0, 2}) == Word{2, 0});
  CHECK(u_monoid().completed());
}

TEST_CASE("equality") {
  const auto P = x1x2t();
  CHECK(P.equals({1, 1, 0}, {0, 0, 1}) == Tri::True);
  CHECK(P.equals(P.zero(), P.zero()) == Tri::True);
  CHECK(P.equals({1, 0, 0}, {0, 1, 0}) == Tri::False);
  const MonoidElement a(P, {1, 0, 0}), b(P, {0, 1, 0}), t(P, {0, 0, 1});
  CHECK(equals(a + b, t) == Tri::True);
  CHECK_THROWS_AS(equals(a, MonoidElement(u_monoid(), {1, 0})), ParentMismatch);
}

TEST_CASE("sharpness") {
  CHECK(is_sharp(MonoidPresentation::free({"a", "b", "c"})) == Tri::True);
  const MonoidPresentation G({"g", "h"}, {{{1, 1}, {0, 0}}});
  CHECK(is_sharp(G) == Tri::False);
  CHECK(unit_generators(G) == std::vector<std::size_t>{0, 1});
  CHECK(is_sharp(x1x2t()) == Tri::True);
  CHECK_THROWS_AS(irreducibles(G), NotSharp);
}

TEST_CASE("irreducibles") {
  const auto N2 = MonoidPresentation::free({"a", "b"});
  CHECK(irreducibles(N2) == std::vector<Word>{{1, 0}, {0, 1}});
  auto irr = irreducibles(x1x2t());
  std::sort(irr.begin(), irr.end());
  CHECK(irr == std::vector<Word>{{0, 1, 0}, {1, 0, 0}});
  CHECK(irreducibles(u_monoid()).size() == 2);
}

TEST_CASE("integral homomorphisms") {
  const auto Q = MonoidPresentation::free({"t"});
  const MonoidHom h(Q, x1x2t(), {{0, 0, 1}});
  CHECK(is_integral_hom(h, 6).result == Tri::True);
  const auto N3 = MonoidPresentation::free({"a", "b", "c"});
  CHECK(is_integral_hom(MonoidHom::identity(N3), 6).result == Tri::True);
  // (1,0) and (0,1) share an image under (a, b) -> a + b and admit no factorization.
  const MonoidHom sum(MonoidPresentation::free({"a", "b"}), MonoidPresentation::free({"s"}), {{1}, {1}});
  const auto rep = is_integral_hom(sum, 6);
  CHECK(rep.result == Tri::False);
  CHECK(rep.witness.has_value());
}

TEST_CASE("groupification and cokernels") {
  const auto Q = MonoidPresentation::free({"t"});
  const MonoidHom h(Q, x1x2t(), {{0, 0, 1}});
  const auto c = cokernel(h);
  CHECK(c.rank == 1);
  CHECK(c.torsion_free());
  CHECK(coker_torsion_free(h));
  CHECK(cokernel(MonoidHom::identity(x1x2t())).rank == 0);
  const auto hu = MonoidHom::from_trivial(u_monoid());
  const auto cu = cokernel(hu);
  CHECK(cu.rank == 1);
  CHECK(cu.torsion_divisors == std::vector<std::int64_t>{2});
  CHECK_FALSE(coker_torsion_free(hu));
  CHECK(to_string(cu) == "Z^1 + Z/2");
  CHECK(groupification(u_monoid()).torsion_divisors == std::vector<std::int64_t>{2});
}

TEST_CASE("homomorphisms respect relations") {
  const auto Q = MonoidPresentation::free({"t"});
  CHECK_THROWS_AS(MonoidHom(x1x2t(), Q, {{1}, {0}, {0}}), IllFormedHom);
  const MonoidHom ok(x1x2t(), Q, {{1}, {0}, {1}});
  CHECK(ok.apply({1, 1, 0}) == Word{1});
  const MonoidHom h(Q, x1x2t(), {{0, 0, 1}});
  CHECK(ok.compose_after(h).images() == std::vector<Word>{{1}});
  CHECK(preimage(h, {1, 1, 0}, 4) == Word{1});
  CHECK_FALSE(preimage(h, {1, 0, 0}, 4).has_value());
}

TEST_CASE("cancellation") {
  CHECK(is_cancellative(x1x2t(), 6) == Tri::True);
  const MonoidPresentation idem({"e"}, {{{2}, {1}}});
  CHECK(is_cancellative(idem, 4) == Tri::False);
}

TEST_CASE("congruence closure agrees with the oracle on homogeneous presentations") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Relation> rels;
    std::vector<oracle::Rel> orels;
    const int nrel = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < nrel; ++k) {
      const int deg = 1 + static_cast<int>(rng() % 2);
      Word l(n, 0), r(n, 0);
      for (int s = 0; s < deg; ++s) ++l[rng() % n];
      for (int s = 0; s < deg; ++s) ++r[rng() % n];
      if (l == r) continue;
      rels.push_back({l, r});
      orels.emplace_back(l, r);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    const MonoidPresentation P(names, rels);
    const auto words = words_up_to_degree(n, 3);
    CAPTURE(trial);
    for (const auto& a : words)
      for (const auto& b : words) {
        const bool ref = oracle::congruent(orels, a, b, 3);
        CHECK((P.equals(a, b) == Tri::True) == ref);
        if (ref) CHECK(P.normal_form(a) == P.normal_form(b));
      }
  }
}

TEST_CASE("class enumeration") {
  const auto P = x1x2t();
  const auto classes = P.classes_up_to(2);
  // degree <= 2 words: 10, merged: x1+x2 ~ t
  CHECK(classes.size() == 9);
  const auto cls = P.congruence_class({1, 1, 0}, 2);
  CHECK(cls.members.size() == 2);
  CHECK(P.group_key({1, 1, 0}) == P.group_key({0, 0, 1}));
  CHECK(P.format({1, 1, 0}) == "x1+x2");
}
