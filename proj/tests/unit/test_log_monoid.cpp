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


#include "doctest.h"
#include "logmonoid/log_monoid.hpp"
#include "support/oracles.hpp"

using namespace logmonoid;

namespace {

const ToyRing F2 = ToyRing::prime(2);
const ToyRing F4 = ToyRing::galois(2, 2);
const MonoidPresentation kN = MonoidPresentation::free({"n"});

// With no generator in the unit face, classes up to degree d are pairs (word, unit).
std::size_t expected_classes(std::size_t rank, int degree, const ToyRing& A) {
  return oracle::exponent_vectors(rank, degree).size() * A.units().size();
}

}  // namespace

TEST_CASE("associated log monoid of N over F2 and F4") {
  const LogMonoid M2(kN, F2, {0});
  CHECK(ClassTable(M2, 4).size() == expected_classes(1, 4, F2));
  const LogMonoid M4 = associated_log(kN, F4, {0});
  CHECK(ClassTable(M4, 4).size() == expected_classes(1, 4, F4));
  CHECK(log_condition(M4, 4));
  CHECK(M4.unit_face().empty());
}

TEST_CASE("unit face collapses words") {
  const LogMonoid M(kN, F4, {1});
  CHECK(M.unit_face() == std::vector<std::size_t>{0});
  const ClassTable table(M, 4);
  CHECK(table.size() == F4.units().size());
  const auto a = table.find(M.element({3}, 1)), b = table.find(M.element({0}, 1));
  REQUIRE(a.has_value());
  CHECK(a == b);
  CHECK(table.members(*a).size() == 5);
}

TEST_CASE("structure map and multiplication") {
  const auto D = ToyRing::truncated_dvr(2, 4);
  const LogMonoid M(kN, D, {D.generator()});
  const auto e = M.element({2}, D.one());
  CHECK(M.structure(e) == D.pow(D.generator(), 2));
  const auto u = D.add(D.one(), D.generator());
  const auto prod = M.combine(M.element({1}, u), M.element({1}, u));
  CHECK(prod.word == Word{2});
  CHECK(prod.unit == D.mul(u, u));
}

TEST_CASE("prelog maps must be multiplicative") {
  const MonoidPresentation P({"a", "b"}, {{{2, 0}, {0, 2}}});
  CHECK_THROWS_AS(LogMonoid(P, F4, {F4.one(), F4.generator()}), NotMultiplicative);
  CHECK_NOTHROW(LogMonoid(P, F4, {F4.one(), F4.one()}));
}

TEST_CASE("idempotence of the associated log monoid") {
  const LogMonoid M(kN, F4, {0});
  const LogMonoid MM(as_plain_monoid(M), F4, as_prelog_alpha(M));
  std::vector<LogMonoid::Element> images{MM.element(MM.monoid().generator(0), 1)};
  const LogHom iso(M, MM, RingHom::identity(F4), images);
  CHECK(bijective_on_classes(iso, 4) == Tri::True);
  CHECK(log_condition(MM, 3));
}

TEST_CASE("base change") {
  const LogMonoid M(kN, F2, {0});
  const LogMonoid MB = base_change(M, RingHom::structure_map(F2, F4));
  CHECK(ClassTable(MB, 4).size() == expected_classes(1, 4, F4));
  const LogMonoid same = base_change(M, RingHom::identity(F2));
  CHECK(ClassTable(same, 4).size() == ClassTable(M, 4).size());

  const auto D4 = ToyRing::truncated_dvr(2, 4), D2 = ToyRing::truncated_dvr(2, 2);
  const LogMonoid Mt(kN, D4, {D4.generator()});
  const LogMonoid Mb = base_change(Mt, RingHom::from_generator(D4, D2, D2.generator()));
  CHECK(ClassTable(Mt, 3).size() == expected_classes(1, 3, D4));
  CHECK(ClassTable(Mb, 3).size() == expected_classes(1, 3, D2));
}

TEST_CASE("homomorphisms over a ring map") {
  const LogMonoid M(kN, F2, {0}), MB(kN, F4, {0});
  const RingHom f = RingHom::structure_map(F2, F4);
  const LogHom phi(M, MB, f, {MB.element({1}, 1)});
  CHECK(phi.well_defined(4) == Tri::True);
  CHECK(phi(M.element({2}, 1)) == MB.element({2}, 1));

  const LogMonoid Mu(kN, F2, {1}), MBu(kN, F4, {1});
  CHECK_THROWS_AS(LogHom(Mu, MBu, f, {MBu.element({0}, F4.generator())}), NotOverF);
  CHECK_THROWS_AS(LogHom(M, LogMonoid(kN, ToyRing::galois(3, 2), {0}), f, {MB.element({1}, 1)}), Error);
}

TEST_CASE("adjunction for the inclusion of F2 in F4") {
  const LogMonoid M(kN, F2, {0}), MB(kN, F4, {0});
  const RingHom f = RingHom::structure_map(F2, F4);
  const LogHom phi(M, MB, f, {MB.element({1}, 1)});
  const auto rep = adjunction_check(phi, 4);
  CHECK(rep.result == Tri::True);
  CHECK(rep.delta_gamma == Tri::True);
  CHECK(rep.gamma_delta == Tri::True);
  CHECK(rep.formula == Tri::True);
  CHECK(bijective_on_classes(adjoint_gamma(phi), 4) == Tri::True);
}

TEST_CASE("adjunction for a unit-scaling homomorphism") {
  const LogMonoid M(kN, F2, {0}), MB(kN, F4, {0});
  const RingHom f = RingHom::structure_map(F2, F4);
  const LogHom phi(M, MB, f, {MB.element({1}, F4.generator())});
  const auto rep = adjunction_check(phi, 4);
  CHECK(rep.result == Tri::True);
  const LogHom gamma = adjoint_gamma(phi);
  const LogHom back = adjoint_delta(gamma, M, f);
  CHECK(agree_on_classes(back, phi, 4) == Tri::True);
}

TEST_CASE("adjunction over the identity") {
  const LogMonoid M(kN, F4, {0});
  const LogHom id(M, M, RingHom::identity(F4), {M.element({1}, 1)});
  CHECK(adjunction_check(id, 4).result == Tri::True);
}

TEST_CASE("descent along F2 -> F4") {
  const LogMonoid M(kN, F2, {0});
  const auto rep = descent_check(M, RingHom::structure_map(F2, F4), 4);
  CHECK(rep.result == Tri::True);
  CHECK(rep.injective);
  CHECK(rep.equalizer);
  CHECK(rep.classes_M == 5);
  CHECK(rep.classes_MB == 15);
  CHECK(rep.equalizer_size == 5);
}

TEST_CASE("descent along the identity and along N^2") {
  const LogMonoid M(kN, F4, {0});
  CHECK(descent_check(M, RingHom::identity(F4), 4).result == Tri::True);
  const LogMonoid M2(MonoidPresentation::free({"a", "b"}), F2, {0, 0});
  const auto rep = descent_check(M2, RingHom::structure_map(F2, F4), 4);
  CHECK(rep.result == Tri::True);
  CHECK(rep.classes_M == expected_classes(2, 4, F2));
}

TEST_CASE("descent needs a faithfully flat map") {
  const auto D4 = ToyRing::truncated_dvr(2, 4), D2 = ToyRing::truncated_dvr(2, 2);
  const LogMonoid Mt(kN, D4, {D4.generator()});
  CHECK_THROWS_AS(descent_check(Mt, RingHom::from_generator(D4, D2, D2.generator()), 3), NotFaithfullyFlat);
  const LogMonoid Ms(kN, D2, {D2.generator()});
  CHECK(descent_check(Ms, RingHom::from_generator(D2, D4, D4.pow(D4.generator(), 2)), 3).result == Tri::True);
}
