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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logmonoid/monoid.hpp"
#include "logmonoid/toy_ring.hpp"

namespace logmonoid {

/// The associated log monoid P (+)_{alpha^{-1}(A^x)} A^x of a prelog
/// structure alpha : P -> (A, *) on a presented monoid.
///
/// Elements are pairs (w, a) with a a unit of A, subject to
/// (w + n, a) ~ (w, alpha(n) a) whenever alpha(n) is a unit. Every log
/// monoid over a toy ring arises this way from itself, so this type models
/// log monoids in general.
class LogMonoid {
 public:
  struct Element {
    Word word;
    RingElt unit;
    friend bool operator==(const Element&, const Element&) = default;
  };

  /// Throws NotMultiplicative if alpha does not respect the relations of P.
  LogMonoid(MonoidPresentation monoid, ToyRing ring, std::vector<RingElt> alpha);

  const MonoidPresentation& monoid() const noexcept { return monoid_; }
  const ToyRing& ring() const noexcept { return ring_; }
  const std::vector<RingElt>& alpha() const noexcept { return alpha_; }

  /// alpha(w) as a product in A.
  RingElt alpha_of(const Word& w) const;
  /// The structure map alpha'(w, a) = alpha(w) a.
  RingElt structure(const Element& e) const;
  /// Generators of P whose image is a unit; they span alpha^{-1}(A^x).
  const std::vector<std::size_t>& unit_face() const noexcept { return face_; }

  Element element(Word w, RingElt unit) const;
  Element combine(const Element& a, const Element& b) const;
  std::string format(const Element& e) const;

 private:
  MonoidPresentation monoid_;
  ToyRing ring_;
  std::vector<RingElt> alpha_;
  std::vector<std::size_t> face_;
};

/// Equivalence classes of pairs (w, a) with w a class of P of degree <= degree.
/// Identifications that would pass through a word of larger degree are not seen.
class ClassTable {
 public:
  ClassTable(const LogMonoid& m, int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return reps_.size(); }
  const std::vector<LogMonoid::Element>& representatives() const noexcept { return reps_; }
  /// Class index of an element, or nullopt when its word lies beyond the degree.
  std::optional<std::size_t> find(const LogMonoid::Element& e) const;
  /// All enumerated pairs of a class.
  std::vector<LogMonoid::Element> members(std::size_t cls) const;

 private:
  const LogMonoid* owner_;
  int degree_;
  std::vector<LogMonoid::Element> reps_;
  std::map<std::pair<Word, RingElt>, std::size_t> index_;
};

/// The log condition: alpha' restricted to alpha'^{-1}(A^x) is a bijection onto A^x,
/// checked on classes of degree <= degree.
bool log_condition(const LogMonoid& m, int degree);

/// Associated log monoid of a prelog structure; throws NotMultiplicative.
LogMonoid associated_log(const MonoidPresentation& monoid, const ToyRing& ring, const std::vector<RingElt>& alpha);

/// Presentation of a log monoid as a plain monoid: P x (A^x, *) with one generator per unit.
/// Together with `as_prelog_alpha` it feeds a log monoid back into associated_log.
MonoidPresentation as_plain_monoid(const LogMonoid& m);
std::vector<RingElt> as_prelog_alpha(const LogMonoid& m);

/// M (x)_A B: the associated log monoid of f o alpha. Throws NotRingHom on a ring mismatch.
LogMonoid base_change(const LogMonoid& m, const RingHom& f);

/// A morphism of log monoids over a ring map f, given on generators of the
/// underlying monoid. Units map by f: phi(0, a) = (0, f(a)).
class LogHom {
 public:
  /// Throws NotOverF when beta' o phi != f o alpha' on a generator,
  /// and IllFormedHom when a relation of the source is not respected.
  LogHom(LogMonoid source, LogMonoid target, RingHom f, std::vector<LogMonoid::Element> images);

  const LogMonoid& source() const noexcept { return source_; }
  const LogMonoid& target() const noexcept { return target_; }
  const RingHom& ring_map() const noexcept { return f_; }
  const std::vector<LogMonoid::Element>& images() const noexcept { return images_; }

  LogMonoid::Element operator()(const LogMonoid::Element& e) const;

  /// Every enumerated class of the source maps into a single class of the target.
  Tri well_defined(int degree) const;

 private:
  LogMonoid source_;
  LogMonoid target_;
  RingHom f_;
  std::vector<LogMonoid::Element> images_;
};

/// gamma(phi)(m, b) = phi(m) b : M (x)_A B -> N for phi : M -> N over f : A -> B.
LogHom adjoint_gamma(const LogHom& phi);
/// delta(phi')(m) = phi'(m, 1) : M -> N over f, for phi' : M (x)_A B -> N over B.
LogHom adjoint_delta(const LogHom& phi_prime, const LogMonoid& m, const RingHom& f);

/// Agreement of two homs with common source and target on all classes of degree <= degree.
Tri agree_on_classes(const LogHom& a, const LogHom& b, int degree);

struct AdjunctionReport {
  Tri result = Tri::Undecided;
  Tri delta_gamma = Tri::Undecided;  // delta(gamma(phi)) = phi
  Tri gamma_delta = Tri::Undecided;  // gamma(delta(gamma(phi))) = gamma(phi)
  Tri formula = Tri::Undecided;      // gamma(phi)(m, b) = phi(m, 1) * (0, b)
  std::size_t classes_checked = 0;
};

AdjunctionReport adjunction_check(const LogHom& phi, int degree);

/// Bijectivity on enumerated classes.
Tri bijective_on_classes(const LogHom& phi, int degree);

struct DescentReport {
  Tri result = Tri::Undecided;
  bool injective = false;
  bool equalizer = false;
  std::size_t classes_M = 0;
  std::size_t classes_MB = 0;
  std::size_t equalizer_size = 0;
  std::string tensor_description;
  std::string detail;
};

/// Exactness of 0 -> M -> M (x)_A B => M (x)_A (B (x)_A B) on classes of degree <= degree.
/// Throws NotFaithfullyFlat and HypothesisFailure (M not integral).
DescentReport descent_check(const LogMonoid& m, const RingHom& f, int degree = 4);

}  // namespace logmonoid
