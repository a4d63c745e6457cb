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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logmonoid/error.hpp"
#include "logmonoid/int_lattice.hpp"
#include "logmonoid/word.hpp"

namespace logmonoid {

/// A defining relation lhs = rhs between exponent vectors.
struct Relation {
  Word lhs;
  Word rhs;
};

/// Oriented rewriting rule lhs -> rhs with rhs smaller than lhs in the term order.
struct RewriteRule {
  Word lhs;
  Word rhs;
};

namespace detail {
struct PresentationData;
}

/// Finitely presented commutative monoid <generators | relations>.
///
/// The congruence is decided by completing the binomial rewriting system
/// under the degree-lexicographic order in which generators are ranked by
/// name. Completion always terminates for commutative presentations; if it
/// is cut off by the rule budget, normal forms fall back to breadth-first
/// congruence closure inside `bound`.
///
/// Values are immutable and cheap to copy; all state is computed eagerly
/// at construction, so a presentation may be shared across threads.
class MonoidPresentation {
 public:
  static constexpr int kDefaultBound = 12;

  /// The trivial monoid {0}.
  MonoidPresentation();
  MonoidPresentation(std::vector<std::string> generators, std::vector<Relation> relations,
                     int bound = kDefaultBound);

  static MonoidPresentation free(std::vector<std::string> generators, int bound = kDefaultBound);

  std::size_t rank() const noexcept;
  const std::vector<std::string>& generators() const noexcept;
  const std::vector<Relation>& relations() const noexcept;
  int bound() const noexcept;
  MonoidPresentation with_bound(int bound) const;
  MonoidPresentation with_extra_relations(const std::vector<Relation>& extra) const;

  /// True when the rewriting system was completed.
  bool completed() const noexcept;
  const std::vector<RewriteRule>& rules() const noexcept;

  /// Term order: -1, 0, 1 as a <, =, > b.
  int compare(const Word& a, const Word& b) const;

  Word normal_form(const Word& w) const;
  std::optional<Word> try_normal_form(const Word& w) const;
  Tri equals(const Word& a, const Word& b) const;

  Word zero() const { return Word(rank(), 0); }
  Word generator(std::size_t i) const { return unit_vector(rank(), i); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Distinct normal forms of all words of degree <= d, sorted by the term order.
  std::vector<Word> classes_up_to(int d) const;

  struct ClassSearch {
    std::vector<Word> members;
    bool closed = true;  // false if some member would exceed max_degree
  };
  /// Breadth-first congruence closure of w restricted to degree <= max_degree.
  ClassSearch congruence_class(const Word& w, int max_degree) const;

  /// Canonical image in the groupification Z^n / <lhs - rhs>. Equal keys
  /// characterize equality exactly when the monoid is cancellative.
  IntVector group_key(const Word& w) const;

  bool same_as(const MonoidPresentation& other) const noexcept;
  std::string format(const Word& w) const;

 private:
  std::shared_ptr<const detail::PresentationData> d_;
};

/// An element of a presented monoid.
class MonoidElement {
 public:
  MonoidElement(MonoidPresentation parent, Word word);
  const MonoidPresentation& parent() const noexcept { return parent_; }
  const Word& word() const noexcept { return word_; }
  MonoidElement operator+(const MonoidElement& other) const;

 private:
  MonoidPresentation parent_;
  Word word_;
};

/// Tri-state equality; throws ParentMismatch for elements of different monoids.
Tri equals(const MonoidElement& a, const MonoidElement& b);

/// Generator-wise homomorphism source -> target.
class MonoidHom {
 public:
  /// Throws IllFormedHom when a source relation is not respected.
  MonoidHom(MonoidPresentation source, MonoidPresentation target, std::vector<Word> images);

  static MonoidHom identity(const MonoidPresentation& m);
  /// The unique map from the trivial monoid.
  static MonoidHom from_trivial(const MonoidPresentation& target);

  const MonoidPresentation& source() const noexcept { return source_; }
  const MonoidPresentation& target() const noexcept { return target_; }
  const std::vector<Word>& images() const noexcept { return images_; }

  /// Image of a source word as an (unnormalized) target word.
  Word apply(const Word& w) const;
  MonoidHom compose_after(const MonoidHom& inner) const;  // this ∘ inner

 private:
  MonoidPresentation source_;
  MonoidPresentation target_;
  std::vector<Word> images_;
};

struct AbelianGroupPresentation {
  int rank = 0;
  std::vector<std::int64_t> torsion_divisors;
  bool torsion_free() const noexcept { return torsion_divisors.empty(); }
};

std::string to_string(const AbelianGroupPresentation& g);

Word normal_form(const MonoidPresentation& m, const Word& w);

/// Exact: a generator is a unit iff it lies in the face forced by the relations.
Tri is_sharp(const MonoidPresentation& m);
/// Indices of generators that are units.
std::vector<std::size_t> unit_generators(const MonoidPresentation& m);

/// Irreducible elements (as normal forms); throws NotSharp or UndecidedAtBound.
std::vector<Word> irreducibles(const MonoidPresentation& m);

/// Bounded check of cancellation a + g = b + g => a = b over classes of degree < bound.
Tri is_cancellative(const MonoidPresentation& m, int bound);

struct IntegralityReport {
  Tri result = Tri::Undecided;
  int bound_used = 0;
  // (q, p, q', p') with f(q) + p = f(q') + p' admitting no factorization in bound
  std::optional<std::vector<Word>> witness;
};

IntegralityReport is_integral_hom(const MonoidHom& h, int bound);

AbelianGroupPresentation groupification(const MonoidPresentation& m);
AbelianGroupPresentation cokernel(const MonoidHom& h);
bool coker_torsion_free(const MonoidHom& h);

/// Searches q with f(q) = x among source classes of degree <= bound.
std::optional<Word> preimage(const MonoidHom& h, const Word& x, int bound);

}  // namespace logmonoid
