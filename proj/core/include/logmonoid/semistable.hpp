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
#include <optional>
#include <string>
#include <vector>

#include "logmonoid/monoid.hpp"
#include "logmonoid/pushout.hpp"

namespace logmonoid {

/// The quadruple (sigma, q0, Delta, B). sigma holds words of the target
/// monoid P, q0 a word of the base Q; Delta and B are indexed by sigma.
struct SemistableStructure {
  std::vector<Word> sigma;
  Word q0;
  std::vector<int> delta;
  std::vector<int> B;

  std::size_t support_size() const;
  std::vector<std::size_t> delta_support() const;
  friend bool operator==(const SemistableStructure&, const SemistableStructure&) = default;
};

struct ValidationReport {
  Tri result = Tri::Undecided;
  int bound_used = 0;
  std::string failed_condition;  // "S1".."S4" when result is False
  std::string detail;
};

ValidationReport validate_semistable_report(const MonoidHom& h, const SemistableStructure& s, int bound);
Tri validate_semistable(const MonoidHom& h, const SemistableStructure& s, int bound);

struct DetectOptions {
  int bound = 8;
  /// Also try every subset of the (distinct, nonzero) generators as sigma.
  /// Only used when P has at most six generators.
  bool search_sigma_subsets = false;
};

/// Irreducible elements of P not in f(Q), sorted by the term order of P.
std::vector<Word> canonical_sigma(const MonoidHom& h, int bound);

/// All validated structures found, canonical sigma first.
std::vector<SemistableStructure> detect_all_semistable(const MonoidHom& h, const DetectOptions& opts);
std::optional<SemistableStructure> detect_semistable(const MonoidHom& h, int bound);

/// The submonoid of P generated by gens, presented by the relations among
/// them that appear in degree <= bound.
MonoidPresentation submonoid_presentation(const MonoidPresentation& P, const std::vector<Word>& gens,
                                          int bound);

struct SplitReport {
  Tri result = Tri::Undecided;
  int bound_used = 0;
  std::vector<Word> complement_generators;     // N = <irr(P) \ f(Q)>
  std::optional<MonoidPresentation> complement;
  std::optional<std::vector<Word>> collision;  // f(q) + n = f(q') + n'
  std::vector<SemistableStructure> structures;
  bool three_way_consistent = true;
  std::string detail;
};

SplitReport splits(const MonoidHom& h, const DetectOptions& opts);

Word marking(const MonoidHom& h, int bound);

struct QuotientResult {
  MonoidPresentation quotient;
  MonoidHom f_bar;
  SemistableStructure structure;
  /// For each surviving sigma element, its index in the input sigma.
  std::vector<std::size_t> alpha;
};

/// P / N with N generated by n_gens (words of P).
MonoidPresentation quotient_monoid(const MonoidPresentation& P, const std::vector<Word>& n_gens);
QuotientResult quotient_semistable(const MonoidHom& h, const SemistableStructure& s,
                                   const std::vector<Word>& n_gens, int bound);

struct RelationPropertyReport {
  Tri result = Tri::Undecided;
  std::size_t instances_A = 0;
  std::size_t instances_B = 0;
  std::string counterexample;
};

RelationPropertyReport check_relation_properties(const MonoidHom& h, const SemistableStructure& s, int degree);

struct PropertyCReport {
  bool verified = false;
  std::size_t classes_checked = 0;
  MonoidPresentation pushout;  // amalgamated presentation of the pushout
  std::vector<Word> gamma_images;
  std::string detail;
};

PropertyCReport property_C_pushout(const MonoidHom& h, const SemistableStructure& s, int degree,
                                   int bound = MonoidPresentation::kDefaultBound);

std::string to_string(const MonoidHom& h, const SemistableStructure& s);

}  // namespace logmonoid
