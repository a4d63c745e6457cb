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
#include <string>
#include <vector>

#include "logmonoid/monoid.hpp"
#include "logmonoid/semistable.hpp"
#include "logmonoid/series_ring.hpp"

namespace logmonoid {

enum class ChartCase { I, II, III };

std::string to_string(ChartCase c);

struct ChartClassification {
  ChartCase chart_case = ChartCase::I;
  /// Cases I and II: the complement N with P = f(Q) x N, and its generators as elements of P.
  std::optional<MonoidPresentation> complement;
  std::vector<Word> complement_generators;
  /// Case II: a >= 2 and the two generators u_i, u_j of N with 2u_i = 2u_j.
  int u_rank = 0;
  std::pair<std::size_t, std::size_t> u_pair{0, 0};
  /// Case III: the unique semistable structure.
  std::optional<SemistableStructure> structure;
  /// Elements of P the theorem asserts are regular: Irr(N) in cases I and II,
  /// sigma \ Supp(Delta) in case III.
  std::vector<Word> regular_elements;
  int bound_used = 0;
};

/// Detects N = <u_1..u_a | 2u_i = 2u_j>, a >= 2, up to renaming. Checks sharpness,
/// the torsion Z/2 of the groupification, and a bijection with the model
/// monoid on classes of degree <= bound.
std::optional<std::pair<std::size_t, std::size_t>> match_u_monoid(const MonoidPresentation& n, int bound);

/// Free monoid test: sharp, cancellative within the bound, torsion-free
/// groupification of rank equal to the number of generators.
bool is_free_monoid(const MonoidPresentation& n, int bound);

/// Throws NotClassifiable for inputs outside the three shapes and UndecidedAtBound.
ChartClassification classify_chart(const MonoidHom& h, int bound = 8);

/// Monoid-level content of t_x: Irr(N) in case I, sigma \ Supp(Delta) in case III.
/// Throws CaseII.
std::vector<Word> boundary_monomial(const ChartClassification& c);

/// q0 in case III, none otherwise.
std::optional<Word> marking_value(const ChartClassification& c);

/// True iff no irreducible of P lies outside f(Q).
bool is_log_trivial(const MonoidHom& h, int bound = 8);

/// The truncated monoid algebra A (x)_{A[Q]} A[P] of a classified chart over
/// A = F_p[t]/(t^N), with Q acting through q -> t^{|q|}:
///   case I:   A[N], a polynomial ring;
///   case II:  A[U_1..U_a]/(U_i^2 - U_j^2) (refused in characteristic 2);
///   case III: A[sigma]/(X^Delta - t^{|q0|} X^B).
/// `regular_vars[k]` is the variable realizing `regular_elements[k]`.
struct ChartRealization {
  SeriesRing ring;
  std::vector<std::size_t> regular_vars;
};

ChartRealization realize_chart(const MonoidHom& h, const ChartClassification& c, std::uint32_t p, int N, int d);

/// is_regular for every listed regular element of the realization, truncated at X-degree d.
std::vector<bool> check_regular_elements(const ChartRealization& r, int d);

}  // namespace logmonoid
