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

#include "logmonoid/chart.hpp"
#include "logmonoid/monoid.hpp"
#include "logmonoid/semistable.hpp"

namespace logmonoid {

enum class FamilyShape { Free, UMonoid, Semistable };

std::string to_string(FamilyShape s);
/// Accepts "free", "u-monoid", "semistable"; throws InvalidArgument.
FamilyShape parse_family_shape(const std::string& s);

struct FamilyParams {
  int l = 2;        // semistable: number of x variables (2..4)
  int r = 1;        // semistable: number of y variables (0..3)
  int a = 2;        // free: rank of N (0..4); u-monoid: number of u generators (2..4)
  int max_B = 3;    // semistable: B entries drawn from 0..max_B (at most 3)
  std::size_t count = 1;
};

struct FamilyInstance {
  MonoidHom hom;
  ChartCase expected_case;
  /// Generating structure for the semistable shape, sigma listed as x_1..x_l, y_1..y_r.
  std::optional<SemistableStructure> structure;
  /// Generating complement generators for the free and u-monoid shapes.
  std::vector<Word> complement;
  std::string description;
};

/// Deterministic per (shape, params, seed); throws ParamsOutOfRange.
///   semistable: Q = Nt, P = <x_1..x_l, y_1..y_r, t | x_1 + ... + x_l = t + sum B_j y_j>
///   free:       Q = Nt, P = Nt x N^a
///   u-monoid:   Q = {0} or Nt, P = Q x <u_1..u_a | 2u_i = 2u_j>
std::vector<FamilyInstance> generate_family(FamilyShape shape, const FamilyParams& params, std::uint64_t seed);

/// Equality of semistable structures up to a simultaneous reordering of sigma, Delta and B.
bool same_structure_up_to_order(const MonoidPresentation& P, const SemistableStructure& a,
                                const SemistableStructure& b);

}  // namespace logmonoid
