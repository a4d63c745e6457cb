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

#include "logmonoid/family.hpp"

#include <algorithm>
#include <random>

#include "logmonoid/error.hpp"

namespace logmonoid {

namespace {

// Uniform draw from [lo, hi] by rejection, identical on every standard library.
int draw(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParamsOutOfRange(what);
}

FamilyInstance semistable_instance(const FamilyParams& p, std::mt19937_64& rng) {
  const std::size_t l = static_cast<std::size_t>(p.l), r = static_cast<std::size_t>(p.r), n = l + r + 1;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= l; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= r; ++j) names.push_back("y" + std::to_string(j));
  names.push_back("t");
  std::vector<int> B(l + r, 0);
  for (std::size_t j = 0; j < r; ++j) B[l + j] = draw(rng, 0, p.max_B);
  Word lhs(n, 0), rhs(n, 0);
  for (std::size_t i = 0; i < l; ++i) lhs[i] = 1;
  for (std::size_t j = 0; j < r; ++j) rhs[l + j] = B[l + j];
  rhs[n - 1] = 1;
  const MonoidPresentation P(names, {{lhs, rhs}});
  const MonoidPresentation Q = MonoidPresentation::free({"t"});
  const MonoidHom h(Q, P, {unit_vector(n, n - 1)});
  SemistableStructure s;
  for (std::size_t k = 0; k < l + r; ++k) s.sigma.push_back(unit_vector(n, k));
  s.q0 = Word{1};
  s.delta.assign(l + r, 0);
  for (std::size_t i = 0; i < l; ++i) s.delta[i] = 1;
  s.B = B;
  std::string desc = "semistable l=" + std::to_string(l) + " r=" + std::to_string(r) + " B=(";
  for (std::size_t j = 0; j < r; ++j) desc += (j ? "," : "") + std::to_string(B[l + j]);
  return FamilyInstance{h, ChartCase::III, s, {}, desc + ")"};
}

FamilyInstance free_instance(const FamilyParams& p) {
  const std::size_t a = static_cast<std::size_t>(p.a), n = a + 1;
  std::vector<std::string> names{"t"};
  for (std::size_t i = 1; i <= a; ++i) names.push_back("n" + std::to_string(i));
  const MonoidPresentation P = MonoidPresentation::free(names);
  const MonoidHom h(MonoidPresentation::free({"t"}), P, {unit_vector(n, 0)});
  std::vector<Word> comp;
  for (std::size_t i = 1; i < n; ++i) comp.push_back(unit_vector(n, i));
  return FamilyInstance{h, ChartCase::I, std::nullopt, comp, "free a=" + std::to_string(a)};
}

FamilyInstance u_instance(const FamilyParams& p, std::mt19937_64& rng) {
  const std::size_t a = static_cast<std::size_t>(p.a);
  const bool with_t = draw(rng, 0, 1) == 1;
  const std::size_t i = static_cast<std::size_t>(draw(rng, 0, p.a - 1));
  std::size_t j = static_cast<std::size_t>(draw(rng, 0, p.a - 2));
  if (j >= i) ++j;
  const std::size_t off = with_t ? 1 : 0, n = a + off;
  std::vector<std::string> names;
  if (with_t) names.push_back("t");
  for (std::size_t k = 1; k <= a; ++k) names.push_back("u" + std::to_string(k));
  const MonoidPresentation P(names, {{scale(unit_vector(n, off + i), 2), scale(unit_vector(n, off + j), 2)}});
  const MonoidHom h = with_t ? MonoidHom(MonoidPresentation::free({"t"}), P, {unit_vector(n, 0)})
                             : MonoidHom::from_trivial(P);
  std::vector<Word> comp;
  for (std::size_t k = 0; k < a; ++k) comp.push_back(unit_vector(n, off + k));
  return FamilyInstance{h, ChartCase::II, std::nullopt, comp,
                        "u-monoid a=" + std::to_string(a) + " relation 2u" + std::to_string(i + 1) + "=2u" +
                            std::to_string(j + 1) + (with_t ? " over Nt" : " over {0}")};
}

}  // namespace

std::string to_string(FamilyShape s) {
  switch (s) {
    case FamilyShape::Free: return "free";
    case FamilyShape::UMonoid: return "u-monoid";
    case FamilyShape::Semistable: return "semistable";
  }
  return "?";
}

FamilyShape parse_family_shape(const std::string& s) {
  if (s == "free") return FamilyShape::Free;
  if (s == "u-monoid") return FamilyShape::UMonoid;
  if (s == "semistable") return FamilyShape::Semistable;
  throw InvalidArgument("unknown family shape '" + s + "'");
}

std::vector<FamilyInstance> generate_family(FamilyShape shape, const FamilyParams& params, std::uint64_t seed) {
  switch (shape) {
    case FamilyShape::Semistable:
      require(params.l >= 2 && params.l <= 4, "semistable family needs 2 <= l <= 4");
      require(params.r >= 0 && params.r <= 3, "semistable family needs 0 <= r <= 3");
      require(params.max_B >= 0 && params.max_B <= 3, "B entries are limited to 0..3");
      break;
    case FamilyShape::Free: require(params.a >= 0 && params.a <= 4, "free family needs 0 <= a <= 4"); break;
    case FamilyShape::UMonoid: require(params.a >= 2 && params.a <= 4, "u-monoid family needs 2 <= a <= 4"); break;
  }
  std::mt19937_64 rng(seed);
  std::vector<FamilyInstance> out;
  for (std::size_t k = 0; k < params.count; ++k) {
    switch (shape) {
      case FamilyShape::Semistable: out.push_back(semistable_instance(params, rng)); break;
      case FamilyShape::Free: out.push_back(free_instance(params)); break;
      case FamilyShape::UMonoid: out.push_back(u_instance(params, rng)); break;
    }
  }
  return out;
}

bool same_structure_up_to_order(const MonoidPresentation& P, const SemistableStructure& a,
                                const SemistableStructure& b) {
  if (a.sigma.size() != b.sigma.size() || a.q0 != b.q0) return false;
  std::vector<bool> used(b.sigma.size(), false);
  for (std::size_t i = 0; i < a.sigma.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.sigma.size() && !found; ++j) {
      if (used[j] || P.equals(a.sigma[i], b.sigma[j]) != Tri::True) continue;
      if (a.delta[i] != b.delta[j] || a.B[i] != b.B[j]) return false;
      used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace logmonoid
