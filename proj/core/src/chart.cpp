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

#include "logmonoid/chart.hpp"

#include <algorithm>
#include <set>

#include "logmonoid/error.hpp"

namespace logmonoid {

std::string to_string(ChartCase c) {
  switch (c) {
    case ChartCase::I: return "I";
    case ChartCase::II: return "II";
    case ChartCase::III: return "III";
  }
  return "?";
}

bool is_free_monoid(const MonoidPresentation& n, int bound) {
  if (is_sharp(n) != Tri::True) return false;
  if (is_cancellative(n, bound) == Tri::False) return false;
  const auto g = groupification(n);
  return g.torsion_free() && static_cast<std::size_t>(g.rank) == n.rank();
}

std::optional<std::pair<std::size_t, std::size_t>> match_u_monoid(const MonoidPresentation& n, int bound) {
  const std::size_t a = n.rank();
  if (a < 2 || is_sharp(n) != Tri::True) return std::nullopt;
  const auto g = groupification(n);
  if (g.torsion_divisors != std::vector<std::int64_t>{2} || static_cast<std::size_t>(g.rank) != a - 1)
    return std::nullopt;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = i + 1; j < a; ++j) {
      if (n.equals(scale(n.generator(i), 2), scale(n.generator(j), 2)) != Tri::True) continue;
      // model <u_1..u_a | 2u_i = 2u_j> with the same generator order
      std::vector<std::string> names;
      for (std::size_t k = 0; k < a; ++k) names.push_back("u" + std::to_string(k + 1));
      const MonoidPresentation model(names, {{scale(unit_vector(a, i), 2), scale(unit_vector(a, j), 2)}}, bound);
      std::vector<Word> images;
      for (std::size_t k = 0; k < a; ++k) images.push_back(n.generator(k));
      const MonoidHom phi(model, n, images);
      std::set<Word> seen;
      bool injective = true;
      const auto model_classes = model.classes_up_to(bound);
      for (const auto& w : model_classes)
        if (!seen.insert(n.normal_form(phi.apply(w))).second) {
          injective = false;
          break;
        }
      if (injective && seen.size() == n.classes_up_to(bound).size()) return std::make_pair(i, j);
    }
  return std::nullopt;
}

ChartClassification classify_chart(const MonoidHom& h, int bound) {
  ChartClassification c;
  c.bound_used = bound;
  const SplitReport sr = splits(h, DetectOptions{bound, false});
  if (sr.result == Tri::Undecided) throw UndecidedAtBound("split test undecided at bound " + std::to_string(bound));
  if (sr.result == Tri::True) {
    c.complement = sr.complement;
    c.complement_generators = sr.complement_generators;
    if (is_free_monoid(*c.complement, bound)) {
      c.chart_case = ChartCase::I;
      c.regular_elements = c.complement_generators;
      return c;
    }
    if (auto pair = match_u_monoid(*c.complement, bound)) {
      c.chart_case = ChartCase::II;
      c.u_rank = static_cast<int>(c.complement->rank());
      c.u_pair = *pair;
      c.regular_elements = c.complement_generators;
      return c;
    }
    throw NotClassifiable("split chart whose complement is neither free nor a U-monoid");
  }
  for (const auto& s : sr.structures)
    if (s.support_size() >= 2) {
      c.chart_case = ChartCase::III;
      c.structure = s;
      const auto supp = s.delta_support();
      for (std::size_t k = 0; k < s.sigma.size(); ++k)
        if (std::find(supp.begin(), supp.end(), k) == supp.end()) c.regular_elements.push_back(s.sigma[k]);
      return c;
    }
  throw NotClassifiable("non-split chart without a semistable structure having #Supp(Delta) >= 2");
}

std::vector<Word> boundary_monomial(const ChartClassification& c) {
  switch (c.chart_case) {
    case ChartCase::I: return c.complement_generators;
    case ChartCase::II: throw CaseII("boundary monomial needs a free or semistable chart");
    case ChartCase::III: return c.regular_elements;
  }
  return {};
}

std::optional<Word> marking_value(const ChartClassification& c) {
  if (c.chart_case == ChartCase::III && c.structure) return c.structure->q0;
  return std::nullopt;
}

bool is_log_trivial(const MonoidHom& h, int bound) { return canonical_sigma(h, bound).empty(); }

ChartRealization realize_chart(const MonoidHom& h, const ChartClassification& c, std::uint32_t p, int N, int d) {
  const auto& P = h.target();
  std::vector<std::string> vars;
  switch (c.chart_case) {
    case ChartCase::I: {
      for (const auto& w : c.complement_generators) vars.push_back(P.format(w));
      ChartRealization r{SeriesRing(p, N, vars, std::nullopt, d), {}};
      for (std::size_t k = 0; k < vars.size(); ++k) r.regular_vars.push_back(k);
      return r;
    }
    case ChartCase::II: {
      if (p == 2) throw CaseII("case II charts are refused in characteristic 2");
      const std::size_t a = c.complement_generators.size();
      for (const auto& w : c.complement_generators) vars.push_back(P.format(w));
      Mono g(a + 1, 0);
      g[c.u_pair.second + 1] = 2;
      SeriesRing::Relation rel{scale(unit_vector(a, c.u_pair.first), 2), Poly{{g, 1}}};
      ChartRealization r{SeriesRing(p, N, vars, rel, d), {}};
      for (std::size_t k = 0; k < a; ++k) r.regular_vars.push_back(k);
      return r;
    }
    case ChartCase::III: {
      const auto& s = *c.structure;
      for (const auto& w : s.sigma) vars.push_back(P.format(w));
      const std::size_t n = s.sigma.size();
      Mono g(n + 1, 0);
      g[0] = degree(s.q0);
      for (std::size_t k = 0; k < n; ++k) g[k + 1] = s.B[k];
      SeriesRing::Relation rel{Word(s.delta.begin(), s.delta.end()), Poly{{g, 1}}};
      ChartRealization r{SeriesRing(p, N, vars, rel, d), {}};
      for (std::size_t k = 0; k < n; ++k)
        if (s.delta[k] == 0) r.regular_vars.push_back(k);
      return r;
    }
  }
  throw InvalidArgument("unknown chart case");
}

std::vector<bool> check_regular_elements(const ChartRealization& r, int d) {
  std::vector<bool> out;
  for (std::size_t v : r.regular_vars) out.push_back(is_regular(r.ring, r.ring.var(v), d));
  return out;
}

}  // namespace logmonoid
