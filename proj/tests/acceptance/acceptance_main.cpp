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


// Acceptance driver: one PASS/FAIL line per criterion, followed by a summary.
// Each criterion compares the library against the oracles in tests/support or
// against the generating data of the seeded instance families.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logmonoid/chart.hpp"
#include "logmonoid/family.hpp"
#include "logmonoid/log_monoid.hpp"
#include "logmonoid/monoid.hpp"
#include "logmonoid/semistable.hpp"
#include "logmonoid/series_ring.hpp"
#include "logmonoid/toy_ring.hpp"
#include "support/oracles.hpp"

using namespace logmonoid;

namespace {

constexpr int kBound = 8;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

std::vector<oracle::Rel> relations_of(const MonoidPresentation& P) {
  std::vector<oracle::Rel> out;
  for (const auto& r : P.relations()) out.emplace_back(r.lhs, r.rhs);
  return out;
}

std::vector<FamilyInstance> semistable_corpus() {
  std::vector<FamilyInstance> out;
  std::uint64_t seed = 1000;
  for (int k = 0; out.size() < 200; ++k) {
    FamilyParams p;
    p.l = 2 + k % 3;
    p.r = (k / 3) % 4;
    p.max_B = 3;
    p.count = 1;
    auto batch = generate_family(FamilyShape::Semistable, p, seed++);
    out.push_back(std::move(batch.front()));
  }
  return out;
}

std::vector<FamilyInstance> free_corpus(std::size_t count) {
  std::vector<FamilyInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    FamilyParams p;
    p.a = static_cast<int>(k % 5);
    out.push_back(generate_family(FamilyShape::Free, p, k).front());
  }
  return out;
}

std::vector<FamilyInstance> u_corpus(std::size_t count, std::uint64_t seed) {
  std::vector<FamilyInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    FamilyParams p;
    p.a = 2 + static_cast<int>(k % 3);
    out.push_back(generate_family(FamilyShape::UMonoid, p, seed + k).front());
  }
  return out;
}

std::vector<Word> sorted_words(std::vector<Word> ws) {
  std::sort(ws.begin(), ws.end());
  return ws;
}

// --- 1 ---------------------------------------------------------------------
Verdict detection(const std::vector<FamilyInstance>& corpus) {
  Verdict v;
  std::size_t recovered = 0, unique = 0;
  for (const auto& inst : corpus) {
    const auto& P = inst.hom.target();
    const auto found = detect_semistable(inst.hom, kBound);
    if (found && same_structure_up_to_order(P, *found, *inst.structure))
      ++recovered;
    else
      v.fail(inst.description + ": generating structure not recovered");
    const auto all = detect_all_semistable(inst.hom, DetectOptions{kBound, false});
    bool one = !all.empty();
    for (const auto& s : all) one = one && same_structure_up_to_order(P, s, *inst.structure);
    if (one)
      ++unique;
    else
      v.fail(inst.description + ": a second validated structure exists");
  }
  v.detail = std::to_string(recovered) + "/" + std::to_string(corpus.size()) + " recovered, " + std::to_string(unique) +
             " unique";
  return v;
}

// --- 2 ---------------------------------------------------------------------
Verdict split_equivalence(const std::vector<FamilyInstance>& semis, const std::vector<FamilyInstance>& frees) {
  Verdict v;
  std::size_t discrepancies = 0, checked = 0;
  auto check = [&](const FamilyInstance& inst, const std::vector<Word>& sigma, int support) {
    const auto& P = inst.hom.target();
    const auto rels = relations_of(P);
    const Word fq = inst.hom.images().empty() ? P.zero() : inst.hom.images().front();
    int cap = 2;
    for (const auto& [l, r] : rels) cap = std::max({cap, oracle::total(l), oracle::total(r)});
    cap += 1;
    bool all_outside = true;
    for (const auto& s : sigma) {
      const auto cls = oracle::congruence_class(rels, s, cap);
      bool in_image = false;
      if (!is_zero(fq))
        for (int k = 0; k <= cap && !in_image; ++k) in_image = cls.count(scale(fq, k)) > 0;
      all_outside = all_outside && oracle::irreducible(rels, s, cap) && !in_image;
    }
    const auto rep = splits(inst.hom, DetectOptions{kBound, false});
    const bool a = rep.result == Tri::False;
    const bool b = support >= 2;
    const bool c = all_outside;
    ++checked;
    if (rep.result == Tri::Undecided || a != b || b != c || !rep.three_way_consistent) {
      ++discrepancies;
      v.fail(inst.description + ": splits=" + std::string(to_string(rep.result)) + " support=" +
             std::to_string(support) + " sigma-test=" + (c ? "true" : "false"));
    }
  };
  for (const auto& inst : semis) {
    int support = 0;
    for (int d : inst.structure->delta) support += d != 0;
    check(inst, inst.structure->sigma, support);
  }
  for (const auto& inst : frees) {
    const std::size_t n = inst.hom.target().rank();
    std::vector<Word> sigma;
    for (std::size_t i = 0; i < n; ++i) sigma.push_back(unit_vector(n, i));
    check(inst, sigma, 0);
  }
  v.detail = std::to_string(checked) + " instances, " + std::to_string(discrepancies) + " discrepancies";
  return v;
}

// --- 3 ---------------------------------------------------------------------
oracle::GroupShape oracle_cokernel(const MonoidHom& h) {
  std::vector<std::vector<std::int64_t>> rows;
  const std::size_t n = h.target().rank();
  for (const auto& r : h.target().relations()) {
    std::vector<std::int64_t> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = r.lhs[i] - r.rhs[i];
    rows.push_back(row);
  }
  for (const auto& w : h.images()) rows.emplace_back(w.begin(), w.end());
  return oracle::cokernel_shape(rows, n);
}

Verdict torsion(const std::vector<FamilyInstance>& semis, const std::vector<FamilyInstance>& us) {
  Verdict v;
  for (const auto& inst : semis) {
    const auto lib = cokernel(inst.hom);
    const auto ref = oracle_cokernel(inst.hom);
    if (!lib.torsion_free() || !ref.torsion.empty() || lib.rank != ref.rank)
      v.fail(inst.description + ": cokernel " + to_string(lib));
  }
  for (const auto& inst : us) {
    const auto lib = cokernel(inst.hom);
    const auto ref = oracle_cokernel(inst.hom);
    const bool lib2 = std::count(lib.torsion_divisors.begin(), lib.torsion_divisors.end(), 2) == 1 &&
                      lib.torsion_divisors.size() == 1;
    if (!lib2 || ref.torsion != std::vector<std::int64_t>{2} || lib.rank != ref.rank)
      v.fail(inst.description + ": cokernel " + to_string(lib));
  }
  v.detail = std::to_string(semis.size()) + " semistable torsion-free, " + std::to_string(us.size()) +
             " u-monoid with Z/2";
  return v;
}

// --- 4 ---------------------------------------------------------------------
Verdict property_c(const std::vector<FamilyInstance>& semis) {
  Verdict v;
  std::size_t classes = 0;
  for (const auto& inst : semis) {
    const auto rep = property_C_pushout(inst.hom, *inst.structure, 6);
    classes += rep.classes_checked;
    if (!rep.verified) v.fail(inst.description + ": " + rep.detail);
  }
  v.detail = std::to_string(semis.size()) + " instances, " + std::to_string(classes) + " classes to degree 6";
  return v;
}

// --- 5 ---------------------------------------------------------------------
Verdict quotient_transport(const std::vector<FamilyInstance>& semis) {
  Verdict v;
  std::size_t quotients = 0;
  for (const auto& inst : semis) {
    const auto& s = *inst.structure;
    const Word mark = marking(inst.hom, kBound);
    for (std::size_t k = 0; k < s.sigma.size(); ++k) {
      if (s.delta[k] != 0) continue;
      const auto q = quotient_semistable(inst.hom, s, {s.sigma[k]}, kBound);
      ++quotients;
      const Tri ok = validate_semistable(q.f_bar, q.structure, kBound);
      bool same_mark = false;
      try {
        same_mark = marking(q.f_bar, kBound) == mark && q.structure.q0 == mark;
      } catch (const Error&) {
        same_mark = false;
      }
      if (ok != Tri::True || !same_mark)
        v.fail(inst.description + ": quotient by " + inst.hom.target().format(s.sigma[k]) + " validate=" +
               std::string(to_string(ok)));
    }
  }
  v.detail = std::to_string(quotients) + " single-generator quotients";
  return v;
}

// --- 6 ---------------------------------------------------------------------
Verdict normal_form_bijection() {
  Verdict v;
  std::mt19937_64 rng(6);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::size_t configs = 0;
  while (configs < 50) {
    oracle::SeriesConfig c;
    c.n = pick(1, 3);
    c.N = 4;
    c.d = pick(1, 5);
    c.T.assign(static_cast<std::size_t>(c.n), 0);
    while (oracle::total(c.T) == 0 || oracle::total(c.T) > 3)
      for (auto& e : c.T) e = pick(0, 2);
    const int terms = pick(1, 2);
    for (int k = 0; k < terms; ++k) {
      oracle::Vec J(static_cast<std::size_t>(c.n), 0);
      const int degJ = pick(0, oracle::total(c.T));
      for (int s = 0; s < degJ; ++s) ++J[static_cast<std::size_t>(pick(0, c.n - 1))];
      c.G.emplace_back(pick(1, 3), J);
    }
    Poly G;
    for (const auto& [tc, J] : c.G) {
      Mono m{tc};
      m.insert(m.end(), J.begin(), J.end());
      G[m] ^= 1u;
    }
    for (auto it = G.begin(); it != G.end();) it = it->second == 0 ? G.erase(it) : std::next(it);
    if (G.empty()) continue;
    c.G.clear();
    for (const auto& [m, coef] : G) c.G.emplace_back(m[0], oracle::Vec(m.begin() + 1, m.end()));
    ++configs;

    std::vector<std::string> vars;
    for (int i = 1; i <= c.n; ++i) vars.push_back("X" + std::to_string(i));
    const SeriesRing R(2, c.N, vars, SeriesRing::Relation{c.T, G}, c.d);
    const auto audit = oracle::audit_series(c);
    const auto lib_sigma = R.sigma_basis(c.d);
    std::set<Mono> lib_set(lib_sigma.begin(), lib_sigma.end());
    std::set<Mono> ref_set(audit.sigma.begin(), audit.sigma.end());
    std::ostringstream tag;
    tag << "n=" << c.n << " d=" << c.d << " T=" << to_string(c.T) << " G=" << R.format(G);
    if (lib_set != ref_set) v.fail(tag.str() + ": Sigma basis differs");
    if (audit.quotient_dim != audit.sigma.size()) v.fail(tag.str() + ": dimension mismatch");
    if (!audit.sigma_independent) v.fail(tag.str() + ": Sigma monomials dependent modulo the ideal");
    for (const auto& m : audit.box) {
      const SeriesElement e = nf_series(R, Poly{{m, 1}});
      oracle::Bits diff(audit.box.size());
      diff.flip(audit.index.at(m));
      bool in_sigma = true;
      for (const auto& [mm, coef] : e.terms()) {
        if (!ref_set.count(mm)) in_sigma = false;
        if (coef % 2) diff.flip(audit.index.at(mm));
      }
      if (!in_sigma || e.overflow() || !audit.ideal.contains(diff)) {
        v.fail(tag.str() + ": nf(" + R.format(Poly{{m, 1}}) + ") = " + e.to_string() + " is not a Sigma representative");
        break;
      }
    }
  }
  v.detail = std::to_string(configs) + " configurations";
  return v;
}

// --- 7 ---------------------------------------------------------------------
Verdict primary_decomposition() {
  Verdict v;
  std::size_t configs = 0, identities = 0;
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 2; ++n)
      for (int a = 1; a <= 2; ++a) {
        const int boxes = n == 0 ? 1 : (n == 1 ? 3 : 9);
        for (int bi = 0; bi < boxes; ++bi) {
          std::vector<int> B(static_cast<std::size_t>(n));
          for (int j = 0, r = bi; j < n; ++j, r /= 3) B[static_cast<std::size_t>(j)] = r % 3;
          int ibox = 1;
          for (int b : B) ibox *= b + 1;
          for (int ii = 0; ii < ibox; ++ii) {
            std::vector<int> I(static_cast<std::size_t>(n));
            for (int j = 0, r = ii; j < n; ++j) {
              const int m = B[static_cast<std::size_t>(j)] + 1;
              I[static_cast<std::size_t>(j)] = r % m;
              r /= m;
            }
            PrimaryDecompConfig c;
            c.l = l;
            c.n = n;
            c.a = a;
            c.B = B;
            c.I = I;
            c.p = 2;
            c.N = 4;
            c.d = 5;
            ++configs;
            const auto rep = primary_decomp_report(c);
            const auto ref = oracle::primary_identities(l, n, a, B, I);
            std::ostringstream tag;
            tag << "l=" << l << " n=" << n << " a=" << a << " B=" << to_string(B) << " I=" << to_string(I);
            if (rep.checks.size() != ref.size()) v.fail(tag.str() + ": identity count differs from oracle");
            for (const auto& chk : rep.checks) {
              ++identities;
              const auto it = ref.find(chk.name);
              if (!chk.passed) v.fail(tag.str() + ": " + chk.name + " fails: " + chk.statement);
              if (it == ref.end() || !it->second) v.fail(tag.str() + ": oracle rejects " + chk.name);
            }
          }
        }
      }
  v.detail = std::to_string(configs) + " configurations, " + std::to_string(identities) + " identities";
  return v;
}

// --- 8 ---------------------------------------------------------------------
std::vector<std::vector<Word>> support_layouts(int n, int l) {
  std::vector<std::vector<Word>> out;
  int total = 1;
  for (int k = 0; k < n; ++k) total *= l + 1;
  for (int code = 0; code < total; ++code) {
    std::vector<Word> sup(static_cast<std::size_t>(l), Word(static_cast<std::size_t>(n), 0));
    for (int k = 0, r = code; k < n; ++k, r /= l + 1)
      if (r % (l + 1)) sup[static_cast<std::size_t>(r % (l + 1) - 1)][static_cast<std::size_t>(k)] = 1;
    bool nonempty = true;
    for (const auto& s : sup) nonempty = nonempty && !is_zero(s);
    if (nonempty) out.push_back(sup);
  }
  return out;
}

Verdict unit_rigidity() {
  Verdict v;
  std::size_t cases = 0, enumerated = 0;
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d) {
      const SeriesRing R = SeriesRing::unit_rigidity_model(n, 2, 2, d);
      const std::vector<SeriesElement> J{R.t_power(1)};
      for (int l = 1; l <= 3; ++l) {
        auto layouts = support_layouts(n, l);
        if (n >= 2 && l >= 1) {
          std::vector<Word> doubled(static_cast<std::size_t>(l), Word(static_cast<std::size_t>(n), 0));
          if (l <= n) {
            for (int i = 0; i < l; ++i) doubled[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
            layouts.push_back(doubled);
          }
        }
        for (const auto& sup : layouts) {
          ++cases;
          const auto rep = unit_rigidity_report(R, J, sup, d);
          const auto ref = oracle::unit_rigidity_count(n, d, sup);
          std::ostringstream tag;
          tag << "n=" << n << " l=" << l << " d=" << d << " supports=";
          for (const auto& s : sup) tag << to_string(s);
          if (!rep.only_trivial || !rep.counterexample.empty()) v.fail(tag.str() + ": nontrivial tuple reported");
          if (rep.j_dim != ref.j_dim) v.fail(tag.str() + ": dim J " + std::to_string(rep.j_dim) + " vs oracle " +
                                             std::to_string(ref.j_dim));
          if (rep.solution_dim != 0 || ref.solution_dim != 0)
            v.fail(tag.str() + ": solution space has dimension " + std::to_string(ref.solution_dim));
          if (!rep.square_zero) v.fail(tag.str() + ": J^2 = 0 not confirmed");
          if (ref.enumerated) {
            ++enumerated;
            if (ref.enumerated_solutions != 1) v.fail(tag.str() + ": enumeration found extra tuples");
          }
        }
      }
    }
  v.detail = std::to_string(cases) + " cases, " + std::to_string(enumerated) + " fully enumerated";
  return v;
}

// --- 9 ---------------------------------------------------------------------
std::size_t words_up_to(std::size_t rank, int degree) {
  return oracle::exponent_vectors(rank, degree).size();
}

Verdict descent() {
  Verdict v;
  struct Pair {
    ToyRing A, B;
  };
  const std::vector<Pair> pairs{{ToyRing::prime(2), ToyRing::galois(2, 2)}, {ToyRing::prime(3), ToyRing::galois(3, 2)}};
  std::size_t runs = 0;
  for (const auto& [A, B] : pairs) {
    const RingHom f = RingHom::structure_map(A, B);
    const std::size_t unitsA = A.size() - 1, unitsB = B.size() - 1;
    for (std::size_t rank = 1; rank <= 2; ++rank) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < rank; ++i) names.push_back("m" + std::to_string(i + 1));
      const auto P = MonoidPresentation::free(names);
      // alpha sends each generator to 0 or to 1; generators sent to 1 join the unit face
      for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        std::vector<RingElt> alpha;
        std::size_t off_face = 0;
        for (std::size_t i = 0; i < rank; ++i) {
          const bool unit = mask & (1u << i);
          alpha.push_back(unit ? A.one() : A.zero());
          off_face += unit ? 0 : 1;
        }
        const LogMonoid M(P, A, alpha);
        const auto rep = descent_check(M, f, 4);
        ++runs;
        const std::size_t words = words_up_to(off_face, 4);
        const std::size_t eM = words * unitsA, eMB = words * unitsB;
        std::ostringstream tag;
        tag << B.describe() << " over " << A.describe() << " rank " << rank << " unit mask " << mask;
        if (rep.result != Tri::True || !rep.injective || !rep.equalizer) v.fail(tag.str() + ": " + rep.detail);
        if (rep.classes_M != eM || rep.classes_MB != eMB || rep.equalizer_size != eM)
          v.fail(tag.str() + ": class counts " + std::to_string(rep.classes_M) + "/" + std::to_string(rep.classes_MB) +
                 "/" + std::to_string(rep.equalizer_size) + " expected " + std::to_string(eM) + "/" +
                 std::to_string(eMB) + "/" + std::to_string(eM));
      }
    }
  }
  v.detail = std::to_string(runs) + " descent checks";
  return v;
}

// --- 10 --------------------------------------------------------------------
Verdict chart_trichotomy() {
  Verdict v;
  std::vector<FamilyInstance> corpus;
  for (int k = 0; corpus.size() < 100; ++k) {
    FamilyParams p;
    p.l = 2 + k % 3;
    p.r = (k / 3) % 4;
    corpus.push_back(generate_family(FamilyShape::Semistable, p, 5000 + static_cast<std::uint64_t>(k)).front());
  }
  for (auto& inst : free_corpus(100)) corpus.push_back(std::move(inst));
  for (auto& inst : u_corpus(100, 9000)) corpus.push_back(std::move(inst));
  std::size_t flags = 0;
  std::map<ChartCase, std::size_t> tally;
  for (const auto& inst : corpus) {
    const auto c = classify_chart(inst.hom, kBound);
    ++tally[c.chart_case];
    if (c.chart_case != inst.expected_case) {
      v.fail(inst.description + ": classified as case " + to_string(c.chart_case));
      continue;
    }
    const auto& P = inst.hom.target();
    switch (c.chart_case) {
      case ChartCase::I:
        if (sorted_words(boundary_monomial(c)) != sorted_words(inst.complement))
          v.fail(inst.description + ": boundary differs from Irr(N)");
        break;
      case ChartCase::II: {
        bool threw = false;
        try {
          (void)boundary_monomial(c);
        } catch (const CaseII&) {
          threw = true;
        }
        if (!threw) v.fail(inst.description + ": case II boundary did not raise");
        break;
      }
      case ChartCase::III: {
        std::vector<Word> expected;
        const auto& s = *inst.structure;
        for (std::size_t k = 0; k < s.sigma.size(); ++k)
          if (s.delta[k] == 0) expected.push_back(s.sigma[k]);
        if (!c.structure || !same_structure_up_to_order(P, *c.structure, s))
          v.fail(inst.description + ": structure differs from the generating one");
        if (sorted_words(boundary_monomial(c)) != sorted_words(expected))
          v.fail(inst.description + ": boundary differs from sigma minus Supp(Delta)");
        break;
      }
    }
    const std::uint32_t p = c.chart_case == ChartCase::II ? 3 : 2;
    const auto real = realize_chart(inst.hom, c, p, 4, 4);
    for (bool ok : check_regular_elements(real, 4)) {
      ++flags;
      if (!ok) v.fail(inst.description + ": a regular element fails is_regular");
    }
  }
  v.detail = std::to_string(corpus.size()) + " instances (I " + std::to_string(tally[ChartCase::I]) + ", II " +
             std::to_string(tally[ChartCase::II]) + ", III " + std::to_string(tally[ChartCase::III]) + "), " +
             std::to_string(flags) + " regularity flags";
  return v;
}

}  // namespace

int main() {
  const auto semis = semistable_corpus();
  const auto frees = free_corpus(100);
  const auto us = u_corpus(60, 300);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"semistable detection recovers the generating structure uniquely", [&] { return detection(semis); }},
      {"split criterion three-way equivalence", [&] { return split_equivalence(semis, frees); }},
      {"cokernel torsion: semistable free, u-monoid Z/2", [&] { return torsion(semis, us); }},
      {"property (C) pushout isomorphism to degree 6", [&] { return property_c(semis); }},
      {"quotient transport keeps the structure and marking", [&] { return quotient_transport(semis); }},
      {"normal-form bijectivity of the Sigma basis", [] { return normal_form_bijection(); }},
      {"primary decomposition identities (3)-(6)", [] { return primary_decomposition(); }},
      {"unit rigidity: only the trivial tuple", [] { return unit_rigidity(); }},
      {"descent exactness for F2->F4 and F3->F9", [] { return descent(); }},
      {"chart trichotomy, boundary and regular elements", [] { return chart_trichotomy(); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << v.detail
              << (v.detail.empty() ? "" : ", ") << timing << ")";
    if (!v.pass) std::cout << " first failure: " << v.first_failure;
    std::cout << std::endl;
    failures += v.pass ? 0 : 1;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
