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

#include "logmonoid/semistable.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace logmonoid {

std::size_t SemistableStructure::support_size() const {
  return static_cast<std::size_t>(std::count_if(delta.begin(), delta.end(), [](int d) { return d != 0; }));
}

std::vector<std::size_t> SemistableStructure::delta_support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i] != 0) out.push_back(i);
  return out;
}

namespace {

Word combine(const std::vector<Word>& sigma, const std::vector<int>& coeffs, std::size_t n) {
  Word out(n, 0);
  for (std::size_t i = 0; i < sigma.size(); ++i)
    if (coeffs[i] != 0)
      for (std::size_t j = 0; j < n; ++j) out[j] += coeffs[i] * sigma[i][j];
  return out;
}

void check_shape(const MonoidHom& h, const SemistableStructure& s) {
  const std::size_t k = s.sigma.size();
  if (s.delta.size() != k || s.B.size() != k)
    throw IllFormedStructure("Delta and B must have one entry per sigma element");
  for (const auto& x : s.sigma)
    if (x.size() != h.target().rank()) throw IllFormedStructure("sigma element has wrong length");
  if (s.q0.size() != h.source().rank()) throw IllFormedStructure("q0 has wrong length");
  for (std::size_t i = 0; i < k; ++i)
    if (s.B[i] < 0 || s.delta[i] < 0) throw IllFormedStructure("Delta and B must be non-negative");
  for (int v : s.q0)
    if (v < 0) throw IllFormedStructure("q0 must be non-negative");
}

ValidationReport fail(ValidationReport rep, const char* cond, std::string detail) {
  rep.result = Tri::False;
  rep.failed_condition = cond;
  rep.detail = std::move(detail);
  return rep;
}

bool in_image(const MonoidHom& h, const Word& x, int bound) { return preimage(h, x, bound).has_value(); }

}  // namespace

ValidationReport validate_semistable_report(const MonoidHom& h, const SemistableStructure& s, int bound) {
  check_shape(h, s);
  ValidationReport rep;
  rep.bound_used = bound;
  const auto& P = h.target();
  const auto& Q = h.source();
  const std::size_t n = P.rank(), k = s.sigma.size();

  // (S1)
  if (is_zero(Q.normal_form(s.q0))) return fail(rep, "S1", "q0 = 0");
  if (s.support_size() == 0) return fail(rep, "S1", "Supp(Delta) is empty");
  for (int d : s.delta)
    if (d > 1) return fail(rep, "S1", "Delta has an entry larger than 1");

  // (S3)
  for (std::size_t i = 0; i < k; ++i)
    if (s.delta[i] != 0 && s.B[i] != 0) return fail(rep, "S3", "Supp(Delta) meets Supp(B)");
  const Word lhs = combine(s.sigma, s.delta, n);
  const Word rhs = add(h.apply(s.q0), combine(s.sigma, s.B, n));
  if (P.equals(lhs, rhs) != Tri::True)
    return fail(rep, "S3", P.format(lhs) + " != " + P.format(rhs));

  // (S2) injectivity of N^sigma -> P
  std::unordered_map<Word, Word, WordHash> sigma_index;  // nf(T.sigma) -> T
  const auto Ts = words_up_to_degree(k, bound);
  for (const auto& T : Ts) {
    auto [it, fresh] = sigma_index.emplace(P.normal_form(combine(s.sigma, T, n)), T);
    if (!fresh)
      return fail(rep, "S2", "T.sigma is not injective: " + to_string(it->second) + " and " + to_string(T));
  }

  // (S2) generation by sigma and f(Q)
  const auto Qc = Q.classes_up_to(bound);
  std::unordered_set<Word, WordHash> cheap;
  for (const auto& x : s.sigma) cheap.insert(P.normal_form(x));
  for (const auto& im : h.images()) cheap.insert(P.normal_form(im));
  for (std::size_t g = 0; g < n; ++g) {
    const Word target = P.normal_form(P.generator(g));
    if (is_zero(target) || cheap.count(target)) continue;
    bool found = false;
    for (const auto& q : Qc) {
      const int rest = bound - degree(q);
      if (rest < 0) continue;
      for (const auto& T : words_up_to_degree(k, rest)) {
        if (P.normal_form(add(h.apply(q), combine(s.sigma, T, n))) == target) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return fail(rep, "S2", "generator " + P.generators()[g] + " is not generated by sigma and f(Q)");
  }

  // (S4) relations T.sigma = f(q) + T'.sigma with q != 0
  const auto supp = s.delta_support();
  for (const auto& q : Qc) {
    if (is_zero(q)) continue;
    const Word fq = h.apply(q);
    for (const auto& Tp : Ts) {
      auto it = sigma_index.find(P.normal_form(add(fq, combine(s.sigma, Tp, n))));
      if (it == sigma_index.end()) continue;
      for (std::size_t x : supp)
        if (it->second[x] == 0)
          return fail(rep, "S4", "relation " + to_string(it->second) + ".sigma = f(" + Q.format(q) + ") + " +
                                     to_string(Tp) + ".sigma vanishes on Supp(Delta)");
    }
  }
  rep.result = Tri::True;
  return rep;
}

Tri validate_semistable(const MonoidHom& h, const SemistableStructure& s, int bound) {
  return validate_semistable_report(h, s, bound).result;
}

std::vector<Word> canonical_sigma(const MonoidHom& h, int bound) {
  std::vector<Word> out;
  for (auto& x : irreducibles(h.target()))
    if (!in_image(h, x, bound)) out.push_back(std::move(x));
  return out;
}

namespace {

// Candidate structures on a fixed sigma with a fixed Delta.
void solve_for_delta(const MonoidHom& h, const std::vector<Word>& sigma, unsigned mask, int bound,
                     std::vector<SemistableStructure>& out) {
  const auto& P = h.target();
  const auto& Q = h.source();
  const std::size_t n = P.rank(), k = sigma.size(), nq = Q.rank();
  std::vector<int> delta(k, 0);
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < k; ++i) {
    if (mask & (1u << i)) delta[i] = 1;
    else free_idx.push_back(i);
  }
  const Word target = combine(sigma, delta, n);

  auto try_candidate = [&](const Word& q0, const std::vector<int>& B) {
    if (is_zero(Q.normal_form(q0))) return;
    if (P.equals(target, add(h.apply(q0), combine(sigma, B, n))) != Tri::True) return;
    SemistableStructure s{sigma, Q.normal_form(q0), delta, B};
    if (validate_semistable(h, s, bound) == Tri::True) out.push_back(std::move(s));
  };

  std::vector<IntVector> columns;
  for (std::size_t c = 0; c < nq; ++c) columns.emplace_back(h.images()[c].begin(), h.images()[c].end());
  for (std::size_t j : free_idx) columns.emplace_back(sigma[j].begin(), sigma[j].end());
  for (const auto& r : P.relations()) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = r.lhs[i] - r.rhs[i];
    columns.push_back(std::move(v));
  }
  auto sol = solve_rational(columns, IntVector(target.begin(), target.end()));
  if (!sol) return;  // no solution even in P^gr (x) Q
  const std::size_t m = nq + free_idx.size();
  bool unique = true;
  for (const auto& kv : sol->kernel)
    for (std::size_t i = 0; i < m; ++i)
      if (kv[i].numerator() != 0) unique = false;
  if (unique) {
    Word q0(nq);
    std::vector<int> B(k, 0);
    for (std::size_t i = 0; i < m; ++i) {
      const Rational& v = sol->particular[i];
      if (v.denominator() != 1 || v.numerator() < 0) return;
      if (i < nq) q0[i] = static_cast<int>(v.numerator());
      else B[free_idx[i - nq]] = static_cast<int>(v.numerator());
    }
    try_candidate(q0, B);
    return;
  }
  for (const auto& q0 : Q.classes_up_to(bound)) {
    if (is_zero(q0)) continue;
    for (const auto& b : words_up_to_degree(free_idx.size(), bound)) {
      std::vector<int> B(k, 0);
      for (std::size_t i = 0; i < free_idx.size(); ++i) B[free_idx[i]] = b[i];
      try_candidate(q0, B);
    }
  }
}

void detect_on_sigma(const MonoidHom& h, const std::vector<Word>& sigma, int bound,
                     std::vector<SemistableStructure>& out) {
  const std::size_t k = sigma.size();
  if (k == 0 || k > 16) return;
  for (unsigned mask = 1; mask < (1u << k); ++mask) solve_for_delta(h, sigma, mask, bound, out);
}

}  // namespace

std::vector<SemistableStructure> detect_all_semistable(const MonoidHom& h, const DetectOptions& opts) {
  std::vector<SemistableStructure> out;
  const auto& Q = h.source();
  bool q_trivial = true;
  for (std::size_t i = 0; i < Q.rank(); ++i)
    if (!is_zero(Q.normal_form(Q.generator(i)))) q_trivial = false;
  if (q_trivial) return out;  // (S1) needs q0 != 0

  const auto sigma = canonical_sigma(h, opts.bound);
  detect_on_sigma(h, sigma, opts.bound, out);

  const auto& P = h.target();
  if (opts.search_sigma_subsets && P.rank() <= 6) {
    std::vector<Word> pool;
    for (std::size_t i = 0; i < P.rank(); ++i) {
      Word nf = P.normal_form(P.generator(i));
      if (!is_zero(nf) && std::find(pool.begin(), pool.end(), nf) == pool.end()) pool.push_back(nf);
    }
    std::sort(pool.begin(), pool.end(), [&](const Word& a, const Word& b) { return P.compare(a, b) < 0; });
    for (unsigned mask = 1; mask < (1u << pool.size()); ++mask) {
      std::vector<Word> cand;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask & (1u << i)) cand.push_back(pool[i]);
      if (cand == sigma) continue;
      detect_on_sigma(h, cand, opts.bound, out);
    }
  }
  return out;
}

std::optional<SemistableStructure> detect_semistable(const MonoidHom& h, int bound) {
  auto all = detect_all_semistable(h, DetectOptions{bound, false});
  if (all.empty()) return std::nullopt;
  return all.front();
}

MonoidPresentation submonoid_presentation(const MonoidPresentation& P, const std::vector<Word>& gens,
                                          int bound) {
  std::vector<std::string> names;
  for (const auto& g : gens) {
    std::string name = P.format(g);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  const std::size_t k = gens.size();
  std::vector<Relation> rels;
  MonoidPresentation current(names, rels, bound);
  std::unordered_map<Word, Word, WordHash> seen;
  for (const auto& T : words_up_to_degree(k, bound)) {
    Word image = P.normal_form(combine(gens, T, P.rank()));
    auto [it, fresh] = seen.emplace(image, T);
    if (fresh) continue;
    if (current.equals(it->second, T) == Tri::True) continue;
    rels.push_back({T, it->second});
    current = MonoidPresentation(names, rels, bound);
  }
  return current;
}

SplitReport splits(const MonoidHom& h, const DetectOptions& opts) {
  SplitReport rep;
  rep.bound_used = opts.bound;
  const auto& P = h.target();
  const auto& Q = h.source();
  const std::size_t n = P.rank();
  rep.complement_generators = canonical_sigma(h, opts.bound);
  const auto& sigma = rep.complement_generators;
  const std::size_t k = sigma.size();

  // Unique decomposition f(q) + n, enumerated by increasing size.
  const auto Qc = Q.classes_up_to(opts.bound);
  std::unordered_map<Word, std::pair<Word, Word>, WordHash> seen;  // image -> (q, nf(T.sigma))
  for (int size = 0; size <= opts.bound && !rep.collision; ++size) {
    for (const auto& q : Qc) {
      const int rest = size - degree(q);
      if (rest < 0) continue;
      for (const auto& T : words_of_degree(k, rest)) {
        Word tn = P.normal_form(combine(sigma, T, n));
        Word image = P.normal_form(add(h.apply(q), tn));
        auto [it, fresh] = seen.emplace(image, std::make_pair(q, tn));
        if (!fresh && (Q.normal_form(it->second.first) != Q.normal_form(q) || it->second.second != tn)) {
          rep.collision = std::vector<Word>{it->second.first, it->second.second, q, tn};
          break;
        }
      }
      if (rep.collision) break;
    }
  }

  rep.structures = detect_all_semistable(h, opts);
  const SemistableStructure* nonsplit = nullptr;
  for (const auto& s : rep.structures)
    if (s.support_size() >= 2) {
      nonsplit = &s;
      break;
    }

  if (rep.collision) {
    rep.result = Tri::False;
    rep.detail = "f(q) + n is not a unique decomposition";
  } else if (nonsplit) {
    rep.result = Tri::False;
    rep.detail = "validated semistable structure with #Supp(Delta) >= 2";
  } else {
    rep.result = Tri::True;
    rep.complement = submonoid_presentation(P, sigma, opts.bound);
  }

  // three-way equivalence on every validated structure
  std::vector<Word> irr = irreducibles(P);
  for (const auto& s : rep.structures) {
    const bool not_split = rep.result == Tri::False;
    const bool wide = s.support_size() >= 2;
    bool all_irr = true;
    for (const auto& x : s.sigma) {
      Word nf = P.normal_form(x);
      if (std::find(irr.begin(), irr.end(), nf) == irr.end() || in_image(h, nf, opts.bound)) all_irr = false;
    }
    if (not_split != wide || wide != all_irr) rep.three_way_consistent = false;
  }
  return rep;
}

Word marking(const MonoidHom& h, int bound) {
  auto s = detect_semistable(h, bound);
  if (!s) throw NoSemistableStructure("no semistable structure found at bound " + std::to_string(bound));
  if (s->support_size() < 2) throw SplitHom("the homomorphism splits; its marking is not defined");
  return s->q0;
}

namespace {

struct QuotientData {
  MonoidPresentation monoid;
  std::vector<int> new_index;  // old generator -> new generator or -1
};

QuotientData build_quotient(const MonoidPresentation& P, const std::vector<Word>& n_gens) {
  std::vector<Relation> rels = P.relations();
  for (const auto& w : n_gens) {
    if (w.size() != P.rank()) throw InvalidArgument("N generator has wrong length");
    rels.push_back({w, P.zero()});
  }
  MonoidPresentation full(P.generators(), rels, P.bound());
  QuotientData out;
  out.new_index.assign(P.rank(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < P.rank(); ++i) {
    if (is_zero(full.normal_form(full.generator(i)))) continue;
    out.new_index[i] = static_cast<int>(names.size());
    names.push_back(P.generators()[i]);
  }
  auto shrink = [&](const Word& w) {
    Word v(names.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
      if (out.new_index[i] >= 0) v[static_cast<std::size_t>(out.new_index[i])] = w[i];
    return v;
  };
  std::vector<Relation> new_rels;
  for (const auto& r : rels) {
    Relation nr{shrink(r.lhs), shrink(r.rhs)};
    if (nr.lhs != nr.rhs) new_rels.push_back(std::move(nr));
  }
  out.monoid = MonoidPresentation(std::move(names), std::move(new_rels), P.bound());
  return out;
}

Word project(const QuotientData& q, const Word& w) {
  Word v(q.monoid.rank(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (q.new_index[i] >= 0) v[static_cast<std::size_t>(q.new_index[i])] = w[i];
  return q.monoid.normal_form(v);
}

}  // namespace

MonoidPresentation quotient_monoid(const MonoidPresentation& P, const std::vector<Word>& n_gens) {
  return build_quotient(P, n_gens).monoid;
}

QuotientResult quotient_semistable(const MonoidHom& h, const SemistableStructure& s,
                                   const std::vector<Word>& n_gens, int bound) {
  const auto& P = h.target();
  const auto& Q = h.source();
  if (validate_semistable(h, s, bound) != Tri::True)
    throw HypothesisFailure("(iii) the given structure is not a semistable structure of P over Q");
  QuotientData qd = build_quotient(P, n_gens);
  const auto& Pbar = qd.monoid;
  if (is_sharp(Pbar) != Tri::True) throw HypothesisFailure("(i) P/N is not sharp");
  if (is_cancellative(Pbar, bound) != Tri::True) throw HypothesisFailure("(i) P/N is not integral");
  if (is_integral_hom(h, bound).result != Tri::True) throw HypothesisFailure("(ii) f is not integral");
  std::vector<Word> fbar_images;
  for (const auto& im : h.images()) fbar_images.push_back(project(qd, im));
  MonoidHom fbar(Q, Pbar, std::move(fbar_images));
  if (is_integral_hom(fbar, bound).result != Tri::True) throw HypothesisFailure("(ii) f-bar is not integral");

  QuotientResult out{Pbar, fbar, {}, {}};
  for (std::size_t i = 0; i < s.sigma.size(); ++i) {
    Word img = project(qd, s.sigma[i]);
    if (is_zero(img)) continue;
    if (std::find(out.structure.sigma.begin(), out.structure.sigma.end(), img) != out.structure.sigma.end())
      throw CheckFailed("alpha: sigma' -> sigma-bar is not injective at " + P.format(s.sigma[i]));
    out.structure.sigma.push_back(std::move(img));
    out.structure.delta.push_back(s.delta[i]);
    out.structure.B.push_back(s.B[i]);
    out.alpha.push_back(i);
  }
  out.structure.q0 = s.q0;
  auto rep = validate_semistable_report(fbar, out.structure, bound);
  if (rep.result != Tri::True)
    throw CheckFailed("quotient structure fails " + rep.failed_condition + ": " + rep.detail);
  return out;
}

RelationPropertyReport check_relation_properties(const MonoidHom& h, const SemistableStructure& s, int degree) {
  check_shape(h, s);
  RelationPropertyReport rep;
  const auto& P = h.target();
  const auto& Q = h.source();
  const std::size_t n = P.rank(), k = s.sigma.size();
  const auto supp = s.delta_support();
  struct Entry {
    Word T;
    Word q;
  };
  std::map<Word, std::vector<Entry>> groups;
  const auto Qc = Q.classes_up_to(degree);
  for (const auto& T : words_up_to_degree(k, degree))
    for (const auto& q : Qc) groups[P.normal_form(add(h.apply(q), combine(s.sigma, T, n)))].push_back({T, q});

  auto deficient = [&](const Word& T) {
    for (std::size_t x : supp)
      if (T[x] == 0) return true;
    return false;
  };
  for (const auto& [image, entries] : groups) {
    // (B)
    const Entry* first = nullptr;
    for (const auto& e : entries) {
      if (!deficient(e.T)) continue;
      ++rep.instances_B;
      if (!first) {
        first = &e;
      } else if (first->T != e.T || first->q != e.q) {
        rep.result = Tri::False;
        rep.counterexample = "(B): " + to_string(first->T) + ".sigma + f(" + Q.format(first->q) + ") = " +
                             to_string(e.T) + ".sigma + f(" + Q.format(e.q) + ")";
        return rep;
      }
    }
    // (A)
    for (const auto& lhs : entries) {
      if (!is_zero(lhs.q)) continue;
      for (const auto& rhs : entries) {
        if (is_zero(rhs.q) || !is_zero(meet(lhs.T, rhs.T))) continue;
        ++rep.instances_A;
        const int m = supp.empty() ? 0 : lhs.T[supp.front()];
        bool ok = true;
        for (std::size_t i = 0; i < k; ++i)
          if (lhs.T[i] != m * s.delta[i] || rhs.T[i] != m * s.B[i]) ok = false;
        if (ok && Q.normal_form(rhs.q) != Q.normal_form(scale(s.q0, m))) ok = false;
        if (!ok) {
          rep.result = Tri::False;
          rep.counterexample = "(A): " + to_string(lhs.T) + ".sigma = f(" + Q.format(rhs.q) + ") + " +
                               to_string(rhs.T) + ".sigma";
          return rep;
        }
      }
    }
  }
  rep.result = Tri::True;
  return rep;
}

PropertyCReport property_C_pushout(const MonoidHom& h, const SemistableStructure& s, int degree, int bound) {
  check_shape(h, s);
  const auto& P = h.target();
  const auto& Q = h.source();
  const std::size_t nq = Q.rank();
  std::vector<std::size_t> D, E;
  for (std::size_t i = 0; i < s.sigma.size(); ++i) (s.delta[i] ? D : E).push_back(i);

  auto fresh_name = [](std::vector<std::string>& names, std::string name) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  };
  std::vector<std::string> lnames = Q.generators();
  for (std::size_t e : E) fresh_name(lnames, P.format(s.sigma[e]));
  std::vector<Relation> lrels;
  for (const auto& r : Q.relations()) {
    Word a(r.lhs), b(r.rhs);
    a.resize(lnames.size(), 0);
    b.resize(lnames.size(), 0);
    lrels.push_back({a, b});
  }
  MonoidPresentation L(lnames, lrels, bound);
  std::vector<std::string> rnames;
  for (std::size_t d : D) fresh_name(rnames, P.format(s.sigma[d]));
  MonoidPresentation R = MonoidPresentation::free(rnames, bound);
  MonoidPresentation N = MonoidPresentation::free({"e"}, bound);

  Word a_img(s.q0);
  for (std::size_t e : E) a_img.push_back(s.B[e]);
  MonoidHom a(N, L, {a_img});
  MonoidHom b(N, R, {Word(D.size(), 1)});
  PushoutMonoid po(a, b, bound);

  std::vector<Word> alpha_images;
  for (std::size_t c = 0; c < nq; ++c) alpha_images.push_back(h.images()[c]);
  for (std::size_t e : E) alpha_images.push_back(s.sigma[e]);
  std::vector<Word> beta_images;
  for (std::size_t d : D) beta_images.push_back(s.sigma[d]);
  MonoidHom gamma = factorize(po, MonoidHom(L, P, alpha_images), MonoidHom(R, P, beta_images));

  PropertyCReport rep{false, 0, po.amalgamated_presentation(), gamma.images(), {}};
  const std::size_t nl = L.rank();
  std::unordered_map<Word, PushoutMonoid::Element, WordHash> first_by_image;
  for (const auto& w : words_up_to_degree(nl + R.rank(), degree)) {
    PushoutMonoid::Element e{Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(nl)),
                             Word(w.begin() + static_cast<std::ptrdiff_t>(nl), w.end())};
    Word image = P.normal_form(gamma.apply(w));
    auto [it, fresh] = first_by_image.emplace(image, e);
    if (fresh) continue;
    if (po.equality_witness(it->second, e)) continue;
    if (po.integral() && po.key(it->second) == po.key(e)) continue;
    throw IsoCheckFailed("gamma identifies distinct pushout classes " + to_string(po.to_amalgamated(it->second)) +
                         " and " + to_string(w));
  }
  rep.classes_checked = first_by_image.size();
  for (std::size_t g = 0; g < P.rank(); ++g) {
    Word target = P.normal_form(P.generator(g));
    if (is_zero(target) || first_by_image.count(target)) continue;
    throw IsoCheckFailed("generator " + P.generators()[g] + " of P is not hit by gamma within degree " +
                         std::to_string(degree));
  }
  rep.verified = true;
  return rep;
}

std::string to_string(const MonoidHom& h, const SemistableStructure& s) {
  std::ostringstream os;
  os << "sigma={";
  for (std::size_t i = 0; i < s.sigma.size(); ++i) os << (i ? "," : "") << h.target().format(s.sigma[i]);
  os << "}, q0=" << h.source().format(s.q0) << ", Delta=(";
  for (std::size_t i = 0; i < s.delta.size(); ++i) os << (i ? "," : "") << s.delta[i];
  os << "), B=(";
  for (std::size_t i = 0; i < s.B.size(); ++i) os << (i ? "," : "") << s.B[i];
  os << ")";
  return os.str();
}

}  // namespace logmonoid
