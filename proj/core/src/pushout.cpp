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

#include "logmonoid/pushout.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace logmonoid {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    WordHash h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

IntVector relation_row(const Relation& r, std::size_t offset, std::size_t dim) {
  IntVector v(dim, 0);
  for (std::size_t i = 0; i < r.lhs.size(); ++i) v[offset + i] = r.lhs[i] - r.rhs[i];
  return v;
}

}  // namespace

PushoutMonoid::PushoutMonoid(MonoidHom f, MonoidHom g, int bound)
    : f_(std::move(f)), g_(std::move(g)), bound_(bound), memo_(std::make_shared<Memo>()) {
  if (!f_.source().same_as(g_.source()))
    throw IllFormedHom("pushout legs must share their source monoid");
  if (bound_ <= 0) throw InvalidArgument("pushout bound must be positive");
  const std::size_t np = left().rank(), nr = right().rank(), dim = np + nr;
  IntRows rows;
  for (const auto& r : left().relations()) rows.push_back(relation_row(r, 0, dim));
  for (const auto& r : right().relations()) rows.push_back(relation_row(r, np, dim));
  for (std::size_t k = 0; k < base().rank(); ++k) {
    IntVector v(dim, 0);
    for (std::size_t i = 0; i < np; ++i) v[i] = f_.images()[k][i];
    for (std::size_t i = 0; i < nr; ++i) v[np + i] = -g_.images()[k][i];
    rows.push_back(std::move(v));
  }
  lattice_ = std::make_shared<const Lattice>(dim, rows);
  base_classes_ = base().classes_up_to(bound_);
  integral_ = is_cancellative(left(), bound_) == Tri::True &&
              is_cancellative(right(), bound_) == Tri::True;
}

PushoutMonoid::Element PushoutMonoid::alpha(const Word& p) const {
  return {left().normal_form(p), right().zero()};
}

PushoutMonoid::Element PushoutMonoid::beta(const Word& r) const {
  return {left().zero(), right().normal_form(r)};
}

PushoutMonoid::Element PushoutMonoid::add(const Element& a, const Element& b) const {
  return {left().normal_form(logmonoid::add(a.p, b.p)), right().normal_form(logmonoid::add(a.r, b.r))};
}

std::optional<std::pair<Word, Word>> PushoutMonoid::equality_witness(const Element& a,
                                                                      const Element& b) const {
  const auto& P = left();
  const auto& R = right();
  // index q' by (p' + f(q'), r + g(q'))
  std::unordered_map<std::pair<Word, Word>, std::size_t, PairHash> index;
  for (std::size_t j = 0; j < base_classes_.size(); ++j) {
    const Word& q = base_classes_[j];
    index.emplace(std::make_pair(P.normal_form(logmonoid::add(b.p, f_.apply(q))),
                                 R.normal_form(logmonoid::add(a.r, g_.apply(q)))),
                  j);
  }
  for (const auto& q : base_classes_) {
    auto it = index.find(std::make_pair(P.normal_form(logmonoid::add(a.p, f_.apply(q))),
                                        R.normal_form(logmonoid::add(b.r, g_.apply(q)))));
    if (it != index.end()) return std::make_pair(q, base_classes_[it->second]);
  }
  return std::nullopt;
}

Tri PushoutMonoid::equals(const Element& a, const Element& b) const {
  if (equality_witness(a, b)) return Tri::True;
  if (key(a) != key(b)) return Tri::False;
  return integral_ ? Tri::True : Tri::Undecided;
}

IntVector PushoutMonoid::key(const Element& a) const {
  const Word w = concat(a.p, a.r);
  return lattice_->reduce(IntVector(w.begin(), w.end()));
}

std::vector<PushoutMonoid::Element> PushoutMonoid::classes_up_to(int d) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->classes.find(d);
    if (it != memo_->classes.end()) return it->second;
  }
  const std::size_t np = left().rank(), nr = right().rank();
  std::vector<Element> out;
  if (integral_) {
    std::set<IntVector> seen;
    for (const auto& w : words_up_to_degree(np + nr, d)) {
      Element e{Word(w.begin(), w.begin() + np), Word(w.begin() + np, w.end())};
      if (seen.insert(key(e)).second) out.push_back(std::move(e));
    }
  } else {
    for (const auto& w : words_up_to_degree(np + nr, d)) {
      Element e{Word(w.begin(), w.begin() + np), Word(w.begin() + np, w.end())};
      bool fresh = true;
      for (const auto& o : out) {
        Tri t = equals(e, o);
        if (t == Tri::Undecided)
          throw UndecidedAtBound("pushout class equality undecided at bound " + std::to_string(bound_));
        if (t == Tri::True) {
          fresh = false;
          break;
        }
      }
      if (fresh) out.push_back(std::move(e));
    }
  }
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->classes.emplace(d, std::move(out)).first->second;
}

MonoidPresentation PushoutMonoid::amalgamated_presentation() const {
  const auto& P = left();
  const auto& R = right();
  const std::size_t np = P.rank(), nr = R.rank(), dim = np + nr;
  std::unordered_set<std::string> pnames(P.generators().begin(), P.generators().end());
  std::vector<std::string> names = P.generators();
  for (const auto& n : R.generators()) {
    std::string name = n;
    while (pnames.count(name) || std::find(names.begin(), names.end(), name) != names.end()) name += "'";
    names.push_back(name);
  }
  std::vector<Relation> rels;
  auto widen = [&](const Word& w, std::size_t offset) {
    Word out(dim, 0);
    std::copy(w.begin(), w.end(), out.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
  };
  for (const auto& r : P.relations()) rels.push_back({widen(r.lhs, 0), widen(r.rhs, 0)});
  for (const auto& r : R.relations()) rels.push_back({widen(r.lhs, np), widen(r.rhs, np)});
  for (std::size_t k = 0; k < base().rank(); ++k)
    rels.push_back({widen(f_.images()[k], 0), widen(g_.images()[k], np)});
  return MonoidPresentation(std::move(names), std::move(rels), bound_);
}

std::optional<MonoidPresentation> PushoutMonoid::presentation() const {
  auto m = amalgamated_presentation();
  if (is_cancellative(m, bound_) != Tri::True) return std::nullopt;
  return m;
}

Word PushoutMonoid::to_amalgamated(const Element& a) const { return concat(a.p, a.r); }

MonoidHom factorize(const PushoutMonoid& po, const MonoidHom& alpha_p, const MonoidHom& beta_p) {
  if (!alpha_p.source().same_as(po.left()) || !beta_p.source().same_as(po.right()))
    throw IllFormedHom("factorization legs must start at the pushout factors");
  const auto& M = alpha_p.target();
  if (!beta_p.target().same_as(M)) throw IllFormedHom("factorization legs must share a target");
  std::vector<Word> delta;
  for (std::size_t k = 0; k < po.base().rank(); ++k) {
    Word a = alpha_p.apply(po.f().images()[k]);
    Word b = beta_p.apply(po.g().images()[k]);
    if (M.equals(a, b) != Tri::True)
      throw HypothesisFailure("square does not commute on base generator " + po.base().generators()[k]);
    delta.push_back(std::move(a));
  }
  // m + delta(q) = m' + delta(q) must force m = m'
  const auto classes = M.classes_up_to(std::max(0, po.bound() - 1));
  for (const auto& d : delta) {
    std::unordered_map<Word, Word, WordHash> seen;
    for (const auto& m : classes) {
      auto [it, fresh] = seen.emplace(M.normal_form(add(m, d)), m);
      if (!fresh && it->second != m)
        throw HypothesisFailure("cancellation fails in target: " + M.format(m) + " + " + M.format(d) +
                                " = " + M.format(it->second) + " + " + M.format(d));
    }
  }
  std::vector<Word> images = alpha_p.images();
  images.insert(images.end(), beta_p.images().begin(), beta_p.images().end());
  return MonoidHom(po.amalgamated_presentation(), M, std::move(images));
}

IsoReport iterate_iso(const MonoidHom& f, const MonoidHom& g, const MonoidHom& h, int degree, int bound) {
  if (!g.target().same_as(h.source())) throw IllFormedHom("h must start at the target of g");
  IsoReport rep;
  const auto& R = h.source();
  const auto& S = h.target();
  const auto s_classes = S.classes_up_to(std::max(0, bound - 1));
  for (std::size_t k = 0; k < R.rank(); ++k) {
    std::unordered_map<Word, Word, WordHash> seen;
    for (const auto& s : s_classes) {
      auto [it, fresh] = seen.emplace(S.normal_form(add(s, h.apply(R.generator(k)))), s);
      if (!fresh && it->second != s)
        throw HypothesisFailure("cancellation by h(" + R.generators()[k] + ") fails in " + S.format(s));
    }
  }
  PushoutMonoid lhs(f, h.compose_after(g), bound);
  PushoutMonoid inner(f, g, bound);
  auto mid = inner.presentation();
  if (!mid) throw HypothesisFailure("inner pushout has no cancellative presentation within the bound");
  std::vector<Word> beta_images;
  for (std::size_t k = 0; k < R.rank(); ++k) beta_images.push_back(inner.to_amalgamated(inner.beta(R.generator(k))));
  PushoutMonoid rhs(MonoidHom(R, *mid, std::move(beta_images)), h, bound);
  if (!lhs.integral() || !rhs.integral()) {
    rep.detail = "pushout factors not integral within bound";
    return rep;
  }
  auto phi = [&](const PushoutMonoid::Element& e) {
    return PushoutMonoid::Element{mid->normal_form(inner.to_amalgamated(inner.alpha(e.p))), e.r};
  };
  std::map<IntVector, IntVector> forward, backward;
  const std::size_t np = lhs.left().rank();
  for (const auto& w : words_up_to_degree(np + S.rank(), degree)) {
    PushoutMonoid::Element e{Word(w.begin(), w.begin() + np), Word(w.begin() + np, w.end())};
    IntVector kl = lhs.key(e), kr = rhs.key(phi(e));
    auto [fi, ff] = forward.emplace(kl, kr);
    auto [bi, bf] = backward.emplace(kr, kl);
    if ((!ff && fi->second != kr) || (!bf && bi->second != kl)) {
      rep.detail = "phi is not injective on " + to_string(w);
      return rep;
    }
  }
  rep.classes_checked = forward.size();
  // the right side is generated by [[P,0],0], [[0,R],0] and [[0,0],S]
  for (std::size_t k = 0; k < R.rank(); ++k) {
    PushoutMonoid::Element gen{inner.to_amalgamated(inner.beta(R.generator(k))), S.zero()};
    PushoutMonoid::Element img = phi({lhs.left().zero(), h.apply(R.generator(k))});
    if (rhs.equals(gen, img) != Tri::True) {
      rep.detail = "generator " + R.generators()[k] + " is not in the image of phi";
      return rep;
    }
  }
  rep.verified = true;
  return rep;
}

}  // namespace logmonoid
