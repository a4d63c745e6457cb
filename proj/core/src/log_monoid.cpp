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

#include "logmonoid/log_monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "logmonoid/error.hpp"

namespace logmonoid {

LogMonoid::LogMonoid(MonoidPresentation monoid, ToyRing ring, std::vector<RingElt> alpha)
    : monoid_(std::move(monoid)), ring_(std::move(ring)), alpha_(std::move(alpha)) {
  if (alpha_.size() != monoid_.rank()) throw InvalidArgument("structure map needs one value per generator");
  for (RingElt a : alpha_)
    if (a >= ring_.size()) throw InvalidArgument("structure map value is not a ring element");
  for (const auto& r : monoid_.relations())
    if (alpha_of(r.lhs) != alpha_of(r.rhs))
      throw NotMultiplicative("relation " + monoid_.format(r.lhs) + " = " + monoid_.format(r.rhs) +
                              " maps to " + ring_.format(alpha_of(r.lhs)) + " != " + ring_.format(alpha_of(r.rhs)));
  for (std::size_t i = 0; i < alpha_.size(); ++i)
    if (ring_.is_unit(alpha_[i])) face_.push_back(i);
}

RingElt LogMonoid::alpha_of(const Word& w) const {
  RingElt r = ring_.one();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > 0) r = ring_.mul(r, ring_.pow(alpha_[i], static_cast<std::uint64_t>(w[i])));
  return r;
}

RingElt LogMonoid::structure(const Element& e) const { return ring_.mul(alpha_of(e.word), e.unit); }

LogMonoid::Element LogMonoid::element(Word w, RingElt unit) const {
  if (w.size() != monoid_.rank()) throw InvalidArgument("word has wrong length");
  if (unit >= ring_.size() || !ring_.is_unit(unit)) throw InvalidArgument(ring_.format(unit) + " is not a unit");
  return Element{std::move(w), unit};
}

LogMonoid::Element LogMonoid::combine(const Element& a, const Element& b) const {
  return Element{add(a.word, b.word), ring_.mul(a.unit, b.unit)};
}

std::string LogMonoid::format(const Element& e) const {
  return "(" + monoid_.format(e.word) + ", " + ring_.format(e.unit) + ")";
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ClassTable::ClassTable(const LogMonoid& m, int degree) : owner_(&m), degree_(degree) {
  const auto words = m.monoid().classes_up_to(degree);
  const auto& units = m.ring().units();
  std::map<Word, std::size_t> word_index;
  for (std::size_t i = 0; i < words.size(); ++i) word_index.emplace(words[i], i);
  std::map<RingElt, std::size_t> unit_index;
  for (std::size_t i = 0; i < units.size(); ++i) unit_index.emplace(units[i], i);
  const std::size_t nu = units.size();
  UnionFind uf(words.size() * nu);
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    if (logmonoid::degree(words[wi]) > degree - 1) continue;
    for (std::size_t g : m.unit_face()) {
      Word w = words[wi];
      w[g] += 1;
      auto it = word_index.find(m.monoid().normal_form(w));
      if (it == word_index.end()) continue;
      for (std::size_t ui = 0; ui < nu; ++ui) {
        const RingElt moved = m.ring().mul(m.alpha()[g], units[ui]);
        uf.unite(it->second * nu + ui, wi * nu + unit_index.at(moved));
      }
    }
  }
  std::map<std::size_t, std::size_t> root_class;
  for (std::size_t node = 0; node < words.size() * nu; ++node) {
    const std::size_t root = uf.find(node);
    auto [it, fresh] = root_class.emplace(root, reps_.size());
    if (fresh) reps_.push_back(LogMonoid::Element{words[root / nu], units[root % nu]});
    index_.emplace(std::make_pair(words[node / nu], units[node % nu]), it->second);
  }
}

std::optional<std::size_t> ClassTable::find(const LogMonoid::Element& e) const {
  auto it = index_.find({owner_->monoid().normal_form(e.word), e.unit});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<LogMonoid::Element> ClassTable::members(std::size_t cls) const {
  std::vector<LogMonoid::Element> out;
  for (const auto& [key, c] : index_)
    if (c == cls) out.push_back({key.first, key.second});
  return out;
}

bool log_condition(const LogMonoid& m, int degree) {
  const ClassTable table(m, degree);
  const Word zero = m.monoid().zero();
  std::set<std::size_t> unit_classes;
  for (RingElt a : m.ring().units()) {
    auto c = table.find({zero, a});
    if (!c || !unit_classes.insert(*c).second) return false;
  }
  for (std::size_t c = 0; c < table.size(); ++c) {
    const RingElt s = m.structure(table.representatives()[c]);
    if (m.ring().is_unit(s) && table.find({zero, s}) != c) return false;
  }
  return true;
}

LogMonoid associated_log(const MonoidPresentation& monoid, const ToyRing& ring, const std::vector<RingElt>& alpha) {
  return LogMonoid(monoid, ring, alpha);
}

MonoidPresentation as_plain_monoid(const LogMonoid& m) {
  const auto& P = m.monoid();
  const auto& A = m.ring();
  const auto& units = A.units();
  const std::size_t np = P.rank(), n = np + units.size();
  std::vector<std::string> gens = P.generators();
  for (RingElt u : units) gens.push_back("[" + A.format(u) + "]");
  std::vector<Relation> rels;
  auto widen = [&](const Word& w) {
    Word out(n, 0);
    std::copy(w.begin(), w.end(), out.begin());
    return out;
  };
  for (const auto& r : P.relations()) rels.push_back({widen(r.lhs), widen(r.rhs)});
  auto unit_gen = [&](RingElt u) {
    const auto pos = static_cast<std::size_t>(std::lower_bound(units.begin(), units.end(), u) - units.begin());
    return unit_vector(n, np + pos);
  };
  rels.push_back({unit_gen(A.one()), Word(n, 0)});
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = i; j < units.size(); ++j)
      rels.push_back({add(unit_gen(units[i]), unit_gen(units[j])), unit_gen(A.mul(units[i], units[j]))});
  return MonoidPresentation(gens, rels, P.bound());
}

std::vector<RingElt> as_prelog_alpha(const LogMonoid& m) {
  std::vector<RingElt> a = m.alpha();
  for (RingElt u : m.ring().units()) a.push_back(u);
  return a;
}

LogMonoid base_change(const LogMonoid& m, const RingHom& f) {
  if (!f.source().same_as(m.ring())) throw NotRingHom("ring map does not start at the coefficient ring");
  std::vector<RingElt> alpha;
  for (RingElt a : m.alpha()) alpha.push_back(f(a));
  return LogMonoid(m.monoid(), f.target(), alpha);
}

LogHom::LogHom(LogMonoid source, LogMonoid target, RingHom f, std::vector<LogMonoid::Element> images)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(f)), images_(std::move(images)) {
  if (!f_.source().same_as(source_.ring()) || !f_.target().same_as(target_.ring()))
    throw ParentMismatch("ring map does not match the coefficient rings");
  if (images_.size() != source_.monoid().rank()) throw IllFormedHom("need one image per generator");
  for (auto& img : images_) img = target_.element(img.word, img.unit);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const RingElt lhs = target_.structure(images_[i]);
    const RingElt rhs = f_(source_.alpha()[i]);
    if (lhs != rhs)
      throw NotOverF("generator " + source_.monoid().generators()[i] + ": structure value " +
                     target_.ring().format(lhs) + " != " + target_.ring().format(rhs));
  }
  int depth = 0;
  std::vector<std::pair<LogMonoid::Element, LogMonoid::Element>> checks;
  for (const auto& r : source_.monoid().relations()) {
    auto a = (*this)({r.lhs, source_.ring().one()});
    auto b = (*this)({r.rhs, source_.ring().one()});
    depth = std::max({depth, degree(a.word), degree(b.word)});
    checks.emplace_back(std::move(a), std::move(b));
  }
  if (checks.empty()) return;
  const ClassTable table(target_, depth);
  for (const auto& [a, b] : checks)
    if (table.find(a) != table.find(b))
      throw IllFormedHom("relation images " + target_.format(a) + " and " + target_.format(b) + " differ");
}

LogMonoid::Element LogHom::operator()(const LogMonoid::Element& e) const {
  Word w(target_.monoid().rank(), 0);
  RingElt u = f_(e.unit);
  const auto& R = target_.ring();
  for (std::size_t i = 0; i < e.word.size(); ++i) {
    if (e.word[i] == 0) continue;
    w = add(w, scale(images_[i].word, e.word[i]));
    u = R.mul(u, R.pow(images_[i].unit, static_cast<std::uint64_t>(e.word[i])));
  }
  return {std::move(w), u};
}

namespace {

int image_depth(const std::vector<LogMonoid::Element>& images, int degree) {
  int m = 0;
  for (const auto& img : images) m = std::max(m, logmonoid::degree(img.word));
  return std::max(1, m) * degree;
}

}  // namespace

Tri LogHom::well_defined(int degree) const {
  const ClassTable src(source_, degree);
  const ClassTable tgt(target_, image_depth(images_, degree));
  std::vector<std::optional<std::size_t>> image_of(src.size());
  std::vector<bool> seen(src.size(), false);
  bool undecided = false;
  for (std::size_t c = 0; c < src.size(); ++c)
    for (const auto& e : src.members(c)) {
      const auto t = tgt.find((*this)(e));
      if (!t) {
        undecided = true;
        continue;
      }
      if (!seen[c]) {
        seen[c] = true;
        image_of[c] = t;
      } else if (image_of[c] != t) {
        return Tri::False;
      }
    }
  return undecided ? Tri::Undecided : Tri::True;
}

LogHom adjoint_gamma(const LogHom& phi) {
  const LogMonoid mb = base_change(phi.source(), phi.ring_map());
  return LogHom(mb, phi.target(), RingHom::identity(phi.target().ring()), phi.images());
}

LogHom adjoint_delta(const LogHom& phi_prime, const LogMonoid& m, const RingHom& f) {
  if (!phi_prime.source().monoid().same_as(m.monoid()) || !phi_prime.source().ring().same_as(f.target()))
    throw ParentMismatch("hom does not start at the base change of the given log monoid");
  if (!phi_prime.ring_map().is_identity()) throw NotOverF("hom is not over the identity of B");
  return LogHom(m, phi_prime.target(), f, phi_prime.images());
}

Tri agree_on_classes(const LogHom& a, const LogHom& b, int degree) {
  if (!a.source().monoid().same_as(b.source().monoid()) || !a.source().ring().same_as(b.source().ring()) ||
      !a.target().monoid().same_as(b.target().monoid()) || !a.target().ring().same_as(b.target().ring()))
    throw ParentMismatch("homs have different source or target");
  const ClassTable src(a.source(), degree);
  const ClassTable tgt(a.target(), std::max(image_depth(a.images(), degree), image_depth(b.images(), degree)));
  Tri result = Tri::True;
  for (const auto& rep : src.representatives()) {
    const auto x = tgt.find(a(rep)), y = tgt.find(b(rep));
    if (!x || !y)
      result = tri_and(result, Tri::Undecided);
    else if (*x != *y)
      return Tri::False;
  }
  return result;
}

AdjunctionReport adjunction_check(const LogHom& phi, int degree) {
  AdjunctionReport rep;
  const LogHom g = adjoint_gamma(phi);
  const LogHom dg = adjoint_delta(g, phi.source(), phi.ring_map());
  rep.delta_gamma = agree_on_classes(dg, phi, degree);
  rep.gamma_delta = agree_on_classes(adjoint_gamma(dg), g, degree);
  const ClassTable mb(g.source(), degree);
  const ClassTable n(phi.target(), image_depth(phi.images(), degree));
  rep.formula = Tri::True;
  for (const auto& e : mb.representatives()) {
    const auto lhs = n.find(g(e));
    const auto rhs = n.find(phi.target().combine(phi({e.word, phi.source().ring().one()}),
                                                 {phi.target().monoid().zero(), e.unit}));
    if (!lhs || !rhs)
      rep.formula = tri_and(rep.formula, Tri::Undecided);
    else if (*lhs != *rhs)
      rep.formula = Tri::False;
  }
  rep.classes_checked = mb.size();
  rep.result = tri_and(tri_and(rep.delta_gamma, rep.gamma_delta), tri_and(rep.formula, g.well_defined(degree)));
  return rep;
}

Tri bijective_on_classes(const LogHom& phi, int degree) {
  const ClassTable src(phi.source(), degree);
  const ClassTable tgt(phi.target(), degree);
  std::set<std::size_t> hit;
  for (const auto& rep : src.representatives()) {
    const auto t = tgt.find(phi(rep));
    if (!t) return Tri::Undecided;
    if (!hit.insert(*t).second) return Tri::False;
  }
  return to_tri(hit.size() == tgt.size());
}

DescentReport descent_check(const LogMonoid& m, const RingHom& f, int degree) {
  if (!f.source().same_as(m.ring())) throw ParentMismatch("ring map does not start at the coefficient ring");
  if (is_cancellative(m.monoid(), std::max(degree, 2)) == Tri::False)
    throw HypothesisFailure("underlying monoid is not integral");
  if (!faithfully_flat(f)) throw NotFaithfullyFlat("B is not a free A-module of positive rank");
  const TensorSquare ts = tensor_square(f);
  const LogMonoid mb = base_change(m, f);
  const LogMonoid mc = base_change(mb, ts.p);
  if (base_change(mb, ts.q).alpha() != mc.alpha()) throw InvalidArgument("p and q disagree on the image of A");

  DescentReport rep;
  rep.tensor_description = ts.ring.describe();
  const ClassTable tm(m, degree), tb(mb, degree), tc(mc, degree);
  rep.classes_M = tm.size();
  rep.classes_MB = tb.size();
  std::set<std::size_t> image;
  rep.injective = true;
  for (const auto& e : tm.representatives()) {
    const auto c = tb.find({e.word, f(e.unit)});
    if (!c || !image.insert(*c).second) {
      rep.injective = false;
      rep.detail = "class " + m.format(e) + " collides in M (x)_A B";
      break;
    }
  }
  rep.equalizer = true;
  for (std::size_t c = 0; c < tb.size(); ++c) {
    const auto& e = tb.representatives()[c];
    const auto x = tc.find({e.word, ts.p(e.unit)});
    const auto y = tc.find({e.word, ts.q(e.unit)});
    const bool equal = x && y && *x == *y;
    const bool from_m = image.count(c) > 0;
    if (equal) ++rep.equalizer_size;
    if (equal != from_m) {
      rep.equalizer = false;
      if (rep.detail.empty())
        rep.detail = "class " + mb.format(e) + (equal ? " is equalized but does not come from M"
                                                      : " comes from M but is not equalized");
    }
  }
  rep.result = to_tri(rep.injective && rep.equalizer);
  return rep;
}

}  // namespace logmonoid
