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

#include "logmonoid/monoid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace logmonoid {

namespace detail {

struct PresentationData {
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  int bound = MonoidPresentation::kDefaultBound;
  // generator indices from highest to lowest rank (names compared lexicographically)
  std::vector<std::size_t> rank_order;
  std::vector<RewriteRule> rules;
  bool completed = false;
  std::optional<Lattice> lattice;
};

}  // namespace detail

namespace {

constexpr std::size_t kMaxRules = 4000;
constexpr std::size_t kMaxCompletionSteps = 200000;

int compare_with(const std::vector<std::size_t>& order, const Word& a, const Word& b) {
  const int da = degree(a), db = degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i : order) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Word reduce_with(const std::vector<RewriteRule>& rules, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : rules) {
      if (divides(r.lhs, w)) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += r.rhs[i] - r.lhs[i];
        changed = true;
        break;
      }
    }
  }
  return w;
}

bool overlaps(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return true;
  return false;
}

void complete(detail::PresentationData& d) {
  const auto& order = d.rank_order;
  std::vector<RewriteRule> rules;
  std::deque<std::pair<Word, Word>> pending;
  for (const auto& r : d.relations) pending.emplace_back(r.lhs, r.rhs);
  std::size_t steps = 0;
  while (!pending.empty()) {
    if (++steps > kMaxCompletionSteps || rules.size() > kMaxRules) {
      d.rules = std::move(rules);
      d.completed = false;
      return;
    }
    auto [a, b] = std::move(pending.front());
    pending.pop_front();
    a = reduce_with(rules, std::move(a));
    b = reduce_with(rules, std::move(b));
    const int c = compare_with(order, a, b);
    if (c == 0) continue;
    RewriteRule nr = c > 0 ? RewriteRule{a, b} : RewriteRule{b, a};

    // Rules whose left side is divisible by the new one become equations again.
    std::vector<RewriteRule> kept;
    kept.reserve(rules.size());
    for (auto& r : rules) {
      if (divides(nr.lhs, r.lhs)) {
        pending.emplace_back(std::move(r.lhs), std::move(r.rhs));
      } else {
        kept.push_back(std::move(r));
      }
    }
    rules = std::move(kept);
    for (const auto& r : rules) {
      if (!overlaps(nr.lhs, r.lhs)) continue;  // coprime leading terms
      Word m = join(nr.lhs, r.lhs);
      Word s1 = add(subtract(m, nr.lhs), nr.rhs);
      Word s2 = add(subtract(m, r.lhs), r.rhs);
      pending.emplace_back(std::move(s1), std::move(s2));
    }
    rules.push_back(std::move(nr));
    // keep right-hand sides reduced
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<RewriteRule> others;
      for (std::size_t j = 0; j < rules.size(); ++j)
        if (j != i) others.push_back(rules[j]);
      rules[i].rhs = reduce_with(others, rules[i].rhs);
    }
  }
  std::sort(rules.begin(), rules.end(), [&](const RewriteRule& x, const RewriteRule& y) {
    return compare_with(order, x.lhs, y.lhs) < 0;
  });
  d.rules = std::move(rules);
  d.completed = true;
}

void validate_word(const Word& w, std::size_t n, const char* what) {
  if (w.size() != n) throw InvalidArgument(std::string(what) + ": exponent vector has wrong length");
  for (int x : w)
    if (x < 0) throw InvalidArgument(std::string(what) + ": negative exponent");
}

}  // namespace

MonoidPresentation::MonoidPresentation() : MonoidPresentation({}, {}, kDefaultBound) {}

MonoidPresentation::MonoidPresentation(std::vector<std::string> generators,
                                       std::vector<Relation> relations, int bound) {
  if (bound <= 0) throw InvalidArgument("congruence bound must be positive");
  auto d = std::make_shared<detail::PresentationData>();
  const std::size_t n = generators.size();
  {
    std::unordered_set<std::string> seen;
    for (const auto& g : generators)
      if (!seen.insert(g).second) throw InvalidArgument("duplicate generator name '" + g + "'");
  }
  for (const auto& r : relations) {
    validate_word(r.lhs, n, "relation");
    validate_word(r.rhs, n, "relation");
  }
  d->generators = std::move(generators);
  d->relations = std::move(relations);
  d->bound = bound;
  d->rank_order.resize(n);
  std::iota(d->rank_order.begin(), d->rank_order.end(), 0);
  std::sort(d->rank_order.begin(), d->rank_order.end(), [&](std::size_t a, std::size_t b) {
    return d->generators[a] > d->generators[b];
  });
  complete(*d);
  IntRows rows;
  for (const auto& r : d->relations) {
    IntVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = r.lhs[i] - r.rhs[i];
    rows.push_back(std::move(v));
  }
  d->lattice.emplace(n, rows);
  d_ = std::move(d);
}

MonoidPresentation MonoidPresentation::free(std::vector<std::string> generators, int bound) {
  return MonoidPresentation(std::move(generators), {}, bound);
}

std::size_t MonoidPresentation::rank() const noexcept { return d_->generators.size(); }
const std::vector<std::string>& MonoidPresentation::generators() const noexcept { return d_->generators; }
const std::vector<Relation>& MonoidPresentation::relations() const noexcept { return d_->relations; }
int MonoidPresentation::bound() const noexcept { return d_->bound; }
bool MonoidPresentation::completed() const noexcept { return d_->completed; }
const std::vector<RewriteRule>& MonoidPresentation::rules() const noexcept { return d_->rules; }

MonoidPresentation MonoidPresentation::with_bound(int bound) const {
  return MonoidPresentation(d_->generators, d_->relations, bound);
}

MonoidPresentation MonoidPresentation::with_extra_relations(const std::vector<Relation>& extra) const {
  auto rels = d_->relations;
  rels.insert(rels.end(), extra.begin(), extra.end());
  return MonoidPresentation(d_->generators, std::move(rels), d_->bound);
}

int MonoidPresentation::compare(const Word& a, const Word& b) const {
  return compare_with(d_->rank_order, a, b);
}

std::optional<Word> MonoidPresentation::try_normal_form(const Word& w) const {
  validate_word(w, rank(), "normal_form");
  if (d_->completed) return reduce_with(d_->rules, w);
  Word partial = reduce_with(d_->rules, w);
  auto cls = congruence_class(partial, std::max(d_->bound, degree(partial)));
  if (!cls.closed) return std::nullopt;
  return *std::min_element(cls.members.begin(), cls.members.end(),
                           [&](const Word& a, const Word& b) { return compare(a, b) < 0; });
}

Word MonoidPresentation::normal_form(const Word& w) const {
  auto nf = try_normal_form(w);
  if (!nf) throw UndecidedAtBound("congruence closure of " + format(w) + " exceeded bound " +
                                  std::to_string(d_->bound));
  return *nf;
}

Tri MonoidPresentation::equals(const Word& a, const Word& b) const {
  if (d_->completed) return to_tri(normal_form(a) == normal_form(b));
  auto ca = congruence_class(a, d_->bound);
  if (std::find(ca.members.begin(), ca.members.end(), b) != ca.members.end()) return Tri::True;
  if (ca.closed) return Tri::False;
  auto cb = congruence_class(b, d_->bound);
  if (cb.closed) return Tri::False;
  return Tri::Undecided;
}

std::optional<std::size_t> MonoidPresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (d_->generators[i] == name) return i;
  return std::nullopt;
}

std::vector<Word> MonoidPresentation::classes_up_to(int d) const {
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> out;
  for (auto& w : words_up_to_degree(rank(), d)) {
    Word nf = normal_form(w);
    if (seen.insert(nf).second) out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return compare(a, b) < 0; });
  return out;
}

MonoidPresentation::ClassSearch MonoidPresentation::congruence_class(const Word& w, int max_degree) const {
  ClassSearch out;
  std::unordered_set<Word, WordHash> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    out.members.push_back(cur);
    for (const auto& r : d_->relations) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? r.lhs : r.rhs;
        const Word& to = dir == 0 ? r.rhs : r.lhs;
        if (!divides(from, cur)) continue;
        Word next = add(subtract(cur, from), to);
        if (degree(next) > max_degree) {
          out.closed = false;
          continue;
        }
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

IntVector MonoidPresentation::group_key(const Word& w) const {
  IntVector v(w.begin(), w.end());
  return d_->lattice->reduce(std::move(v));
}

bool MonoidPresentation::same_as(const MonoidPresentation& other) const noexcept {
  if (d_ == other.d_) return true;
  if (d_->generators != other.d_->generators) return false;
  if (d_->relations.size() != other.d_->relations.size()) return false;
  for (std::size_t i = 0; i < d_->relations.size(); ++i)
    if (d_->relations[i].lhs != other.d_->relations[i].lhs ||
        d_->relations[i].rhs != other.d_->relations[i].rhs)
      return false;
  return true;
}

std::string MonoidPresentation::format(const Word& w) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.size() && i < rank(); ++i) {
    if (w[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (w[i] != 1) os << w[i];
    os << d_->generators[i];
  }
  if (first) os << '0';
  return os.str();
}

MonoidElement::MonoidElement(MonoidPresentation parent, Word word)
    : parent_(std::move(parent)), word_(std::move(word)) {
  validate_word(word_, parent_.rank(), "MonoidElement");
}

MonoidElement MonoidElement::operator+(const MonoidElement& other) const {
  if (!parent_.same_as(other.parent_)) throw ParentMismatch("cannot add elements of different monoids");
  return MonoidElement(parent_, add(word_, other.word_));
}

Tri equals(const MonoidElement& a, const MonoidElement& b) {
  if (!a.parent().same_as(b.parent())) throw ParentMismatch("elements belong to different monoids");
  return a.parent().equals(a.word(), b.word());
}

MonoidHom::MonoidHom(MonoidPresentation source, MonoidPresentation target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.rank())
    throw IllFormedHom("expected " + std::to_string(source_.rank()) + " generator images, got " +
                       std::to_string(images_.size()));
  for (const auto& im : images_) {
    if (im.size() != target_.rank()) throw IllFormedHom("generator image has wrong length");
    for (int x : im)
      if (x < 0) throw IllFormedHom("generator image has a negative exponent");
  }
  for (const auto& r : source_.relations()) {
    Tri ok = target_.equals(apply(r.lhs), apply(r.rhs));
    if (ok == Tri::False)
      throw IllFormedHom("relation " + source_.format(r.lhs) + " = " + source_.format(r.rhs) +
                         " is not respected");
    if (ok == Tri::Undecided)
      throw UndecidedAtBound("could not decide whether relation " + source_.format(r.lhs) + " = " +
                             source_.format(r.rhs) + " is respected");
  }
}

MonoidHom MonoidHom::identity(const MonoidPresentation& m) {
  std::vector<Word> ims;
  for (std::size_t i = 0; i < m.rank(); ++i) ims.push_back(m.generator(i));
  return MonoidHom(m, m, std::move(ims));
}

MonoidHom MonoidHom::from_trivial(const MonoidPresentation& target) {
  return MonoidHom(MonoidPresentation(), target, {});
}

Word MonoidHom::apply(const Word& w) const {
  if (w.size() != source_.rank()) throw InvalidArgument("word length does not match hom source");
  Word out(target_.rank(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0)
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += w[i] * images_[i][j];
  return out;
}

MonoidHom MonoidHom::compose_after(const MonoidHom& inner) const {
  if (!inner.target().same_as(source_)) throw IllFormedHom("composition of incompatible homs");
  std::vector<Word> ims;
  for (const auto& im : inner.images()) ims.push_back(apply(im));
  return MonoidHom(inner.source(), target_, std::move(ims));
}

std::string to_string(const AbelianGroupPresentation& g) {
  std::ostringstream os;
  os << "Z^" << g.rank;
  for (auto d : g.torsion_divisors) os << " + Z/" << d;
  return os.str();
}

Word normal_form(const MonoidPresentation& m, const Word& w) { return m.normal_form(w); }

std::vector<std::size_t> unit_generators(const MonoidPresentation& m) {
  const std::size_t n = m.rank();
  std::vector<bool> unit(n, false);
  auto inside = [&](const Word& w) {
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] > 0 && !unit[i]) return false;
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : m.relations()) {
      const bool l = inside(r.lhs), rr = inside(r.rhs);
      if (l == rr) continue;
      const Word& other = l ? r.rhs : r.lhs;
      for (std::size_t i = 0; i < n; ++i)
        if (other[i] > 0 && !unit[i]) {
          unit[i] = true;
          changed = true;
        }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (unit[i]) out.push_back(i);
  return out;
}

Tri is_sharp(const MonoidPresentation& m) {
  Tri result = Tri::True;
  for (std::size_t i : unit_generators(m)) {
    auto nf = m.try_normal_form(m.generator(i));
    if (!nf) {
      result = Tri::Undecided;
      continue;
    }
    if (!is_zero(*nf)) return Tri::False;
  }
  return result;
}

std::vector<Word> irreducibles(const MonoidPresentation& m) {
  const Tri sharp = is_sharp(m);
  if (sharp == Tri::False) throw NotSharp("monoid has a nonzero unit");
  if (sharp == Tri::Undecided) throw UndecidedAtBound("sharpness undecided");
  const std::size_t n = m.rank();
  std::vector<bool> zero_gen(n);
  for (std::size_t i = 0; i < n; ++i) zero_gen[i] = is_zero(m.normal_form(m.generator(i)));
  std::vector<Word> out;
  std::unordered_set<Word, WordHash> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (zero_gen[i]) continue;
    Word nf = m.normal_form(m.generator(i));
    if (seen.count(nf)) continue;
    auto cls = m.congruence_class(m.generator(i), m.bound());
    bool reducible = false;
    for (const auto& w : cls.members) {
      int nonzero_mass = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (!zero_gen[j]) nonzero_mass += w[j];
      if (nonzero_mass >= 2) {
        reducible = true;
        break;
      }
    }
    if (!reducible && !cls.closed)
      throw UndecidedAtBound("congruence class of generator " + m.generators()[i] + " exceeds bound");
    seen.insert(nf);
    if (!reducible) out.push_back(std::move(nf));
  }
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return m.compare(a, b) < 0; });
  return out;
}

Tri is_cancellative(const MonoidPresentation& m, int bound) {
  if (m.rank() == 0) return Tri::True;
  const auto classes = m.classes_up_to(std::max(0, bound - 1));
  for (std::size_t g = 0; g < m.rank(); ++g) {
    std::unordered_map<Word, Word, WordHash> image;
    for (const auto& a : classes) {
      Word s = m.normal_form(add(a, m.generator(g)));
      auto [it, fresh] = image.emplace(std::move(s), a);
      if (!fresh && it->second != a) return Tri::False;
    }
  }
  return Tri::True;
}

namespace {

// Normal forms of all divisors of the class of p, or nullopt if the class
// could not be closed inside the bound.
std::optional<std::vector<Word>> divisors(const MonoidPresentation& m, const Word& p, int bound) {
  auto cls = m.congruence_class(p, std::max(bound, degree(p)));
  if (!cls.closed) return std::nullopt;
  std::unordered_set<Word, WordHash> seen;
  std::vector<Word> out;
  for (const auto& w : cls.members) {
    for (auto& sub : words_in_box(w.size(), *std::max_element(w.begin(), w.end()))) {
      if (!divides(sub, w)) continue;
      Word nf = m.normal_form(sub);
      if (seen.insert(nf).second) out.push_back(std::move(nf));
    }
  }
  return out;
}

bool is_free_presentation(const MonoidPresentation& m) { return m.relations().empty(); }

}  // namespace

IntegralityReport is_integral_hom(const MonoidHom& h, int bound) {
  IntegralityReport rep;
  rep.bound_used = bound;
  const auto& Q = h.source();
  const auto& P = h.target();
  const Tri canc = is_cancellative(P, bound);
  if (canc == Tri::False) {
    // integrality is only defined here for integral targets
    throw HypothesisFailure("target monoid is not cancellative");
  }
  // Any map out of N (or the trivial monoid) into a cancellative monoid is integral:
  // one of q, q' can be cancelled to zero.
  if (is_free_presentation(Q) && Q.rank() <= 1) {
    rep.result = canc;
    return rep;
  }
  const auto Qc = Q.classes_up_to(bound);
  const auto Pc = P.classes_up_to(bound);
  std::vector<Word> fq;
  for (const auto& q : Qc) fq.push_back(P.normal_form(h.apply(q)));

  std::unordered_map<Word, std::vector<std::pair<std::size_t, std::size_t>>, WordHash> rhs_index;
  for (std::size_t j = 0; j < Qc.size(); ++j)
    for (std::size_t b = 0; b < Pc.size(); ++b)
      rhs_index[P.normal_form(add(fq[j], Pc[b]))].emplace_back(j, b);

  const bool free_source = is_free_presentation(Q);
  Tri result = canc;
  for (std::size_t i = 0; i < Qc.size(); ++i) {
    for (std::size_t a = 0; a < Pc.size(); ++a) {
      const Word key = P.normal_form(add(fq[i], Pc[a]));
      auto it = rhs_index.find(key);
      if (it == rhs_index.end()) continue;
      for (auto [j, b] : it->second) {
        if (free_source && !is_zero(meet(Qc[i], Qc[j]))) continue;  // reducible by cancellation
        const Word& q = Qc[i];
        const Word& qp = Qc[j];
        const Word& p = Pc[a];
        const Word& pp = Pc[b];
        auto divs = divisors(P, p, bound);
        bool found = false;
        if (divs) {
          for (const auto& pdd : *divs) {
            for (std::size_t k1 = 0; k1 < Qc.size() && !found; ++k1) {
              if (P.normal_form(add(fq[k1], pdd)) != p) continue;
              for (std::size_t k2 = 0; k2 < Qc.size(); ++k2) {
                if (P.normal_form(add(fq[k2], pdd)) != pp) continue;
                if (Q.normal_form(add(q, Qc[k1])) != Q.normal_form(add(qp, Qc[k2]))) continue;
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
        if (!found) {
          rep.witness = std::vector<Word>{q, p, qp, pp};
          rep.result = divs ? Tri::False : Tri::Undecided;
          return rep;
        }
      }
    }
  }
  rep.result = result;
  return rep;
}

AbelianGroupPresentation groupification(const MonoidPresentation& m) {
  IntRows rows;
  for (const auto& r : m.relations()) {
    IntVector v(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) v[i] = r.lhs[i] - r.rhs[i];
    rows.push_back(std::move(v));
  }
  auto snf = smith_invariants(rows, m.rank());
  AbelianGroupPresentation g;
  g.rank = static_cast<int>(m.rank()) - snf.rank;
  for (auto d : snf.factors)
    if (d >= 2) g.torsion_divisors.push_back(d);
  return g;
}

AbelianGroupPresentation cokernel(const MonoidHom& h) {
  const auto& P = h.target();
  IntRows rows;
  for (const auto& r : P.relations()) {
    IntVector v(P.rank());
    for (std::size_t i = 0; i < P.rank(); ++i) v[i] = r.lhs[i] - r.rhs[i];
    rows.push_back(std::move(v));
  }
  for (const auto& im : h.images()) rows.emplace_back(im.begin(), im.end());
  auto snf = smith_invariants(rows, P.rank());
  AbelianGroupPresentation g;
  g.rank = static_cast<int>(P.rank()) - snf.rank;
  for (auto d : snf.factors)
    if (d >= 2) g.torsion_divisors.push_back(d);
  return g;
}

bool coker_torsion_free(const MonoidHom& h) { return cokernel(h).torsion_free(); }

std::optional<Word> preimage(const MonoidHom& h, const Word& x, int bound) {
  const auto& P = h.target();
  const Word target = P.normal_form(x);
  for (const auto& q : h.source().classes_up_to(bound))
    if (P.normal_form(h.apply(q)) == target) return q;
  return std::nullopt;
}

}  // namespace logmonoid
