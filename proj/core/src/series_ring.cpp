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

#include "logmonoid/series_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "logmonoid/error.hpp"

namespace logmonoid {

namespace detail {

struct SeriesRingData {
  PrimeField field{2};
  int N = 1;
  int d = 0;
  std::vector<std::string> vars;
  std::optional<SeriesRing::Relation> relation;
  std::optional<Grading> grading;
  // every G term lowers the exponent mass on Supp(T); rewriting terminates without t-truncation
  bool exact_ok = true;
  bool single_term_G = false;
};

}  // namespace detail

namespace {

int x_degree(const Mono& m) { return std::accumulate(m.begin() + 1, m.end(), 0); }

void add_term(Poly& f, const Mono& m, std::uint32_t c, const PrimeField& F) {
  if (c == 0) return;
  auto [it, fresh] = f.emplace(m, c);
  if (!fresh) {
    it->second = F.add(it->second, c);
    if (it->second == 0) f.erase(it);
  }
}

std::optional<Grading> default_grading(std::size_t n, const std::optional<SeriesRing::Relation>& rel) {
  Grading g;
  g.t = 1;
  g.x.assign(n, 1);
  if (!rel) return g;
  const Word& T = rel->T;
  const int absT = degree(T);
  if (rel->G.empty()) return g;
  if (rel->G.size() == 1) {
    const Mono& m = rel->G.begin()->first;
    bool disjoint = true;
    for (std::size_t i = 0; i < n; ++i)
      if (T[i] > 0 && m[i + 1] > 0) disjoint = false;
    if (disjoint) {
      const int a = m[0], b = x_degree(m);
      if (a + b > 0) {
        g.t = absT;
        for (std::size_t i = 0; i < n; ++i) g.x[i] = T[i] > 0 ? a + b : absT;
        int gg = g.t;
        for (int w : g.x) gg = std::gcd(gg, w);
        g.t /= gg;
        for (int& w : g.x) w /= gg;
        return g;
      }
    }
  }
  for (const auto& [m, c] : rel->G)
    if (m[0] + x_degree(m) != absT) return std::nullopt;
  return g;
}

}  // namespace

SeriesRing::SeriesRing(std::uint32_t p, int N, std::vector<std::string> vars, std::optional<Relation> relation,
                       int d, std::optional<Grading> grading) {
  auto data = std::make_shared<detail::SeriesRingData>();
  data->field = PrimeField(p);
  if (N < 1) throw InvalidArgument("t-adic precision N must be at least 1");
  if (d < 0) throw InvalidArgument("truncation degree must be non-negative");
  data->N = N;
  data->d = d;
  const std::size_t n = vars.size();
  data->vars = std::move(vars);
  if (relation) {
    if (relation->T.size() != n) throw InvalidArgument("relation exponent T has wrong length");
    const int absT = degree(relation->T);
    if (absT == 0) throw InvalidArgument("relation exponent T must be nonzero");
    for (int x : relation->T)
      if (x < 0) throw InvalidArgument("relation exponent T must be non-negative");
    Poly G;
    for (const auto& [m, c] : relation->G) {
      if (m.size() != n + 1) throw InvalidArgument("term of G has wrong length");
      for (int x : m)
        if (x < 0) throw InvalidArgument("term of G has a negative exponent");
      add_term(G, m, data->field.reduce(c), data->field);
    }
    for (const auto& [m, c] : G) {
      int mass = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (relation->T[i] > 0) mass += m[i + 1];
      const bool lowers = mass < absT;
      if (!lowers) data->exact_ok = false;
      if (!lowers && m[0] == 0)
        throw InvalidArgument("rewriting X^T -> G does not terminate: a term of G has no t and no lower mass on Supp(T)");
    }
    relation->G = std::move(G);
    data->single_term_G = relation->G.size() == 1;
  }
  data->relation = std::move(relation);
  if (grading) {
    if (grading->x.size() != n || grading->t <= 0) throw InvalidArgument("grading has wrong shape");
    for (int w : grading->x)
      if (w <= 0) throw InvalidArgument("grading weights must be positive");
    data->grading = grading;
    if (data->relation) {
      int wT = 0;
      for (std::size_t i = 0; i < n; ++i) wT += grading->x[i] * data->relation->T[i];
      for (const auto& [m, c] : data->relation->G) {
        int w = grading->t * m[0];
        for (std::size_t i = 0; i < n; ++i) w += grading->x[i] * m[i + 1];
        if (w != wT) throw InvalidArgument("relation is not homogeneous for the given grading");
      }
    }
  } else {
    data->grading = default_grading(n, data->relation);
  }
  d_ = std::move(data);
}

SeriesRing SeriesRing::semistable_model(std::uint32_t p, int N, int l, const std::vector<int>& B, int a, int d) {
  if (l < 1) throw InvalidArgument("semistable model needs at least one X variable");
  std::vector<std::string> vars;
  for (int i = 1; i <= l; ++i) vars.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= B.size(); ++j) vars.push_back("y" + std::to_string(j));
  const std::size_t n = vars.size();
  Word T(n, 0);
  for (int i = 0; i < l; ++i) T[static_cast<std::size_t>(i)] = 1;
  Mono g(n + 1, 0);
  g[0] = a;
  for (std::size_t j = 0; j < B.size(); ++j) g[1 + static_cast<std::size_t>(l) + j] = B[j];
  return SeriesRing(p, N, std::move(vars), Relation{T, Poly{{g, 1}}}, d);
}

SeriesRing SeriesRing::unit_rigidity_model(int n, std::uint32_t p, int N, int d) {
  if (n < 1) throw InvalidArgument("need at least one variable");
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back("X" + std::to_string(i));
  Mono g(static_cast<std::size_t>(n) + 1, 0);
  g[0] = 1;
  return SeriesRing(p, N, std::move(vars), Relation{Word(static_cast<std::size_t>(n), 1), Poly{{g, 1}}}, d);
}

std::uint32_t SeriesRing::p() const noexcept { return d_->field.p(); }
int SeriesRing::precision() const noexcept { return d_->N; }
int SeriesRing::truncation() const noexcept { return d_->d; }
std::size_t SeriesRing::n_vars() const noexcept { return d_->vars.size(); }
const std::vector<std::string>& SeriesRing::vars() const noexcept { return d_->vars; }
const std::optional<SeriesRing::Relation>& SeriesRing::relation() const noexcept { return d_->relation; }
const std::optional<Grading>& SeriesRing::grading() const noexcept { return d_->grading; }
const PrimeField& SeriesRing::field() const noexcept { return d_->field; }

bool SeriesRing::in_sigma(const Mono& m) const noexcept {
  if (!d_->relation) return true;
  const Word& T = d_->relation->T;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (m[i + 1] < T[i]) return true;
  return false;
}

std::vector<Mono> SeriesRing::sigma_basis(int d) const {
  std::vector<Mono> out;
  const std::size_t n = n_vars();
  for (int e = 0; e < d_->N; ++e)
    for (const auto& I : words_up_to_degree(n, d)) {
      Mono m(n + 1);
      m[0] = e;
      std::copy(I.begin(), I.end(), m.begin() + 1);
      if (in_sigma(m)) out.push_back(std::move(m));
    }
  return out;
}

Poly SeriesRing::reduce(const Poly& f, int t_precision) const {
  const auto& F = d_->field;
  if (!d_->relation) {
    if (t_precision <= 0) return f;
    Poly out;
    for (const auto& [m, c] : f)
      if (m[0] < t_precision) out.emplace(m, c);
    return out;
  }
  if (t_precision <= 0 && !d_->exact_ok)
    throw InvalidArgument("exact arithmetic needs every term of G to lower the mass on Supp(T)");
  const Word& T = d_->relation->T;
  const Poly& G = d_->relation->G;
  const std::size_t n = T.size();
  auto divisible = [&](const Mono& m) {
    for (std::size_t i = 0; i < n; ++i)
      if (m[i + 1] < T[i]) return false;
    return true;
  };
  Poly out;
  if (d_->single_term_G) {
    const auto& [g, gc] = *G.begin();
    for (const auto& [m0, c0] : f) {
      Mono m = m0;
      std::uint32_t c = c0;
      bool dead = false;
      while (true) {
        if (t_precision > 0 && m[0] >= t_precision) {
          dead = true;
          break;
        }
        if (!divisible(m)) break;
        m[0] += g[0];
        for (std::size_t i = 0; i < n; ++i) m[i + 1] += g[i + 1] - T[i];
        c = F.mul(c, gc);
      }
      if (!dead) add_term(out, m, c, F);
    }
    return out;
  }
  Poly work = f;
  while (!work.empty()) {
    auto it = work.begin();
    const Mono m = it->first;
    const std::uint32_t c = it->second;
    work.erase(it);
    if (t_precision > 0 && m[0] >= t_precision) continue;
    if (!divisible(m)) {
      add_term(out, m, c, F);
      continue;
    }
    for (const auto& [g, gc] : G) {
      Mono nm(m);
      nm[0] += g[0];
      for (std::size_t i = 0; i < n; ++i) nm[i + 1] += g[i + 1] - T[i];
      if (t_precision > 0 && nm[0] >= t_precision) continue;
      add_term(work, nm, F.mul(c, gc), F);
    }
  }
  return out;
}

Poly SeriesRing::multiply(const Poly& a, const Poly& b, int t_precision) const {
  const auto& F = d_->field;
  Poly prod;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (t_precision > 0 && ma[0] + mb[0] >= t_precision) continue;
      Mono m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_term(prod, m, F.mul(ca, cb), F);
    }
  return reduce(prod, t_precision);
}

int SeriesRing::weight(const Mono& m) const {
  if (!d_->grading) throw InvalidArgument("ring has no grading making its relation homogeneous");
  const auto& g = *d_->grading;
  int w = g.t * m[0];
  for (std::size_t i = 0; i < g.x.size(); ++i) w += g.x[i] * m[i + 1];
  return w;
}

std::optional<int> SeriesRing::homogeneous_weight(const Poly& f) const {
  std::optional<int> w;
  for (const auto& [m, c] : f) {
    const int x = weight(m);
    if (w && *w != x) return std::nullopt;
    w = x;
  }
  return w;
}

int SeriesRing::window(int d) const {
  if (!d_->grading) throw InvalidArgument("ring has no grading making its relation homogeneous");
  const auto& g = *d_->grading;
  const int wmax = g.x.empty() ? 0 : *std::max_element(g.x.begin(), g.x.end());
  return d * wmax + (d_->N - 1) * g.t;
}

std::vector<Mono> SeriesRing::window_basis(int max_weight, int t_precision) const {
  if (!d_->grading) throw InvalidArgument("ring has no grading making its relation homogeneous");
  const auto& g = *d_->grading;
  const std::size_t n = n_vars();
  std::vector<Mono> out;
  Mono m(n + 1, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int budget) {
    if (i == n) {
      if (in_sigma(m)) out.push_back(m);
      return;
    }
    for (int k = 0; k * g.x[i] <= budget; ++k) {
      m[i + 1] = k;
      rec(i + 1, budget - k * g.x[i]);
    }
    m[i + 1] = 0;
  };
  for (int e = 0; e * g.t <= max_weight && (t_precision <= 0 || e < t_precision); ++e) {
    m[0] = e;
    rec(0, max_weight - e * g.t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SeriesElement SeriesRing::zero() const { return SeriesElement(*this, {}); }
SeriesElement SeriesRing::one() const { return monomial(Mono(n_vars() + 1, 0)); }
SeriesElement SeriesRing::var(std::size_t i) const {
  if (i >= n_vars()) throw InvalidArgument("variable index out of range");
  Mono m(n_vars() + 1, 0);
  m[i + 1] = 1;
  return monomial(m);
}
SeriesElement SeriesRing::t_power(int e) const {
  Mono m(n_vars() + 1, 0);
  m[0] = e;
  return monomial(m);
}
SeriesElement SeriesRing::monomial(const Mono& m, std::uint32_t c) const {
  if (m.size() != n_vars() + 1) throw InvalidArgument("monomial has wrong length");
  Poly f;
  add_term(f, m, d_->field.reduce(c), d_->field);
  return nf_series(*this, f);
}
SeriesElement SeriesRing::element(const Poly& f) const { return nf_series(*this, f); }

std::string SeriesRing::format(const Poly& f) const {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> parts;
    if (c != 1) parts.push_back(std::to_string(c));
    if (m[0] > 0) parts.push_back(m[0] == 1 ? "t" : "t^" + std::to_string(m[0]));
    for (std::size_t i = 0; i < n_vars(); ++i)
      if (m[i + 1] > 0) parts.push_back(m[i + 1] == 1 ? vars()[i] : vars()[i] + "^" + std::to_string(m[i + 1]));
    if (parts.empty()) parts.push_back("1");
    for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
  }
  return os.str();
}

SeriesElement::SeriesElement(SeriesRing ring, Poly terms, bool overflow)
    : ring_(std::move(ring)), terms_(std::move(terms)), overflow_(overflow) {}

SeriesElement nf_series(const SeriesRing& R, const Poly& f) {
  for (const auto& [m, c] : f)
    if (m.size() != R.n_vars() + 1) throw InvalidArgument("term has wrong length");
  Poly r = R.reduce(f, R.precision());
  bool overflow = false;
  for (auto it = r.begin(); it != r.end();) {
    if (x_degree(it->first) > R.truncation()) {
      overflow = true;
      it = r.erase(it);
    } else {
      ++it;
    }
  }
  return SeriesElement(R, std::move(r), overflow);
}

namespace {

void check_same(const SeriesElement& a, const SeriesElement& b) {
  if (!a.ring().same_as(b.ring())) throw ParentMismatch("series elements belong to different rings");
}

}  // namespace

SeriesElement add(const SeriesElement& a, const SeriesElement& b) {
  check_same(a, b);
  Poly r = a.terms();
  for (const auto& [m, c] : b.terms()) add_term(r, m, c, a.ring().field());
  return SeriesElement(a.ring(), std::move(r), a.overflow() || b.overflow());
}

SeriesElement scale(const SeriesElement& a, std::uint32_t c) {
  Poly r;
  const auto& F = a.ring().field();
  for (const auto& [m, x] : a.terms()) add_term(r, m, F.mul(x, F.reduce(c)), F);
  return SeriesElement(a.ring(), std::move(r), a.overflow());
}

SeriesElement sub(const SeriesElement& a, const SeriesElement& b) {
  check_same(a, b);
  return add(a, scale(b, a.ring().p() - 1));
}

SeriesElement mul(const SeriesElement& a, const SeriesElement& b) {
  check_same(a, b);
  const auto& R = a.ring();
  SeriesElement r = nf_series(R, R.multiply(a.terms(), b.terms(), R.precision()));
  return SeriesElement(R, r.terms(), r.overflow() || a.overflow() || b.overflow());
}

namespace {

class Coordinates {
 public:
  std::size_t index(const Mono& m) {
    auto [it, fresh] = index_.emplace(m, monos_.size());
    if (fresh) monos_.push_back(m);
    return it->second;
  }
  std::optional<std::size_t> find(const Mono& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  SparseVec vec(const Poly& f) {
    SparseVec v;
    for (const auto& [m, c] : f) v.emplace_back(index(m), c);
    std::sort(v.begin(), v.end());
    return v;
  }
  Poly poly(const SparseVec& v) const {
    Poly f;
    for (const auto& [i, c] : v) f.emplace(monos_[i], c);
    return f;
  }
  std::size_t size() const { return monos_.size(); }
  const Mono& mono(std::size_t i) const { return monos_[i]; }

 private:
  std::map<Mono, std::size_t> index_;
  std::vector<Mono> monos_;
};

struct Window {
  int max_weight;
  int t_precision;
  std::vector<Mono> basis;
  Coordinates coords;
};

Window make_window(const SeriesRing& R, int max_weight, int t_precision) {
  Window w{max_weight, t_precision, R.window_basis(max_weight, t_precision), {}};
  for (const auto& m : w.basis) w.coords.index(m);
  return w;
}

Echelon ideal_span(const SeriesRing& R, Window& w, const std::vector<Poly>& gens) {
  Echelon e(R.field());
  for (const auto& g : gens) {
    Poly gr = R.reduce(g, w.t_precision);
    if (gr.empty()) continue;
    auto hw = R.homogeneous_weight(gr);
    if (!hw) throw InvalidArgument("ideal generator " + R.format(gr) + " is not homogeneous");
    for (const auto& m : w.basis) {
      if (R.weight(m) + *hw > w.max_weight) continue;
      Poly prod = R.multiply(gr, Poly{{m, 1}}, w.t_precision);
      if (!prod.empty()) e.insert(w.coords.vec(prod));
    }
  }
  return e;
}

std::vector<Poly> polys(const std::vector<SeriesElement>& v) {
  std::vector<Poly> out;
  for (const auto& x : v) out.push_back(x.terms());
  return out;
}

}  // namespace

bool ideal_equal(const SeriesRing& R, const std::vector<SeriesElement>& a, const std::vector<SeriesElement>& b, int d) {
  Window w = make_window(R, R.window(d), 0);
  return same_span(ideal_span(R, w, polys(a)), ideal_span(R, w, polys(b)));
}

bool ideal_contains(const SeriesRing& R, const std::vector<SeriesElement>& gens, const SeriesElement& f, int d) {
  Window w = make_window(R, R.window(d), 0);
  Echelon e = ideal_span(R, w, polys(gens));
  Poly fr = R.reduce(f.terms(), 0);
  for (const auto& [m, c] : fr)
    if (R.weight(m) > w.max_weight) return false;
  return e.contains(w.coords.vec(fr));
}

std::vector<Poly> ideal_intersect(const SeriesRing& R, const std::vector<std::vector<SeriesElement>>& ideals, int d) {
  Window w = make_window(R, R.window(d), 0);
  if (ideals.empty()) return {Poly{{Mono(R.n_vars() + 1, 0), 1}}};
  Echelon acc = ideal_span(R, w, polys(ideals.front()));
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    Echelon next = ideal_span(R, w, polys(ideals[i]));
    acc = span_of(R.field(), intersect(acc, next, w.coords.size()));
  }
  std::vector<Poly> out;
  for (const auto& r : acc.rows()) out.push_back(w.coords.poly(r));
  return out;
}

RegularityReport regularity_report(const SeriesRing& R, const SeriesElement& f, int d) {
  RegularityReport rep;
  const auto domain = R.sigma_basis(d);
  rep.domain_dim = domain.size();
  auto kernel_dim = [&](int t_precision) {
    Coordinates coords;
    std::vector<SparseVec> images;
    for (const auto& m : domain) images.push_back(coords.vec(R.multiply(f.terms(), Poly{{m, 1}}, t_precision)));
    return kernel(R.field(), images, coords.size()).size();
  };
  rep.structural_kernel_dim = kernel_dim(0);
  const std::size_t truncated = kernel_dim(R.precision());
  rep.truncation_kernel_dim = truncated > rep.structural_kernel_dim ? truncated - rep.structural_kernel_dim : 0;
  rep.regular = rep.structural_kernel_dim == 0;
  return rep;
}

bool is_regular(const SeriesRing& R, const SeriesElement& f, int d) { return regularity_report(R, f, d).regular; }

bool PrimaryDecompReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

PrimaryDecompReport primary_decomp_report(const PrimaryDecompConfig& c) {
  if (c.l < 1 || c.n < 0 || c.a < 1 || c.N < 1 || c.d < 0)
    throw ParamsOutOfRange("need l >= 1, n >= 0, a >= 1, N >= 1, d >= 0");
  if (c.B.size() != static_cast<std::size_t>(c.n) || c.I.size() != static_cast<std::size_t>(c.n))
    throw ParamsOutOfRange("B and I must have n entries");
  for (int j = 0; j < c.n; ++j)
    if (c.I[static_cast<std::size_t>(j)] < 0 || c.I[static_cast<std::size_t>(j)] > c.B[static_cast<std::size_t>(j)])
      throw ParamsOutOfRange("need 0 <= I(j) <= B(j)");
  const SeriesRing R = SeriesRing::semistable_model(c.p, c.N, c.l, c.B, c.a, c.d);
  const std::size_t nv = R.n_vars(), l = static_cast<std::size_t>(c.l);
  Window w = make_window(R, R.window(c.d), 0);
  auto mono = [&](int e, std::vector<std::pair<std::size_t, int>> xs) {
    Mono m(nv + 1, 0);
    m[0] = e;
    for (auto [i, k] : xs) m[i + 1] += k;
    return Poly{{m, 1}};
  };
  auto x = [&](std::size_t i) { return mono(0, {{i, 1}}); };
  auto y = [&](std::size_t j, int k = 1) { return mono(0, {{l + j, k}}); };
  std::vector<std::pair<std::size_t, int>> yI;
  for (std::size_t j = 0; j < static_cast<std::size_t>(c.n); ++j)
    if (c.I[j] > 0) yI.emplace_back(l + j, c.I[j]);
  const Poly tay = mono(c.a, yI);
  const std::string tay_s = R.format(tay);

  auto span = [&](const std::vector<Poly>& gens) { return ideal_span(R, w, gens); };
  auto meet_all = [&](const std::vector<std::vector<Poly>>& ideals) {
    Echelon acc = span(ideals.front());
    for (std::size_t i = 1; i < ideals.size(); ++i)
      acc = span_of(R.field(), intersect(acc, span(ideals[i]), w.coords.size()));
    return acc;
  };
  auto gens_s = [&](const std::vector<Poly>& gens) {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + R.format(gens[i]);
    return s + ")";
  };
  auto ideals_s = [&](const std::vector<std::vector<Poly>>& ideals) {
    std::string s;
    for (std::size_t i = 0; i < ideals.size(); ++i) s += (i ? " cap " : "") + gens_s(ideals[i]);
    return s;
  };

  PrimaryDecompReport rep;
  auto record = [&](std::string name, const std::vector<Poly>& lhs, const std::vector<std::vector<Poly>>& rhs) {
    const bool ok = same_span(span(lhs), meet_all(rhs));
    rep.checks.push_back({std::move(name), gens_s(lhs) + " = " + ideals_s(rhs), ok});
  };

  {
    std::vector<std::vector<Poly>> rhs;
    for (std::size_t i = 0; i < l; ++i) rhs.push_back({x(i), tay});
    record("(3)", {tay}, rhs);
  }
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<std::vector<Poly>> rhs{{x(i), mono(c.a, {})}};
    for (std::size_t j = 0; j < static_cast<std::size_t>(c.n); ++j)
      if (c.I[j] > 0) rhs.push_back({x(i), y(j, c.I[j])});
    record("(4) i=" + std::to_string(i + 1), {x(i), tay}, rhs);
  }
  for (unsigned mask = 1; mask < (1u << c.n); ++mask) {
    std::vector<std::pair<std::size_t, int>> prod;
    std::vector<std::vector<Poly>> rhs;
    std::string label;
    for (std::size_t j = 0; j < static_cast<std::size_t>(c.n); ++j)
      if (mask & (1u << j)) {
        prod.emplace_back(l + j, 1);
        rhs.push_back({y(j)});
        label += (label.empty() ? "" : ",") + std::to_string(j + 1);
      }
    record("(5) {" + label + "}", {mono(0, prod)}, rhs);
  }
  std::mt19937_64 rng(c.seed);
  for (std::size_t j = 0; j < static_cast<std::size_t>(c.n); ++j) {
    if (c.B[j] > 0) {
      std::vector<std::vector<Poly>> rhs;
      for (std::size_t i = 0; i < l; ++i) rhs.push_back({x(i), y(j)});
      record("(6) j=" + std::to_string(j + 1) + " decomposition", {y(j)}, rhs);
      continue;
    }
    // y_j prime: no f outside (y_j) kills a g outside (y_j) modulo (y_j)
    Echelon ideal = span({y(j)});
    std::vector<bool> pivot(w.coords.size(), false);
    for (const auto& r : ideal.rows()) pivot[r.front().first] = true;
    std::vector<Mono> complement;
    for (const auto& m : w.basis)
      if (!pivot[*w.coords.find(m)]) complement.push_back(m);
    std::vector<Poly> samples;
    for (const auto& m : complement)
      if (R.weight(m) <= 2 * R.grading()->t + 1 && R.weight(m) > 0) samples.push_back(Poly{{m, 1}});
    for (int k = 0; k < 4; ++k) {
      const int target = 1 + static_cast<int>(rng() % 3);
      Poly f;
      for (const auto& m : complement)
        if (R.weight(m) == target) {
          const std::uint32_t coef = static_cast<std::uint32_t>(rng() % c.p);
          if (coef) f[m] = coef;
        }
      if (!f.empty()) samples.push_back(std::move(f));
    }
    bool ok = true;
    for (const auto& f : samples) {
      const int wf = *R.homogeneous_weight(f);
      std::vector<SparseVec> images;
      for (const auto& g : complement) {
        if (R.weight(g) + wf > w.max_weight) continue;
        images.push_back(ideal.reduce(w.coords.vec(R.multiply(f, Poly{{g, 1}}, 0))));
      }
      if (!kernel(R.field(), images, w.coords.size()).empty()) {
        ok = false;
        break;
      }
    }
    rep.checks.push_back({"(6) j=" + std::to_string(j + 1) + " prime",
                          "R/" + gens_s({y(j)}) + " has no zero divisors among " + std::to_string(samples.size()) +
                              " sampled elements",
                          ok});
  }
  return rep;
}

PrimaryDecompReport primary_decomp_check(const PrimaryDecompConfig& c) {
  auto rep = primary_decomp_report(c);
  for (const auto& chk : rep.checks)
    if (!chk.passed) throw CheckFailed("identity " + chk.name + " fails: " + chk.statement);
  return rep;
}

UnitRigidityReport unit_rigidity_report(const SeriesRing& R, const std::vector<SeriesElement>& J,
                                        const std::vector<Word>& supports, int d) {
  if (!R.relation()) throw InvalidArgument("unit rigidity needs a ring with a relation X^T = a");
  const std::size_t n = R.n_vars();
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if (supports[i].size() != n) throw InvalidArgument("support vector has wrong length");
    for (std::size_t k = i + 1; k < supports.size(); ++k)
      if (!is_zero(meet(supports[i], supports[k]))) throw InvalidArgument("supports must be pairwise disjoint");
  }
  const int tp = R.precision();
  Window w = make_window(R, R.window(d), tp);
  Echelon jspan = ideal_span(R, w, polys(J));
  Echelon box(R.field());
  for (const auto& m : w.basis)
    if (x_degree(m) <= d) box.insert(SparseVec{{*w.coords.find(m), 1}});
  const auto jd = intersect(jspan, box, w.coords.size());
  std::vector<Poly> basis;
  for (const auto& v : jd) basis.push_back(w.coords.poly(v));

  UnitRigidityReport rep;
  rep.j_dim = basis.size();
  rep.square_zero = true;
  for (std::size_t a = 0; a < basis.size() && rep.square_zero; ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (!R.multiply(basis[a], basis[b], tp).empty()) {
        rep.square_zero = false;
        break;
      }

  auto x_pow = [&](const Word& I) {
    Mono m(n + 1, 0);
    std::copy(I.begin(), I.end(), m.begin() + 1);
    return Poly{{m, 1}};
  };
  const std::size_t l = supports.size(), m = basis.size();
  // columns: block 0 holds sum a_i, block i+1 holds X^{I_i} a_i
  std::map<std::pair<std::size_t, Mono>, std::size_t> cols;
  auto col = [&](std::size_t block, const Mono& mono) {
    auto [it, fresh] = cols.emplace(std::make_pair(block, mono), cols.size());
    return it->second;
  };
  std::vector<std::vector<Poly>> shifted(l);
  for (std::size_t i = 0; i < l; ++i)
    for (const auto& b : basis) shifted[i].push_back(R.multiply(x_pow(supports[i]), b, tp));
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      SparseVec v;
      for (const auto& [mono, c] : basis[k]) v.emplace_back(col(0, mono), c);
      for (const auto& [mono, c] : shifted[i][k]) v.emplace_back(col(i + 1, mono), c);
      std::sort(v.begin(), v.end());
      images.push_back(std::move(v));
    }
  const auto ker = kernel(R.field(), images, cols.size());
  rep.solution_dim = ker.size();
  rep.only_trivial = ker.empty();
  if (!ker.empty()) {
    rep.counterexample.assign(l, Poly{});
    for (const auto& [idx, c] : ker.front()) {
      const std::size_t i = idx / m, k = idx % m;
      for (const auto& [mono, x] : basis[k]) add_term(rep.counterexample[i], mono, R.field().mul(c, x), R.field());
    }
  }

  const Word& T = R.relation()->T;
  rep.annihilator_claim = true;
  for (std::size_t i = 0; i < l; ++i) {
    Coordinates coords;
    std::vector<SparseVec> imgs;
    for (const auto& s : shifted[i]) imgs.push_back(coords.vec(s));
    for (const auto& kv : kernel(R.field(), imgs, coords.size())) {
      Poly f;
      for (const auto& [k, c] : kv)
        for (const auto& [mono, x] : basis[k]) add_term(f, mono, R.field().mul(c, x), R.field());
      for (const auto& [mono, c] : f)
        for (std::size_t v = 0; v < n; ++v)
          if (mono[v + 1] + supports[i][v] < T[v]) rep.annihilator_claim = false;
    }
  }
  return rep;
}

UnitRigidityReport unit_rigidity_check(const SeriesRing& R, const std::vector<SeriesElement>& J,
                                       const std::vector<Word>& supports, int d) {
  auto rep = unit_rigidity_report(R, J, supports, d);
  if (!rep.square_zero) throw InvalidArgument("J^2 != 0 in the truncated ring");
  if (!rep.only_trivial) {
    std::string s;
    for (std::size_t i = 0; i < rep.counterexample.size(); ++i)
      s += (i ? ", " : "") + R.format(rep.counterexample[i]);
    throw CounterexampleFound("nonzero tuple (" + s + ") satisfies the constraints; structural kernel of dimension " +
                              std::to_string(rep.solution_dim));
  }
  return rep;
}

UnitProductReport unit_product_identity(const SeriesRing& R, const std::vector<SeriesElement>& u,
                                        const std::vector<SeriesElement>& v, const std::vector<int>& B, int d) {
  if (!R.relation() || R.relation()->G.size() != 1)
    throw InvalidArgument("unit product identity needs a relation X^Delta = t^a Y^B");
  if (v.size() != B.size()) throw InvalidArgument("need one unit v_j per entry of B");
  const Poly& tyB = R.relation()->G;
  UnitProductReport rep;
  rep.regular = is_regular(R, R.element(tyB), d);
  if (!rep.regular) throw RegularityFailure(R.format(tyB) + " is not regular");
  const Mono one(R.n_vars() + 1, 0);
  Poly U{{one, 1}}, V{{one, 1}};
  for (const auto& x : u) U = R.multiply(U, x.terms(), 0);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (int k = 0; k < B[j]; ++k) V = R.multiply(V, v[j].terms(), 0);
  Poly diff = U;
  for (const auto& [m, c] : V) add_term(diff, m, R.field().neg(c), R.field());
  diff = R.reduce(diff, 0);
  rep.identity_holds = diff.empty();
  rep.constraint_holds = R.multiply(diff, tyB, 0).empty();
  return rep;
}

}  // namespace logmonoid
