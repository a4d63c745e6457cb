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

#include "logmonoid/toy_ring.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <sstream>

#include "logmonoid/error.hpp"

namespace logmonoid {

namespace detail {

struct QuotientInfo {
  ToyRing parent;
  std::vector<std::size_t> parent_order;  // parent column -> echelon column
  Echelon ideal;
  std::vector<std::size_t> kept;  // echelon columns forming the new basis, in order
};

struct ToyRingData {
  ToyRing::Kind kind = ToyRing::Kind::Prime;
  PrimeField field{2};
  int k = 1;
  std::size_t n = 1;
  std::uint64_t size = 2;
  std::string var = "x";
  std::vector<std::uint32_t> modulus;  // polynomial kinds: low coefficients of m
  std::vector<std::vector<std::uint32_t>> table;  // e_i e_j at i * n + j
  std::shared_ptr<QuotientInfo> quotient;
  std::once_flag units_once;
  std::vector<RingElt> units;
};

}  // namespace detail

namespace {

using Poly1 = std::vector<std::uint32_t>;  // coefficients from x^0 up

void trim(Poly1& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic b
Poly1 poly_mod(Poly1 a, const Poly1& b, const PrimeField& F) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

bool irreducible(const Poly1& m, const PrimeField& F) {
  const int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F.p();
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly1 g(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % F.p());
        c /= F.p();
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (poly_mod(m, g, F).empty()) return false;
    }
  }
  return true;
}

std::uint64_t checked_size(std::uint32_t p, std::size_t n) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < n; ++i) {
    s *= p;
    if (s > ToyRing::kMaxSize) throw InvalidArgument("toy ring too large to enumerate");
  }
  return s;
}

std::vector<std::uint32_t> axpy(std::vector<std::uint32_t> y, std::uint32_t a, const std::vector<std::uint32_t>& x,
                                const PrimeField& F) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(a, x[i]));
  return y;
}

SparseVec sparse(const std::vector<std::uint32_t>& c) {
  SparseVec v;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) v.emplace_back(i, c[i]);
  return v;
}

}  // namespace

ToyRing ToyRing::polynomial_quotient(std::uint32_t p, std::vector<std::uint32_t> m_low, Kind kind, std::string var) {
  auto d = std::make_shared<detail::ToyRingData>();
  d->field = PrimeField(p);
  d->kind = kind;
  d->n = m_low.size();
  if (d->n == 0) throw InvalidArgument("modulus must have positive degree");
  d->size = checked_size(p, d->n);
  d->k = static_cast<int>(d->n);
  d->var = std::move(var);
  for (auto& c : m_low) c = d->field.reduce(c);
  d->modulus = m_low;
  Poly1 m = m_low;
  m.push_back(1);
  d->table.resize(d->n * d->n);
  for (std::size_t i = 0; i < d->n; ++i)
    for (std::size_t j = 0; j < d->n; ++j) {
      Poly1 xp(i + j + 1, 0);
      xp[i + j] = 1;
      Poly1 r = poly_mod(xp, m, d->field);
      r.resize(d->n, 0);
      d->table[i * d->n + j] = r;
    }
  return ToyRing(d);
}

ToyRing ToyRing::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  ToyRing r = polynomial_quotient(p, {0}, Kind::Prime, "x");
  return r;
}

ToyRing ToyRing::galois(std::uint32_t p, int k) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (k < 1) throw InvalidArgument("Galois degree must be positive");
  if (k == 1) return prime(p);
  const PrimeField F(p);
  const std::uint64_t count = checked_size(p, static_cast<std::size_t>(k));
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly1 m(static_cast<std::size_t>(k) + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      m[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m.back() = 1;
    if (m[0] != 0 && irreducible(m, F)) {
      m.pop_back();
      return polynomial_quotient(p, m, Kind::Galois, "x");
    }
  }
  throw InvalidArgument("no irreducible polynomial found");
}

ToyRing ToyRing::truncated_dvr(std::uint32_t p, int N) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (N < 1) throw InvalidArgument("precision must be positive");
  return polynomial_quotient(p, Poly1(static_cast<std::size_t>(N), 0), Kind::TruncatedDVR, "t");
}

ToyRing ToyRing::tensor(const ToyRing& a, const ToyRing& b) {
  if (a.p() != b.p()) throw InvalidArgument("tensor factors have different characteristic");
  auto d = std::make_shared<detail::ToyRingData>();
  d->field = a.field();
  d->kind = Kind::Algebra;
  const std::size_t na = a.dim(), nb = b.dim();
  d->n = na * nb;
  d->size = checked_size(a.p(), d->n);
  d->table.resize(d->n * d->n);
  const auto& F = d->field;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l) {
          const auto& ca = a.d_->table[i * na + k];
          const auto& cb = b.d_->table[j * nb + l];
          std::vector<std::uint32_t> out(d->n, 0);
          for (std::size_t x = 0; x < na; ++x)
            if (ca[x])
              for (std::size_t y = 0; y < nb; ++y) out[x * nb + y] = F.add(out[x * nb + y], F.mul(ca[x], cb[y]));
          d->table[(i * nb + j) * d->n + (k * nb + l)] = std::move(out);
        }
  return ToyRing(d);
}

ToyRing ToyRing::quotient(const std::vector<RingElt>& gens) const {
  const std::size_t n = dim();
  const auto& F = field();
  auto info = std::make_shared<detail::QuotientInfo>(detail::QuotientInfo{*this, {}, Echelon(F), {}});
  // the unit coordinate goes last so it can only become a pivot when 1 lies in the ideal
  info->parent_order.resize(n);
  for (std::size_t c = 0; c < n; ++c) info->parent_order[c] = n - 1 - c;
  auto to_echelon = [&](RingElt a) {
    SparseVec v;
    const auto c = coords(a);
    for (std::size_t i = 0; i < n; ++i)
      if (c[i]) v.emplace_back(info->parent_order[i], c[i]);
    std::sort(v.begin(), v.end());
    return v;
  };
  for (RingElt g : gens)
    for (std::size_t j = 0; j < n; ++j) info->ideal.insert(to_echelon(mul(g, basis(j))));
  std::vector<bool> pivot(n, false);
  for (const auto& r : info->ideal.rows()) pivot[r.front().first] = true;
  if (pivot[info->parent_order[0]]) throw InvalidArgument("quotient by the unit ideal");
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[info->parent_order[c]]) info->kept.push_back(info->parent_order[c]);
  auto d = std::make_shared<detail::ToyRingData>();
  d->field = F;
  d->kind = Kind::Algebra;
  d->n = info->kept.size();
  d->size = checked_size(F.p(), d->n);
  auto project = [&](RingElt a) {
    const SparseVec r = info->ideal.reduce(to_echelon(a));
    std::vector<std::uint32_t> out(d->n, 0);
    for (const auto& [col, val] : r) {
      auto it = std::find(info->kept.begin(), info->kept.end(), col);
      out[static_cast<std::size_t>(it - info->kept.begin())] = val;
    }
    return out;
  };
  d->table.resize(d->n * d->n);
  for (std::size_t i = 0; i < d->n; ++i)
    for (std::size_t j = 0; j < d->n; ++j) {
      const RingElt bi = basis(n - 1 - info->kept[i]), bj = basis(n - 1 - info->kept[j]);
      d->table[i * d->n + j] = project(mul(bi, bj));
    }
  d->quotient = info;
  return ToyRing(d);
}

RingHom ToyRing::quotient_map() const {
  if (!d_->quotient) throw InvalidArgument("ring was not built as a quotient");
  const auto& info = *d_->quotient;
  const ToyRing& parent = info.parent;
  std::vector<RingElt> images;
  for (std::size_t i = 0; i < parent.dim(); ++i) {
    SparseVec v{{info.parent_order[i], 1}};
    const SparseVec r = info.ideal.reduce(v);
    std::vector<std::uint32_t> out(dim(), 0);
    for (const auto& [col, val] : r) {
      auto it = std::find(info.kept.begin(), info.kept.end(), col);
      out[static_cast<std::size_t>(it - info.kept.begin())] = val;
    }
    images.push_back(from_coords(out));
  }
  return RingHom(parent, *this, std::move(images));
}

ToyRing::Kind ToyRing::kind() const noexcept { return d_->kind; }
std::uint32_t ToyRing::p() const noexcept { return d_->field.p(); }
int ToyRing::k() const noexcept { return d_->k; }
std::size_t ToyRing::dim() const noexcept { return d_->n; }
std::uint64_t ToyRing::size() const noexcept { return d_->size; }
const PrimeField& ToyRing::field() const noexcept { return d_->field; }

std::string ToyRing::describe() const {
  const std::string p = std::to_string(this->p());
  switch (kind()) {
    case Kind::Prime: return "F_" + p;
    case Kind::Galois: {
      std::vector<std::uint32_t> m = d_->modulus;
      m.push_back(1);
      std::string poly;
      for (std::size_t i = m.size(); i-- > 0;) {
        if (!m[i]) continue;
        if (!poly.empty()) poly += "+";
        if (i == 0 || m[i] != 1) poly += std::to_string(m[i]);
        if (i > 0) poly += i == 1 ? "x" : "x^" + std::to_string(i);
      }
      return "F_" + std::to_string(size()) + " = F_" + p + "[x]/(" + poly + ")";
    }
    case Kind::TruncatedDVR: return "F_" + p + "[t]/(t^" + std::to_string(k()) + ")";
    case Kind::Algebra: return "algebra of dimension " + std::to_string(dim()) + " over F_" + p;
  }
  return "";
}

RingElt ToyRing::from_int(std::int64_t c) const { return field().reduce(c); }

RingElt ToyRing::basis(std::size_t i) const {
  if (i >= dim()) throw InvalidArgument("basis index out of range");
  std::vector<std::uint32_t> c(dim(), 0);
  c[i] = 1;
  return from_coords(c);
}

RingElt ToyRing::generator() const {
  if (kind() == Kind::Algebra) throw InvalidArgument("structure-constant algebras have no distinguished generator");
  if (dim() == 1) return 0;
  return basis(1);
}

std::vector<std::uint32_t> ToyRing::coords(RingElt a) const {
  if (a >= size()) throw InvalidArgument("ring element index out of range");
  std::vector<std::uint32_t> c(dim());
  for (auto& x : c) {
    x = a % p();
    a /= p();
  }
  return c;
}

RingElt ToyRing::from_coords(const std::vector<std::uint32_t>& c) const {
  if (c.size() != dim()) throw InvalidArgument("coordinate vector has wrong length");
  RingElt a = 0;
  for (std::size_t i = c.size(); i-- > 0;) a = a * p() + field().reduce(c[i]);
  return a;
}

RingElt ToyRing::add(RingElt a, RingElt b) const {
  auto ca = coords(a);
  const auto cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = field().add(ca[i], cb[i]);
  return from_coords(ca);
}

RingElt ToyRing::scale(RingElt a, std::uint32_t c) const {
  auto ca = coords(a);
  for (auto& x : ca) x = field().mul(x, field().reduce(c));
  return from_coords(ca);
}

RingElt ToyRing::neg(RingElt a) const { return scale(a, p() - 1); }
RingElt ToyRing::sub(RingElt a, RingElt b) const { return add(a, neg(b)); }

RingElt ToyRing::mul(RingElt a, RingElt b) const {
  const auto ca = coords(a), cb = coords(b);
  const std::size_t n = dim();
  std::vector<std::uint32_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    if (ca[i])
      for (std::size_t j = 0; j < n; ++j)
        if (cb[j]) out = axpy(std::move(out), field().mul(ca[i], cb[j]), d_->table[i * n + j], field());
  return from_coords(out);
}

RingElt ToyRing::pow(RingElt a, std::uint64_t e) const {
  RingElt r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool ToyRing::is_unit(RingElt a) const {
  Echelon e(field());
  for (std::size_t j = 0; j < dim(); ++j) e.insert(sparse(coords(mul(a, basis(j)))));
  return e.rank() == dim();
}

bool ToyRing::is_field() const { return units().size() + 1 == size(); }

const std::vector<RingElt>& ToyRing::units() const {
  std::call_once(d_->units_once, [this] {
    for (RingElt a = 0; a < size(); ++a)
      if (is_unit(a)) d_->units.push_back(a);
  });
  return d_->units;
}

RingElt ToyRing::inverse(RingElt u) const {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < dim(); ++j) cols.push_back(sparse(coords(mul(u, basis(j)))));
  cols.push_back(SparseVec{{0, p() - 1}});
  for (const auto& k : kernel(field(), cols, dim())) {
    std::optional<std::uint32_t> last;
    for (const auto& [i, c] : k)
      if (i == dim()) last = c;
    if (!last) continue;
    const std::uint32_t s = field().inv(*last);
    std::vector<std::uint32_t> b(dim(), 0);
    for (const auto& [i, c] : k)
      if (i < dim()) b[i] = field().mul(c, s);
    return from_coords(b);
  }
  throw InvalidArgument(format(u) + " is not a unit");
}

std::string ToyRing::format(RingElt a) const {
  const auto c = coords(a);
  if (kind() == Kind::Algebra) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
  }
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i]) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) s += std::to_string(c[i]) + "*";
    s += d_->var + (i == 1 ? "" : "^" + std::to_string(i));
  }
  return s.empty() ? "0" : s;
}

RingHom::RingHom(ToyRing source, ToyRing target, std::vector<RingElt> basis_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(basis_images)) {
  if (source_.p() != target_.p()) throw NotRingHom("rings have different characteristic");
  if (images_.size() != source_.dim()) throw NotRingHom("need one image per basis vector");
  for (RingElt x : images_)
    if (x >= target_.size()) throw NotRingHom("image is not an element of the target");
  if ((*this)(source_.one()) != target_.one()) throw NotRingHom("map is not unital");
  for (std::size_t i = 0; i < source_.dim(); ++i)
    for (std::size_t j = i; j < source_.dim(); ++j)
      if ((*this)(source_.mul(source_.basis(i), source_.basis(j))) != target_.mul(images_[i], images_[j]))
        throw NotRingHom("map is not multiplicative on basis elements " + std::to_string(i) + ", " +
                         std::to_string(j));
}

RingHom RingHom::identity(const ToyRing& r) {
  std::vector<RingElt> im;
  for (std::size_t i = 0; i < r.dim(); ++i) im.push_back(r.basis(i));
  return RingHom(r, r, im);
}

RingHom RingHom::structure_map(const ToyRing& prime, const ToyRing& target) {
  if (prime.dim() != 1) throw NotRingHom("source is not a prime field");
  return RingHom(prime, target, {target.one()});
}

RingHom RingHom::from_generator(const ToyRing& source, const ToyRing& target, RingElt image) {
  if (source.kind() == ToyRing::Kind::Algebra) throw NotRingHom("source has no distinguished generator");
  std::vector<RingElt> im;
  for (std::size_t i = 0; i < source.dim(); ++i) im.push_back(target.pow(image, i));
  return RingHom(source, target, im);
}

RingElt RingHom::operator()(RingElt a) const {
  const auto c = source_.coords(a);
  RingElt out = target_.zero();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) out = target_.add(out, target_.scale(images_[i], c[i]));
  return out;
}

RingHom RingHom::compose_after(const RingHom& inner) const {
  if (!inner.target_.same_as(source_)) throw NotRingHom("maps are not composable");
  std::vector<RingElt> im;
  for (RingElt x : inner.images_) im.push_back((*this)(x));
  return RingHom(inner.source_, target_, im);
}

bool RingHom::injective() const {
  Echelon e(source_.field());
  for (RingElt x : images_) e.insert(sparse(target_.coords(x)));
  return e.rank() == source_.dim();
}

bool RingHom::is_identity() const {
  if (!source_.same_as(target_)) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != source_.basis(i)) return false;
  return true;
}

bool RingHom::quasi_local() const {
  for (RingElt a = 0; a < source_.size(); ++a)
    if (target_.is_unit((*this)(a)) && !source_.is_unit(a)) return false;
  return true;
}

TensorSquare tensor_square(const RingHom& f) {
  const ToyRing& A = f.source();
  const ToyRing& B = f.target();
  const ToyRing T = ToyRing::tensor(B, B);
  const std::size_t n = B.dim();
  auto pure = [&](RingElt u, RingElt v) {
    const auto cu = B.coords(u), cv = B.coords(v);
    std::vector<std::uint32_t> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] = B.field().mul(cu[i], cv[j]);
    return T.from_coords(c);
  };
  std::vector<RingElt> gens;
  for (std::size_t i = 1; i < A.dim(); ++i) {
    const RingElt b = f(A.basis(i));
    gens.push_back(T.sub(pure(b, B.one()), pure(B.one(), b)));
  }
  const ToyRing C = T.quotient(gens);
  const RingHom proj = C.quotient_map();
  std::vector<RingElt> pim, qim;
  for (std::size_t i = 0; i < n; ++i) {
    pim.push_back(proj(pure(B.basis(i), B.one())));
    qim.push_back(proj(pure(B.one(), B.basis(i))));
  }
  return TensorSquare{C, RingHom(B, C, pim), RingHom(B, C, qim)};
}

bool faithfully_flat(const RingHom& f) {
  const ToyRing& A = f.source();
  const ToyRing& B = f.target();
  Echelon maximal(A.field());
  for (RingElt a = 0; a < A.size(); ++a)
    if (!A.is_unit(a)) maximal.insert(sparse(A.coords(a)));
  // a local ring's non-units form an ideal, so their span has exactly |A| - |A^x| elements
  std::uint64_t span_size = 1;
  for (std::size_t i = 0; i < maximal.rank(); ++i) span_size *= A.p();
  if (span_size != A.size() - A.units().size()) throw NotFaithfullyFlat("base ring is not local");
  Echelon mB(B.field());
  for (const auto& row : maximal.rows()) {
    std::vector<std::uint32_t> c(A.dim(), 0);
    for (const auto& [i, v] : row) c[i] = v;
    const RingElt image = f(A.from_coords(c));
    for (std::size_t j = 0; j < B.dim(); ++j) mB.insert(sparse(B.coords(B.mul(image, B.basis(j)))));
  }
  const std::size_t residue_A = A.dim() - maximal.rank();
  const std::size_t fibre = B.dim() - mB.rank();
  if (fibre == 0 || fibre % residue_A != 0) return false;
  const std::size_t r = fibre / residue_A;
  return B.dim() == A.dim() * r;
}

}  // namespace logmonoid
