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

#include "logmonoid/modp_linalg.hpp"

#include "logmonoid/error.hpp"

namespace logmonoid {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 16)) throw InvalidArgument("characteristic must be a prime below 65536");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1 % p_, b = a % p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw InvalidArgument("division by zero in Z/p");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::reduce(std::int64_t a) const noexcept {
  const std::int64_t p = p_;
  return static_cast<std::uint32_t>(((a % p) + p) % p);
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  std::map<std::size_t, std::uint32_t> work(v.begin(), v.end());
  for (auto it = work.begin(); it != work.end();) {
    auto piv = pivot_.find(it->first);
    if (piv == pivot_.end()) {
      ++it;
      continue;
    }
    const std::uint32_t c = it->second;
    for (const auto& [col, val] : rows_[piv->second]) {
      auto [w, fresh] = work.emplace(col, 0);
      w->second = field_.sub(w->second, field_.mul(c, val));
    }
    // the leading entry cancels; later columns may have become zero
    auto next = std::next(it);
    work.erase(it);
    it = next;
    while (it != work.end() && it->second == 0) it = work.erase(it);
  }
  SparseVec out;
  for (const auto& [col, val] : work)
    if (val != 0) out.emplace_back(col, val);
  return out;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const std::uint32_t inv = field_.inv(r.front().second);
  for (auto& e : r) e.second = field_.mul(e.second, inv);
  pivot_.emplace(r.front().first, rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Echelon span_of(const PrimeField& f, const std::vector<SparseVec>& vs) {
  Echelon e(f);
  for (const auto& v : vs) e.insert(v);
  return e;
}

bool contains_span(const Echelon& big, const Echelon& small) {
  for (const auto& r : small.rows())
    if (!big.contains(r)) return false;
  return true;
}

bool same_span(const Echelon& a, const Echelon& b) {
  return a.rank() == b.rank() && contains_span(a, b);
}

std::vector<SparseVec> intersect(const Echelon& a, const Echelon& b, std::size_t dim) {
  Echelon z(a.field());
  for (const auto& r : a.rows()) {
    SparseVec v(r);
    for (const auto& [c, x] : r) v.emplace_back(dim + c, x);
    z.insert(v);
  }
  for (const auto& r : b.rows()) z.insert(r);
  std::vector<SparseVec> out;
  for (const auto& r : z.rows()) {
    if (r.front().first < dim) continue;
    SparseVec v;
    for (const auto& [c, x] : r) v.emplace_back(c - dim, x);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SparseVec> kernel(const PrimeField& f, const std::vector<SparseVec>& images, std::size_t dim) {
  Echelon e(f);
  for (std::size_t i = 0; i < images.size(); ++i) {
    SparseVec v(images[i]);
    v.emplace_back(dim + i, 1);
    e.insert(v);
  }
  std::vector<SparseVec> out;
  for (const auto& r : e.rows()) {
    if (r.front().first < dim) continue;
    SparseVec v;
    for (const auto& [c, x] : r) v.emplace_back(c - dim, x);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace logmonoid
