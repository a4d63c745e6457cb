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

#include "logmonoid/word.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

#include "logmonoid/error.hpp"

namespace logmonoid {

int degree(const Word& w) noexcept { return std::accumulate(w.begin(), w.end(), 0); }

Word add(const Word& a, const Word& b) {
  if (a.size() != b.size()) throw InvalidArgument("word length mismatch in add");
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Word scale(const Word& a, int k) {
  Word r(a);
  for (auto& x : r) x *= k;
  return r;
}

bool divides(const Word& a, const Word& b) noexcept {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Word subtract(const Word& b, const Word& a) {
  assert(divides(a, b));
  Word r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

Word unit_vector(std::size_t n, std::size_t i) {
  Word r(n, 0);
  r.at(i) = 1;
  return r;
}

bool is_zero(const Word& w) noexcept {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Word meet(const Word& a, const Word& b) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Word join(const Word& a, const Word& b) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ']';
  return os.str();
}

namespace {

void fill_degree(std::size_t n, std::size_t pos, int remaining, Word& cur,
                 std::vector<Word>& out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    fill_degree(n, pos + 1, remaining - k, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Word> words_of_degree(std::size_t n, int d) {
  std::vector<Word> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Word cur(n, 0);
  fill_degree(n, 0, d, cur, out);
  return out;
}

std::vector<Word> words_up_to_degree(std::size_t n, int d) {
  std::vector<Word> out;
  for (int k = 0; k <= d; ++k) {
    auto layer = words_of_degree(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Word> words_in_box(std::size_t n, int cap) {
  std::vector<Word> out;
  Word cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == cap) cur[i++] = 0;
    if (i == n) break;
    ++cur[i];
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int x : w) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace logmonoid
