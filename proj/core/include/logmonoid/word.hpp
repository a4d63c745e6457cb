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

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace logmonoid {

/// Exponent vector over an ordered generator list. Entries are non-negative.
using Word = std::vector<int>;

int degree(const Word& w) noexcept;
Word add(const Word& a, const Word& b);
Word scale(const Word& a, int k);
/// Componentwise a <= b.
bool divides(const Word& a, const Word& b) noexcept;
/// b - a, assuming divides(a, b).
Word subtract(const Word& b, const Word& a);
Word unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Word& w) noexcept;
/// Componentwise minimum and maximum.
Word meet(const Word& a, const Word& b);
Word join(const Word& a, const Word& b);
std::string to_string(const Word& w);

/// All words of length n with total degree exactly d, in a fixed order.
std::vector<Word> words_of_degree(std::size_t n, int d);
/// All words of length n with total degree <= d, ordered by degree.
std::vector<Word> words_up_to_degree(std::size_t n, int d);
/// All words with every entry in [0, cap].
std::vector<Word> words_in_box(std::size_t n, int cap);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace logmonoid
