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

#include <string>
#include <vector>

#include "json.hpp"

#include "logmonoid/log_monoid.hpp"
#include "logmonoid/monoid.hpp"
#include "logmonoid/semistable.hpp"
#include "logmonoid/toy_ring.hpp"

namespace logmonoid::cli {

using nlohmann::json;

/// Reads a JSON file; throws SchemaError on I/O or syntax errors.
json read_json_file(const std::string& path);

// Parsers take the JSON pointer of the value for error messages.
Word parse_word(const json& j, const std::string& ptr, std::size_t length);
std::vector<Word> parse_words(const json& j, const std::string& ptr, std::size_t length);
MonoidPresentation parse_monoid(const json& j, const std::string& ptr, int default_bound);
MonoidHom parse_hom(const json& j, const std::string& ptr, int default_bound);
/// Structure fields sigma/q0/Delta/B, either under "structure" or at the top level of j.
SemistableStructure parse_structure(const json& j, const std::string& ptr, const MonoidHom& h);
/// {"kind": "prime"|"gf"|"dvr", "p": .., "k": .., "N": ..}
ToyRing parse_ring(const json& j, const std::string& ptr);
/// A ring element as a coordinate array (or a plain integer in a prime field).
RingElt parse_ring_element(const json& j, const std::string& ptr, const ToyRing& r);

json to_json(const MonoidPresentation& m);
json to_json(const MonoidHom& h);
json to_json(const SemistableStructure& s);
json word_json(const Word& w);
json words_json(const std::vector<Word>& ws);

}  // namespace logmonoid::cli
