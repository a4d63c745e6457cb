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

#include "logmonoid_cli/json_io.hpp"

#include <fstream>

#include "logmonoid/error.hpp"

namespace logmonoid::cli {

namespace {

[[noreturn]] void fail(const std::string& ptr, const std::string& what) {
  throw SchemaError((ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

const json& field(const json& j, const std::string& ptr, const char* key) {
  if (!j.is_object()) fail(ptr, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ptr + "/" + key, "missing field");
  return *it;
}

int parse_int(const json& j, const std::string& ptr, int lo, int hi) {
  if (!j.is_number_integer()) fail(ptr, "expected an integer");
  const auto v = j.get<long long>();
  if (v < lo || v > hi) fail(ptr, "integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(v);
}

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

Word parse_word(const json& j, const std::string& ptr, std::size_t length) {
  if (!j.is_array()) fail(ptr, "expected an exponent vector");
  if (j.size() != length) fail(ptr, "expected " + std::to_string(length) + " entries, got " + std::to_string(j.size()));
  Word w;
  for (std::size_t i = 0; i < j.size(); ++i) w.push_back(parse_int(j[i], ptr + "/" + std::to_string(i), 0, 1 << 20));
  return w;
}

std::vector<Word> parse_words(const json& j, const std::string& ptr, std::size_t length) {
  if (!j.is_array()) fail(ptr, "expected an array of exponent vectors");
  std::vector<Word> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_word(j[i], ptr + "/" + std::to_string(i), length));
  return out;
}

MonoidPresentation parse_monoid(const json& j, const std::string& ptr, int default_bound) {
  const json& gens = field(j, ptr, "generators");
  if (!gens.is_array()) fail(ptr + "/generators", "expected an array of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) fail(ptr + "/generators/" + std::to_string(i), "expected a string");
    names.push_back(gens[i].get<std::string>());
  }
  std::vector<Relation> rels;
  if (j.contains("relations")) {
    const json& rj = j["relations"];
    const std::string rp = ptr + "/relations";
    if (!rj.is_array()) fail(rp, "expected an array of [lhs, rhs] pairs");
    for (std::size_t i = 0; i < rj.size(); ++i) {
      const std::string p = rp + "/" + std::to_string(i);
      if (!rj[i].is_array() || rj[i].size() != 2) fail(p, "expected a pair [lhs, rhs]");
      rels.push_back({parse_word(rj[i][0], p + "/0", names.size()), parse_word(rj[i][1], p + "/1", names.size())});
    }
  }
  const int bound = j.contains("bound") ? parse_int(j["bound"], ptr + "/bound", 1, 64) : default_bound;
  return MonoidPresentation(names, rels, bound);
}

MonoidHom parse_hom(const json& j, const std::string& ptr, int default_bound) {
  auto Q = parse_monoid(field(j, ptr, "source"), ptr + "/source", default_bound);
  auto P = parse_monoid(field(j, ptr, "target"), ptr + "/target", default_bound);
  const json& im = field(j, ptr, "images");
  auto images = parse_words(im, ptr + "/images", P.rank());
  if (images.size() != Q.rank()) fail(ptr + "/images", "expected one image per source generator");
  try {
    return MonoidHom(Q, P, images);
  } catch (const IllFormedHom& e) {
    fail(ptr + "/images", e.what());
  }
}

SemistableStructure parse_structure(const json& j, const std::string& ptr, const MonoidHom& h) {
  const bool nested = j.is_object() && j.contains("structure");
  const json& s = nested ? j["structure"] : j;
  const std::string sp = nested ? ptr + "/structure" : ptr;
  SemistableStructure out;
  out.sigma = parse_words(field(s, sp, "sigma"), sp + "/sigma", h.target().rank());
  out.q0 = parse_word(field(s, sp, "q0"), sp + "/q0", h.source().rank());
  const std::size_t k = out.sigma.size();
  for (const char* key : {"Delta", "B"}) {
    const json& v = field(s, sp, key);
    if (!v.is_array() || v.size() != k) fail(sp + "/" + key, "expected " + std::to_string(k) + " entries");
    std::vector<int> vals;
    for (std::size_t i = 0; i < k; ++i) vals.push_back(parse_int(v[i], sp + "/" + key + "/" + std::to_string(i), 0, 1 << 20));
    (std::string(key) == "Delta" ? out.delta : out.B) = vals;
  }
  return out;
}

ToyRing parse_ring(const json& j, const std::string& ptr) {
  const json& kind = field(j, ptr, "kind");
  if (!kind.is_string()) fail(ptr + "/kind", "expected a string");
  const auto p = static_cast<std::uint32_t>(parse_int(field(j, ptr, "p"), ptr + "/p", 2, 65521));
  if (!is_prime(p)) fail(ptr + "/p", "not a prime");
  const std::string k = kind.get<std::string>();
  if (k == "prime") return ToyRing::prime(p);
  if (k == "gf") return ToyRing::galois(p, parse_int(field(j, ptr, "k"), ptr + "/k", 1, 20));
  if (k == "dvr") return ToyRing::truncated_dvr(p, parse_int(field(j, ptr, "N"), ptr + "/N", 1, 20));
  fail(ptr + "/kind", "expected one of prime, gf, dvr");
}

RingElt parse_ring_element(const json& j, const std::string& ptr, const ToyRing& r) {
  if (j.is_number_integer() && r.dim() == 1) return r.from_int(j.get<long long>());
  if (!j.is_array() || j.size() != r.dim())
    fail(ptr, "expected a coordinate array with " + std::to_string(r.dim()) + " entries");
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(static_cast<std::uint32_t>(parse_int(j[i], ptr + "/" + std::to_string(i), 0, static_cast<int>(r.p()) - 1)));
  return r.from_coords(c);
}

json word_json(const Word& w) { return json(w); }

json words_json(const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(word_json(w));
  return a;
}

json to_json(const MonoidPresentation& m) {
  json rels = json::array();
  for (const auto& r : m.relations()) rels.push_back({word_json(r.lhs), word_json(r.rhs)});
  return {{"generators", m.generators()}, {"relations", rels}, {"bound", m.bound()}};
}

json to_json(const MonoidHom& h) {
  return {{"source", to_json(h.source())}, {"target", to_json(h.target())}, {"images", words_json(h.images())}};
}

json to_json(const SemistableStructure& s) {
  return {{"sigma", words_json(s.sigma)}, {"q0", word_json(s.q0)}, {"Delta", s.delta}, {"B", s.B}};
}

}  // namespace logmonoid::cli
