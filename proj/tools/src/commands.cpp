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

#include "logmonoid_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <thread>

#include "logmonoid/chart.hpp"
#include "logmonoid/error.hpp"
#include "logmonoid/family.hpp"
#include "logmonoid/log_monoid.hpp"
#include "logmonoid/pushout.hpp"
#include "logmonoid/semistable.hpp"
#include "logmonoid/series_ring.hpp"

namespace logmonoid::cli {

namespace {

struct Context {
  const Request& req;
  int bound;
};

struct Result {
  Tri result = Tri::Undecided;
  json body = json::object();
};

using Handler = std::function<Result(const Context&)>;

const json& input(const Context& c, std::size_t i) {
  if (c.req.inputs.size() <= i)
    throw SchemaError("command '" + c.req.command + "' needs " + std::to_string(i + 1) + " input document(s)");
  return c.req.inputs[i];
}

std::string doc_ptr(std::size_t i) { return "/inputs/" + std::to_string(i); }

int param_int(const Context& c, const char* key, int fallback) {
  const json& p = c.req.params;
  if (!p.contains(key) || p[key].is_null()) return fallback;
  if (!p[key].is_number_integer()) throw SchemaError(std::string("/params/") + key + ": expected an integer");
  return p[key].get<int>();
}

std::vector<int> param_ints(const Context& c, const char* key, std::vector<int> fallback) {
  const json& p = c.req.params;
  if (!p.contains(key) || p[key].is_null()) return fallback;
  if (!p[key].is_array()) throw SchemaError(std::string("/params/") + key + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : p[key]) {
    if (!v.is_number_integer()) throw SchemaError(std::string("/params/") + key + ": expected integers");
    out.push_back(v.get<int>());
  }
  return out;
}

bool param_bool(const Context& c, const char* key) {
  const json& p = c.req.params;
  return p.contains(key) && p[key].is_boolean() && p[key].get<bool>();
}

json formatted(const MonoidPresentation& m, const std::vector<Word>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(m.format(w));
  return a;
}

Result cmd_analyze(const Context& c) {
  const MonoidHom h = parse_hom(input(c, 0), doc_ptr(0), MonoidPresentation::kDefaultBound);
  const auto& P = h.target();
  Result r;
  const auto integral = is_integral_hom(h, c.bound);
  r.result = integral.result;
  r.body["integral"] = to_string(integral.result);
  if (integral.witness) r.body["witnesses"] = json::array({{{"kind", "integrality"}, {"words", words_json(*integral.witness)}}});
  r.body["source_sharp"] = to_string(is_sharp(h.source()));
  r.body["target_sharp"] = to_string(is_sharp(P));
  r.body["target_cancellative"] = to_string(is_cancellative(P, c.bound));
  r.body["groupification"] = to_string(groupification(P));
  r.body["cokernel"] = to_string(cokernel(h));
  r.body["cokernel_torsion_free"] = coker_torsion_free(h);
  try {
    r.body["irreducibles"] = formatted(P, irreducibles(P));
  } catch (const Error& e) {
    r.body["irreducibles"] = e.what();
  }
  const auto sr = splits(h, DetectOptions{c.bound, false});
  r.body["splits"] = to_string(sr.result);
  r.body["sigma_candidates"] = formatted(P, sr.complement_generators);
  json ss = json::array();
  for (const auto& s : sr.structures) ss.push_back(to_string(h, s));
  r.body["semistable_structures"] = ss;
  return r;
}

Result cmd_detect(const Context& c) {
  const MonoidHom h = parse_hom(input(c, 0), doc_ptr(0), MonoidPresentation::kDefaultBound);
  DetectOptions opts{c.bound, param_bool(c, "search_sigma_subsets")};
  const auto all = detect_all_semistable(h, opts);
  Result r;
  r.result = to_tri(!all.empty());
  json list = json::array(), text = json::array();
  for (const auto& s : all) {
    list.push_back(to_json(s));
    text.push_back(to_string(h, s));
  }
  r.body["structures"] = list;
  r.body["formatted"] = text;
  if (!all.empty()) r.body["structure"] = list.front();
  return r;
}

Result cmd_validate(const Context& c) {
  const json& doc = input(c, 0);
  const MonoidHom h = parse_hom(doc, doc_ptr(0), MonoidPresentation::kDefaultBound);
  const auto s = parse_structure(doc, doc_ptr(0), h);
  const auto v = validate_semistable_report(h, s, c.bound);
  Result r;
  r.result = v.result;
  r.body["failed_condition"] = v.failed_condition;
  r.body["detail"] = v.detail;
  r.body["formatted"] = to_string(h, s);
  return r;
}

Result cmd_quotient(const Context& c) {
  const json& doc = input(c, 0);
  const MonoidHom h = parse_hom(doc, doc_ptr(0), MonoidPresentation::kDefaultBound);
  const auto s = parse_structure(doc, doc_ptr(0), h);
  if (!doc.contains("N")) throw SchemaError(doc_ptr(0) + "/N: missing field");
  const auto n = parse_words(doc["N"], doc_ptr(0) + "/N", h.target().rank());
  const auto q = quotient_semistable(h, s, n, c.bound);
  Result r;
  r.result = Tri::True;
  r.body["quotient"] = to_json(q.quotient);
  r.body["f_bar"] = to_json(q.f_bar);
  r.body["structure"] = to_json(q.structure);
  r.body["formatted"] = to_string(q.f_bar, q.structure);
  r.body["marking_unchanged"] = q.structure.q0 == s.q0;
  return r;
}

Result cmd_pushout(const Context& c) {
  const MonoidHom f = parse_hom(input(c, 0), doc_ptr(0), MonoidPresentation::kDefaultBound);
  const MonoidHom g = parse_hom(input(c, 1), doc_ptr(1), MonoidPresentation::kDefaultBound);
  const PushoutMonoid po(f, g, std::max(c.bound, 2));
  Result r;
  r.body["integral"] = po.integral();
  if (auto pres = po.presentation()) {
    r.result = Tri::True;
    r.body["presentation"] = to_json(*pres);
    return r;
  }
  const int degree = param_int(c, "degree", 4);
  const auto amalg = po.amalgamated_presentation();
  json classes = json::array();
  for (const auto& e : po.classes_up_to(degree)) classes.push_back(amalg.format(po.to_amalgamated(e)));
  r.result = Tri::Undecided;
  r.body["class_table_degree"] = degree;
  r.body["classes"] = classes;
  return r;
}

Result cmd_classify(const Context& c) {
  const MonoidHom h = parse_hom(input(c, 0), doc_ptr(0), MonoidPresentation::kDefaultBound);
  const auto& P = h.target();
  Result r;
  const auto cls = classify_chart(h, c.bound);
  r.result = Tri::True;
  r.body["case"] = to_string(cls.chart_case);
  if (cls.complement) {
    r.body["N"] = to_json(*cls.complement);
    r.body["N_generators"] = formatted(P, cls.complement_generators);
  }
  if (cls.structure) {
    r.body["structure"] = to_json(*cls.structure);
    r.body["formatted"] = to_string(h, *cls.structure);
  }
  if (cls.chart_case == ChartCase::II) {
    r.body["boundary"] = nullptr;
    r.body["u_rank"] = cls.u_rank;
  } else {
    r.body["boundary"] = formatted(P, boundary_monomial(cls));
  }
  const auto mark = marking_value(cls);
  r.body["marking"] = mark ? json(h.source().format(*mark)) : json(nullptr);
  r.body["log_trivial"] = is_log_trivial(h, c.bound);
  r.body["regular_elements"] = formatted(P, cls.regular_elements);
  const int p = param_int(c, "p", cls.chart_case == ChartCase::II ? 3 : 2);
  const int N = param_int(c, "N", 4), d = param_int(c, "d", 3);
  const auto real = realize_chart(h, cls, static_cast<std::uint32_t>(p), N, d);
  r.body["regular_flags"] = check_regular_elements(real, d);
  r.body["realization"] = {{"p", p}, {"N", N}, {"d", d}};
  return r;
}

Result cmd_primary(const Context& c) {
  PrimaryDecompConfig cfg;
  cfg.l = param_int(c, "l", 2);
  cfg.n = param_int(c, "n", 1);
  cfg.a = param_int(c, "a", 1);
  cfg.B = param_ints(c, "B", std::vector<int>(static_cast<std::size_t>(std::max(cfg.n, 0)), 1));
  cfg.I = param_ints(c, "I", cfg.B);
  cfg.p = static_cast<std::uint32_t>(param_int(c, "p", 2));
  cfg.N = param_int(c, "N", 4);
  cfg.d = param_int(c, "d", 5);
  cfg.seed = c.req.seed;
  const auto rep = primary_decomp_report(cfg);
  Result r;
  r.result = to_tri(rep.all_passed());
  json checks = json::array();
  for (const auto& chk : rep.checks)
    checks.push_back({{"identity", chk.name}, {"statement", chk.statement}, {"passed", chk.passed}});
  r.body["checks"] = checks;
  r.body["note"] = "identities are checked at truncation; a pass cannot certify the untruncated statement";
  return r;
}

Result cmd_descent(const Context& c) {
  const json& doc = input(c, 0);
  const std::string ptr = doc_ptr(0);
  if (!doc.is_object() || !doc.contains("ring")) throw SchemaError(ptr + "/ring: missing field");
  const ToyRing B = parse_ring(doc["ring"], ptr + "/ring");
  const ToyRing A = doc.contains("base") ? parse_ring(doc["base"], ptr + "/base") : ToyRing::prime(B.p());
  const MonoidPresentation M =
      doc.contains("monoid") ? parse_monoid(doc["monoid"], ptr + "/monoid", MonoidPresentation::kDefaultBound)
                             : MonoidPresentation::free({"m"});
  std::vector<RingElt> alpha(M.rank(), A.zero());
  if (doc.contains("alpha")) {
    const json& a = doc["alpha"];
    if (!a.is_array() || a.size() != M.rank()) throw SchemaError(ptr + "/alpha: expected one ring element per generator");
    for (std::size_t i = 0; i < a.size(); ++i) alpha[i] = parse_ring_element(a[i], ptr + "/alpha/" + std::to_string(i), A);
  }
  std::optional<RingHom> f;
  if (A.dim() == 1)
    f = RingHom::structure_map(A, B);
  else if (doc.contains("map"))
    f = RingHom::from_generator(A, B, parse_ring_element(doc["map"], ptr + "/map", B));
  else
    throw SchemaError(ptr + "/map: required when the base is not a prime field");
  const int degree = param_int(c, "degree", 4);
  const auto rep = descent_check(LogMonoid(M, A, alpha), *f, degree);
  Result r;
  r.result = rep.result;
  r.body["base"] = A.describe();
  r.body["ring"] = B.describe();
  r.body["tensor_square"] = rep.tensor_description;
  r.body["injective"] = rep.injective;
  r.body["equalizer"] = rep.equalizer;
  r.body["classes_M"] = rep.classes_M;
  r.body["classes_M_base_changed"] = rep.classes_MB;
  r.body["equalizer_size"] = rep.equalizer_size;
  r.body["degree"] = degree;
  if (!rep.detail.empty()) r.body["detail"] = rep.detail;
  return r;
}

Result cmd_unit_rigidity(const Context& c) {
  const int n = param_int(c, "n", 2), l = param_int(c, "l", n);
  if (n < 1 || l < 1 || l > n) throw ParamsOutOfRange("need 1 <= l <= n");
  const int p = param_int(c, "p", 2), N = param_int(c, "N", 2), d = param_int(c, "d", 4);
  const auto R = SeriesRing::unit_rigidity_model(n, static_cast<std::uint32_t>(p), N, d);
  std::vector<Word> supports;
  for (int i = 0; i < l; ++i) supports.push_back(unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  const auto rep = unit_rigidity_report(R, {R.t_power(1)}, supports, d);
  Result r;
  r.result = to_tri(rep.only_trivial && rep.square_zero);
  r.body["ring"] = "F_" + std::to_string(p) + "[t]/(t^" + std::to_string(N) + ")[X1..X" + std::to_string(n) +
                   "]/(X1*...*X" + std::to_string(n) + " - t), X-degree <= " + std::to_string(d);
  r.body["J"] = "(t)";
  r.body["j_dim"] = rep.j_dim;
  r.body["square_zero"] = rep.square_zero;
  r.body["solution_dim"] = rep.solution_dim;
  r.body["only_trivial"] = rep.only_trivial;
  r.body["annihilator_claim"] = rep.annihilator_claim;
  if (!rep.counterexample.empty()) {
    json ce = json::array();
    for (const auto& f : rep.counterexample) ce.push_back(R.format(f));
    r.body["counterexample"] = ce;
  }
  return r;
}

Result cmd_family(const Context& c) {
  const auto shape = parse_family_shape(c.req.params.value("shape", std::string("semistable")));
  FamilyParams fp;
  fp.l = param_int(c, "l", fp.l);
  fp.r = param_int(c, "r", fp.r);
  fp.a = param_int(c, "a", fp.a);
  fp.max_B = param_int(c, "max_B", fp.max_B);
  fp.count = static_cast<std::size_t>(std::max(0, param_int(c, "count", 1)));
  const auto instances = generate_family(shape, fp, c.req.seed);
  const bool classify = param_bool(c, "classify");
  std::vector<json> rows(instances.size());
  auto work = [&](std::size_t i) {
    const auto& inst = instances[i];
    json row = {{"index", i}, {"description", inst.description}, {"hom", to_json(inst.hom)},
                {"expected_case", to_string(inst.expected_case)}};
    if (inst.structure) row["structure"] = to_json(*inst.structure);
    if (classify) {
      try {
        const auto cls = classify_chart(inst.hom, c.bound);
        row["case"] = to_string(cls.chart_case);
        row["match"] = cls.chart_case == inst.expected_case &&
                       (!inst.structure || (cls.structure && same_structure_up_to_order(inst.hom.target(),
                                                                                         *cls.structure, *inst.structure)));
      } catch (const Error& e) {
        row["case"] = nullptr;
        row["error"] = e.what();
        row["match"] = false;
      }
    }
    rows[i] = std::move(row);
  };
  // instances are independent; rows are written by index so output order is fixed
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < instances.size(); i += workers) work(i);
    }));
  for (auto& f : pool) f.get();
  Result r;
  r.result = Tri::True;
  for (const auto& row : rows)
    if (classify && !row["match"].get<bool>()) r.result = Tri::False;
  r.body["shape"] = to_string(shape);
  r.body["instances"] = rows;
  return r;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"analyze", cmd_analyze},
      {"detect-semistable", cmd_detect},
      {"validate-semistable", cmd_validate},
      {"quotient", cmd_quotient},
      {"pushout", cmd_pushout},
      {"classify-chart", cmd_classify},
      {"primary-decomp-check", cmd_primary},
      {"descent-check", cmd_descent},
      {"unit-rigidity", cmd_unit_rigidity},
      {"family", cmd_family},
  };
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

int effective_bound(const std::optional<int>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("LOGMONOID_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 64) return static_cast<int>(v);
  }
  return 8;
}

std::string inputs_digest(const std::string& command, const json& inputs, const json& params, std::uint64_t seed,
                          int bound) {
  const json key = {{"command", command}, {"inputs", inputs}, {"params", params}, {"seed", seed}, {"bound", bound}};
  return sha256_hex(key.dump());
}

Outcome run(const Request& request) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  const int bound = effective_bound(request.bound);
  json& rep = out.report;
  rep["command"] = request.command;
  rep["inputs"] = request.inputs;
  rep["params"] = request.params;
  rep["seed"] = request.seed;
  rep["inputs_digest"] = inputs_digest(request.command, request.inputs, request.params, request.seed, bound);
  rep["bound_used"] = bound;
  Tri result = Tri::Undecided;
  try {
    auto it = handlers().find(request.command);
    if (it == handlers().end()) throw SchemaError("/command: unknown command '" + request.command + "'");
    Result r = it->second(Context{request, bound});
    result = r.result;
    for (auto& [k, v] : r.body.items()) rep[k] = v;
    out.exit_code = result == Tri::True ? kTrue : result == Tri::False ? kFalse : kUndecided;
  } catch (const SchemaError& e) {
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const ParamsOutOfRange& e) {
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const InvalidArgument& e) {
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    out.exit_code = kInputError;
  } catch (const UndecidedAtBound& e) {
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    result = Tri::Undecided;
    out.exit_code = kUndecided;
  } catch (const Error& e) {
    rep["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    result = Tri::False;
    out.exit_code = kFalse;
  } catch (const std::exception& e) {
    rep["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
    out.exit_code = kInputError;
  }
  if (!rep.contains("witnesses")) rep["witnesses"] = json::array();
  rep["result"] = out.exit_code == kInputError ? "error" : std::string(to_string(result));
  rep["decided"] = out.exit_code == kTrue || out.exit_code == kFalse;
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  rep["runtime_ms"] = request.timing ? ms : 0.0;
  return out;
}

}  // namespace logmonoid::cli
