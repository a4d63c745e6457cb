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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "logmonoid_cli/commands.hpp"

namespace {

using logmonoid::cli::json;

struct Flags {
  std::optional<int> bound;
  std::uint64_t seed = 0;
  std::string json_path;
  std::string out_path;
  bool no_timing = false;
  std::vector<std::string> files;
};

void add_int(CLI::App* app, json& params, const std::string& flag, const std::string& key, const std::string& help) {
  app->add_option_function<int>(flag, [&params, key](int v) { params[key] = v; }, help);
}

void add_list(CLI::App* app, json& params, const std::string& flag, const std::string& key, const std::string& help) {
  app->add_option_function<std::vector<int>>(flag, [&params, key](const std::vector<int>& v) { params[key] = v; }, help)
      ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"logmonoid: fine monoids, semistable charts, log monoids and truncated model rings"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  json params = json::object();
  app.add_option("--bound", flags.bound, "analysis bound (default: LOGMONOID_BOUND or 8)")->check(CLI::Range(1, 64));
  app.add_option("--seed", flags.seed, "seed for randomized checks and families");
  app.add_option("--json", flags.json_path, "input document (alternative to a positional file)");
  app.add_option("--out", flags.out_path, "write the report here instead of stdout");
  app.add_flag("--no-timing", flags.no_timing, "report runtime_ms as 0 for byte-identical output");

  auto with_files = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("files", flags.files, what);
    return sub;
  };
  with_files(app.add_subcommand("analyze", "sharpness, integrality, irreducibles, cokernel and split test of a hom"),
             "hom document");
  auto* detect = with_files(app.add_subcommand("detect-semistable", "detect semistable structures"), "hom document");
  detect->add_flag_callback("--search-sigma-subsets", [&] { params["search_sigma_subsets"] = true; },
                            "also try every generator subset as sigma (at most six generators)");
  with_files(app.add_subcommand("validate-semistable", "check (S1)-(S4) for a given structure"),
             "hom document with sigma, q0, Delta, B");
  with_files(app.add_subcommand("quotient", "quotient a semistable structure by a submonoid N"),
             "hom document with structure and N");
  auto* po = with_files(app.add_subcommand("pushout", "pushout of two homs with a common source"), "two hom documents");
  add_int(po, params, "--degree", "degree", "class table degree when no presentation is derivable");
  auto* cc = with_files(app.add_subcommand("classify-chart", "case I/II/III classification of a chart"), "hom document");
  add_int(cc, params, "--p", "p", "characteristic of the realization ring");
  add_int(cc, params, "--N", "N", "t-adic precision of the realization ring");
  add_int(cc, params, "--d", "d", "X-degree truncation for regularity checks");
  auto* pd = app.add_subcommand("primary-decomp-check", "primary decomposition identities at truncation");
  for (const char* k : {"l", "n", "a", "p", "N", "d"}) add_int(pd, params, std::string("--") + k, k, "");
  add_list(pd, params, "--B", "B", "comma-separated exponents");
  add_list(pd, params, "--I", "I", "comma-separated exponents, I <= B");
  auto* dc = with_files(app.add_subcommand("descent-check", "descent exactness for a toy ring extension"),
                        "document with ring, optional base, monoid, alpha, map");
  add_int(dc, params, "--degree", "degree", "class degree bound");
  auto* ur = app.add_subcommand("unit-rigidity", "unit rigidity at truncation");
  for (const char* k : {"n", "l", "p", "N", "d"}) add_int(ur, params, std::string("--") + k, k, "");
  auto* fam = app.add_subcommand("family", "generate (and optionally classify) a seeded chart family");
  fam->add_option_function<std::string>("--shape", [&](const std::string& s) { params["shape"] = s; },
                                        "free, u-monoid or semistable");
  for (const char* k : {"l", "r", "a", "count"}) add_int(fam, params, std::string("--") + k, k, "");
  add_int(fam, params, "--max-B", "max_B", "largest B entry");
  fam->add_flag_callback("--classify", [&] { params["classify"] = true; }, "classify every instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : logmonoid::cli::kInputError;
  }

  logmonoid::cli::Request req;
  req.command = app.get_subcommands().front()->get_name();
  req.params = params;
  req.bound = flags.bound;
  req.seed = flags.seed;
  req.timing = !flags.no_timing;
  logmonoid::cli::Outcome out;
  try {
    if (!flags.json_path.empty()) flags.files.insert(flags.files.begin(), flags.json_path);
    for (const auto& f : flags.files) req.inputs.push_back(logmonoid::cli::read_json_file(f));
    out = logmonoid::cli::run(req);
  } catch (const logmonoid::Error& e) {
    out.report = {{"command", req.command}, {"result", "error"}, {"decided", false},
                  {"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    out.exit_code = logmonoid::cli::kInputError;
  }
  const std::string text = out.report.dump(2) + "\n";
  if (flags.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(flags.out_path);
    os << text;
    if (!os) {
      std::cerr << "cannot write " << flags.out_path << "\n";
      return logmonoid::cli::kInputError;
    }
  }
  return out.exit_code;
}
