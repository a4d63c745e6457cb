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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logmonoid_cli/json_io.hpp"

namespace logmonoid::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kTrue = 0, kFalse = 1, kUndecided = 2, kInputError = 3 };

struct Request {
  std::string command;
  std::vector<json> inputs;
  /// Command-specific options, part of the reproducibility key.
  json params = json::object();
  std::optional<int> bound;
  std::uint64_t seed = 0;
  bool timing = true;
};

struct Outcome {
  json report;
  int exit_code = kInputError;
};

const std::vector<std::string>& command_names();

/// --bound, else LOGMONOID_BOUND, else 8.
int effective_bound(const std::optional<int>& flag);

std::string sha256_hex(const std::string& data);

/// Digest of the canonical serialization of (command, inputs, params, seed, bound).
std::string inputs_digest(const std::string& command, const json& inputs, const json& params, std::uint64_t seed,
                          int bound);

/// Runs one request; never throws. The report always carries
/// {command, inputs_digest, result, decided, bound_used, runtime_ms}.
Outcome run(const Request& request);

}  // namespace logmonoid::cli
