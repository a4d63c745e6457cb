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

#include <stdexcept>
#include <string>
#include <string_view>

namespace logmonoid {

/// Result of a semi-decision procedure. `Undecided` is only produced when a
/// search bound was exhausted; callers must never coerce it to true/false.
enum class Tri { False, True, Undecided };

constexpr Tri to_tri(bool b) noexcept { return b ? Tri::True : Tri::False; }

constexpr std::string_view to_string(Tri t) noexcept {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Undecided: return "undecided";
  }
  return "undecided";
}

/// Tri-valued conjunction: false dominates, then undecided.
constexpr Tri tri_and(Tri a, Tri b) noexcept {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Undecided || b == Tri::Undecided) return Tri::Undecided;
  return Tri::True;
}

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LOGMONOID_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                          \
   public:                                                             \
    explicit Name(const std::string& what) : Error(#Name, what) {}     \
  };

LOGMONOID_DEFINE_ERROR(UndecidedAtBound)
LOGMONOID_DEFINE_ERROR(ParentMismatch)
LOGMONOID_DEFINE_ERROR(NotSharp)
LOGMONOID_DEFINE_ERROR(IllFormedHom)
LOGMONOID_DEFINE_ERROR(IllFormedStructure)
LOGMONOID_DEFINE_ERROR(NoSemistableStructure)
LOGMONOID_DEFINE_ERROR(SplitHom)
LOGMONOID_DEFINE_ERROR(HypothesisFailure)
LOGMONOID_DEFINE_ERROR(IsoCheckFailed)
LOGMONOID_DEFINE_ERROR(NotMultiplicative)
LOGMONOID_DEFINE_ERROR(NotRingHom)
LOGMONOID_DEFINE_ERROR(NotOverF)
LOGMONOID_DEFINE_ERROR(NotFaithfullyFlat)
LOGMONOID_DEFINE_ERROR(TruncationOverflow)
LOGMONOID_DEFINE_ERROR(CheckFailed)
LOGMONOID_DEFINE_ERROR(CounterexampleFound)
LOGMONOID_DEFINE_ERROR(RegularityFailure)
LOGMONOID_DEFINE_ERROR(NotClassifiable)
LOGMONOID_DEFINE_ERROR(CaseII)
LOGMONOID_DEFINE_ERROR(ParamsOutOfRange)
LOGMONOID_DEFINE_ERROR(SchemaError)
LOGMONOID_DEFINE_ERROR(InvalidArgument)

#undef LOGMONOID_DEFINE_ERROR

}  // namespace logmonoid
