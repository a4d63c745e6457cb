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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "logmonoid/modp_linalg.hpp"
#include "logmonoid/word.hpp"

namespace logmonoid {

/// Exponent key of a term t^e X^I, stored as (e, I_1, ..., I_n).
using Mono = std::vector<int>;
/// Polynomial in t and X with coefficients in Z/p, zero terms omitted.
using Poly = std::map<Mono, std::uint32_t>;

struct Grading {
  int t = 1;
  std::vector<int> x;
};

namespace detail {
struct SeriesRingData;
}

class SeriesElement;

/// R = A[X_1..X_n]/(X^T - G) over A = F_p[t]/(t^N), truncated at X-degree d.
///
/// Rewriting X^(T+I) -> G X^I must terminate: every term of G either carries
/// a positive power of t, or has fewer than |T| exponents on Supp(T).
class SeriesRing {
 public:
  struct Relation {
    Word T;
    Poly G;
  };

  SeriesRing(std::uint32_t p, int N, std::vector<std::string> vars, std::optional<Relation> relation, int d,
             std::optional<Grading> grading = std::nullopt);

  /// A[X_1..X_l, Y_1..Y_n]/(X_1...X_l - t^a Y^B).
  static SeriesRing semistable_model(std::uint32_t p, int N, int l, const std::vector<int>& B, int a, int d);
  /// A[X_1..X_n]/(X_1...X_n - t).
  static SeriesRing unit_rigidity_model(int n, std::uint32_t p, int N, int d);

  std::uint32_t p() const noexcept;
  int precision() const noexcept;  // N
  int truncation() const noexcept;  // d
  std::size_t n_vars() const noexcept;
  const std::vector<std::string>& vars() const noexcept;
  const std::optional<Relation>& relation() const noexcept;
  const std::optional<Grading>& grading() const noexcept;
  const PrimeField& field() const noexcept;

  /// True if I lies in the normal-form support {I : T not <= I}.
  bool in_sigma(const Mono& m) const noexcept;
  /// The monomials t^e X^I with e < N, |I| <= d, I in the normal-form support.
  std::vector<Mono> sigma_basis(int d) const;

  /// Rewrites to the normal-form support, dropping t-powers >= t_precision
  /// (pass 0 for exact arithmetic over F_p[t]). No X-degree truncation.
  Poly reduce(const Poly& f, int t_precision) const;
  Poly multiply(const Poly& a, const Poly& b, int t_precision) const;

  int weight(const Mono& m) const;
  /// Weight of a homogeneous polynomial; nullopt if f is zero or not homogeneous.
  std::optional<int> homogeneous_weight(const Poly& f) const;
  /// Largest weight of a term with X-degree <= d and t-power < N.
  int window(int d) const;
  /// Normal-form monomials of weight <= max_weight with t-power < t_precision (0: unbounded).
  std::vector<Mono> window_basis(int max_weight, int t_precision) const;

  SeriesElement zero() const;
  SeriesElement one() const;
  SeriesElement var(std::size_t i) const;
  SeriesElement t_power(int e) const;
  SeriesElement monomial(const Mono& m, std::uint32_t c = 1) const;
  SeriesElement element(const Poly& f) const;

  std::string format(const Poly& f) const;
  bool same_as(const SeriesRing& o) const noexcept { return d_ == o.d_; }

 private:
  std::shared_ptr<const detail::SeriesRingData> d_;
};

/// An element of the truncated ring, always in normal form.
class SeriesElement {
 public:
  SeriesElement(SeriesRing ring, Poly terms, bool overflow = false);

  const SeriesRing& ring() const noexcept { return ring_; }
  const Poly& terms() const noexcept { return terms_; }
  /// Set when a product produced normal-form terms above the X-degree bound.
  bool overflow() const noexcept { return overflow_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::string to_string() const { return ring_.format(terms_); }

  friend bool operator==(const SeriesElement& a, const SeriesElement& b) { return a.terms_ == b.terms_; }

 private:
  SeriesRing ring_;
  Poly terms_;
  bool overflow_ = false;
};

SeriesElement nf_series(const SeriesRing& R, const Poly& f);
SeriesElement add(const SeriesElement& a, const SeriesElement& b);
SeriesElement sub(const SeriesElement& a, const SeriesElement& b);
SeriesElement mul(const SeriesElement& a, const SeriesElement& b);
SeriesElement scale(const SeriesElement& a, std::uint32_t c);

/// Ideal operations work in the exact graded ring up to weight window(d).
/// Generators must be homogeneous.
bool ideal_equal(const SeriesRing& R, const std::vector<SeriesElement>& a, const std::vector<SeriesElement>& b, int d);
bool ideal_contains(const SeriesRing& R, const std::vector<SeriesElement>& gens, const SeriesElement& f, int d);
std::vector<Poly> ideal_intersect(const SeriesRing& R, const std::vector<std::vector<SeriesElement>>& ideals, int d);

struct RegularityReport {
  bool regular = false;                  // no kernel over F_p[t]
  std::size_t domain_dim = 0;
  std::size_t structural_kernel_dim = 0;  // kernel of f in the exact ring
  std::size_t truncation_kernel_dim = 0;  // extra kernel caused by t^N = 0
};

/// Multiplication by f on normal-form monomials with t-power < N and X-degree <= d.
RegularityReport regularity_report(const SeriesRing& R, const SeriesElement& f, int d);
bool is_regular(const SeriesRing& R, const SeriesElement& f, int d);

struct PrimaryDecompConfig {
  int l = 2;
  int n = 1;
  int a = 1;
  std::vector<int> B{1};
  std::vector<int> I{1};
  std::uint32_t p = 2;
  int N = 4;
  int d = 5;
  std::uint64_t seed = 1;
};

struct IdentityCheck {
  std::string name;
  std::string statement;
  bool passed = false;
};

struct PrimaryDecompReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

PrimaryDecompReport primary_decomp_report(const PrimaryDecompConfig& c);
/// Throws CheckFailed naming the first identity that fails.
PrimaryDecompReport primary_decomp_check(const PrimaryDecompConfig& c);

struct UnitRigidityReport {
  bool only_trivial = false;
  std::size_t j_dim = 0;               // dim of J in X-degree <= d
  std::size_t solution_dim = 0;        // tuples (a_1..a_l) solving the constraints
  bool square_zero = false;            // J^2 = 0 verified
  bool annihilator_claim = false;      // X^T f = 0 forces Supp(f) in Sigma_T
  std::vector<Poly> counterexample;    // one nonzero tuple, if any
};

UnitRigidityReport unit_rigidity_report(const SeriesRing& R, const std::vector<SeriesElement>& J,
                                        const std::vector<Word>& supports, int d);
/// Throws CounterexampleFound when a nonzero tuple exists.
UnitRigidityReport unit_rigidity_check(const SeriesRing& R, const std::vector<SeriesElement>& J,
                                       const std::vector<Word>& supports, int d);

struct UnitProductReport {
  bool regular = false;          // t^a y^B regular
  bool constraint_holds = false;  // (u_1...u_l - v^B) t^a y^B = 0
  bool identity_holds = false;    // u_1...u_l = v^B
};

/// R must be a semistable model; the monomial t^a y^B is read off its relation.
UnitProductReport unit_product_identity(const SeriesRing& R, const std::vector<SeriesElement>& u,
                                        const std::vector<SeriesElement>& v, const std::vector<int>& B, int d);

}  // namespace logmonoid
