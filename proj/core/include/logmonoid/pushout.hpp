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
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "logmonoid/monoid.hpp"

namespace logmonoid {

/// The monoid P ⊞_Q R: pairs (p, r) modulo (p, r) ~ (p', r') iff there are
/// q, q' in Q with (p + f(q), r + g(q')) = (p' + f(q'), r' + g(q)).
class PushoutMonoid {
 public:
  struct Element {
    Word p;
    Word r;
  };

  PushoutMonoid(MonoidHom f, MonoidHom g, int bound = MonoidPresentation::kDefaultBound);

  const MonoidHom& f() const noexcept { return f_; }
  const MonoidHom& g() const noexcept { return g_; }
  const MonoidPresentation& base() const noexcept { return f_.source(); }
  const MonoidPresentation& left() const noexcept { return f_.target(); }
  const MonoidPresentation& right() const noexcept { return g_.target(); }
  int bound() const noexcept { return bound_; }

  Element alpha(const Word& p) const;
  Element beta(const Word& r) const;
  Element add(const Element& a, const Element& b) const;

  /// Searches q, q' among base classes of degree <= bound. A miss is settled
  /// by the group key when both factors are integral.
  Tri equals(const Element& a, const Element& b) const;
  std::optional<std::pair<Word, Word>> equality_witness(const Element& a, const Element& b) const;

  /// Image in the group pushout P^gr (+) R^gr / {(f(q), -g(q))}.
  IntVector key(const Element& a) const;
  /// Both factors cancellative within the bound; then keys decide equality.
  bool integral() const noexcept { return integral_; }

  /// One representative per class among pairs of total degree <= d.
  std::vector<Element> classes_up_to(int d) const;

  /// Generators P ⊔ R, relations of P and R plus f(q_i) = g(q_i).
  MonoidPresentation amalgamated_presentation() const;
  /// The amalgamated presentation, if it is cancellative within the bound.
  std::optional<MonoidPresentation> presentation() const;
  Word to_amalgamated(const Element& a) const;

 private:
  MonoidHom f_;
  MonoidHom g_;
  int bound_;
  bool integral_ = false;
  std::vector<Word> base_classes_;
  std::shared_ptr<const Lattice> lattice_;

  struct Memo {
    std::mutex mutex;
    std::map<int, std::vector<Element>> classes;
  };
  std::shared_ptr<Memo> memo_;
};

/// The map gamma with gamma o alpha = alpha_p and gamma o beta = beta_p,
/// defined on the amalgamated presentation.
MonoidHom factorize(const PushoutMonoid& po, const MonoidHom& alpha_p, const MonoidHom& beta_p);

struct IsoReport {
  bool verified = false;
  std::size_t classes_checked = 0;
  std::string detail;
};

/// Compares P ⊞_Q S with (P ⊞_Q R) ⊞_R S along phi(p, s) = [[p, 0], s].
IsoReport iterate_iso(const MonoidHom& f, const MonoidHom& g, const MonoidHom& h, int degree,
                      int bound = MonoidPresentation::kDefaultBound);

}  // namespace logmonoid
