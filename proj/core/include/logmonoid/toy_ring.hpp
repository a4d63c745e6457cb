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
#include <memory>
#include <string>
#include <vector>

#include "logmonoid/modp_linalg.hpp"

namespace logmonoid {

/// Index of an element of a ToyRing: its coordinates in base p.
using RingElt = std::uint32_t;

namespace detail {
struct ToyRingData;
}

class RingHom;

/// Finite commutative F_p-algebra given by structure constants on a basis
/// e_0 = 1, e_1, ..., e_{n-1}. Elements are enumerated as integers whose
/// base-p digits are their coordinates.
class ToyRing {
 public:
  enum class Kind { Prime, Galois, TruncatedDVR, Algebra };

  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  static ToyRing prime(std::uint32_t p);
  /// F_{p^k} as F_p[x]/(m) with m the smallest monic irreducible of degree k.
  static ToyRing galois(std::uint32_t p, int k);
  /// F_p[t]/(t^N).
  static ToyRing truncated_dvr(std::uint32_t p, int N);
  /// F_p[x]/(m) for a monic m, coefficients listed from x^0 up (leading 1 omitted).
  static ToyRing polynomial_quotient(std::uint32_t p, std::vector<std::uint32_t> m_low, Kind kind, std::string var);
  /// Tensor product over F_p; basis e_i (x) e_j at index i * dim(b) + j.
  static ToyRing tensor(const ToyRing& a, const ToyRing& b);
  /// Quotient by the ideal generated by `gens`; basis is the non-pivot coordinates.
  ToyRing quotient(const std::vector<RingElt>& gens) const;
  /// For a ring built by quotient(): the canonical surjection from its parent.
  RingHom quotient_map() const;

  Kind kind() const noexcept;
  std::uint32_t p() const noexcept;
  int k() const noexcept;  // Galois degree or DVR precision, 1 otherwise
  std::size_t dim() const noexcept;
  std::uint64_t size() const noexcept;
  std::string describe() const;

  RingElt zero() const noexcept { return 0; }
  RingElt one() const noexcept { return 1; }
  RingElt from_int(std::int64_t c) const;
  /// Basis element e_i; for polynomial kinds this is x^i.
  RingElt basis(std::size_t i) const;
  /// The generator x (or t) of a polynomial kind.
  RingElt generator() const;

  std::vector<std::uint32_t> coords(RingElt a) const;
  RingElt from_coords(const std::vector<std::uint32_t>& c) const;

  RingElt add(RingElt a, RingElt b) const;
  RingElt sub(RingElt a, RingElt b) const;
  RingElt neg(RingElt a) const;
  RingElt mul(RingElt a, RingElt b) const;
  RingElt pow(RingElt a, std::uint64_t e) const;
  RingElt scale(RingElt a, std::uint32_t c) const;

  bool is_unit(RingElt a) const;
  bool is_field() const;
  /// Units in increasing index order (computed once).
  const std::vector<RingElt>& units() const;
  RingElt inverse(RingElt u) const;

  std::string format(RingElt a) const;
  bool same_as(const ToyRing& other) const noexcept { return d_ == other.d_; }
  const PrimeField& field() const noexcept;

 private:
  explicit ToyRing(std::shared_ptr<detail::ToyRingData> d) : d_(std::move(d)) {}
  std::shared_ptr<detail::ToyRingData> d_;
};

/// Unital ring homomorphism, stored as the F_p-linear images of basis vectors.
class RingHom {
 public:
  /// Throws NotRingHom unless the map is unital and multiplicative on basis pairs.
  RingHom(ToyRing source, ToyRing target, std::vector<RingElt> basis_images);

  static RingHom identity(const ToyRing& r);
  /// The unique map from F_p (the source must have dimension 1).
  static RingHom structure_map(const ToyRing& prime, const ToyRing& target);
  /// For polynomial kinds: x maps to `image`.
  static RingHom from_generator(const ToyRing& source, const ToyRing& target, RingElt image);

  const ToyRing& source() const noexcept { return source_; }
  const ToyRing& target() const noexcept { return target_; }
  const std::vector<RingElt>& basis_images() const noexcept { return images_; }

  RingElt operator()(RingElt a) const;
  RingHom compose_after(const RingHom& inner) const;  // this ∘ inner
  bool injective() const;
  bool is_identity() const;
  /// f^{-1}(B^x) = A^x.
  bool quasi_local() const;

 private:
  ToyRing source_;
  ToyRing target_;
  std::vector<RingElt> images_;
};

/// B (x)_A B with its two coprojections p(b) = b (x) 1 and q(b) = 1 (x) b.
struct TensorSquare {
  ToyRing ring;
  RingHom p;
  RingHom q;
};

TensorSquare tensor_square(const RingHom& f);

/// True when f makes B a free module of positive rank over the local ring A.
bool faithfully_flat(const RingHom& f);

}  // namespace logmonoid
