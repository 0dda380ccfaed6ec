// Copyright 2026 The Leibniz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEIBNIZ_RING_HPP
#define LEIBNIZ_RING_HPP

#include <concepts>
#include <cstdint>

#include "leibniz/op_algebra.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// An associative unital ring with exact arithmetic, decidable equality and
/// rational scalar action. One abstraction serves both the symbolic pair
/// algebra and the concrete matrix / truncated-polynomial models, so the
/// delta-power machinery is written once and checked in both worlds.
template <typename R>
concept UnitalRing = requires(const R& r, const typename R::Element& x,
                              const typename R::Element& y, const Scalar& c) {
  { r.add(x, y) } -> std::convertible_to<typename R::Element>;
  { r.sub(x, y) } -> std::convertible_to<typename R::Element>;
  { r.mul(x, y) } -> std::convertible_to<typename R::Element>;
  { r.scale(c, x) } -> std::convertible_to<typename R::Element>;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.equal(x, y) } -> std::convertible_to<bool>;
};

/// x^n with x^0 = 1, including 0^0 = 1.
template <UnitalRing R>
typename R::Element ring_pow(const R& ring, const typename R::Element& x,
                             std::uint64_t n) {
  auto acc = ring.one();
  for (std::uint64_t i = 0; i < n; ++i) acc = ring.mul(acc, x);
  return acc;
}

/// The pair algebra viewed as a unital ring (multiplication = slot-wise
/// composition product, unit = I(a)*I(b)).
class PairPolyRing {
 public:
  using Element = PairPoly;

  Element add(const Element& x, const Element& y) const {
    return pair_add(x, y);
  }
  Element sub(const Element& x, const Element& y) const {
    return pair_sub(x, y);
  }
  Element mul(const Element& x, const Element& y) const {
    return pair_otimes(x, y);
  }
  Element scale(const Scalar& c, const Element& x) const {
    return scalar_mul(c, x);
  }
  Element zero() const { return PairPoly::zero(); }
  Element one() const { return otimes_identity(); }
  bool equal(const Element& x, const Element& y) const { return x == y; }
};

static_assert(UnitalRing<PairPolyRing>);

}  // namespace leibniz

#endif  // LEIBNIZ_RING_HPP
