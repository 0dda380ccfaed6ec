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
//
// Inner generalized derivations x ↦ b1·x − x·b2 over any unital ring, their
// alternating-sign binomial power closed form, and the two power identities
// built from it: a^n recovered through delta powers at the unit, and the
// binomial expansion of (a+b)^n that needs no commutation between a and b.

#ifndef LEIBNIZ_DELTA_HPP
#define LEIBNIZ_DELTA_HPP

#include <cstdint>
#include <vector>

#include "leibniz/ring.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// The inner generalized derivation x ↦ left·x − x·right.
template <UnitalRing R>
struct DeltaOperator {
  typename R::Element left;
  typename R::Element right;
};

template <UnitalRing R>
typename R::Element delta_apply(const R& ring, const DeltaOperator<R>& delta,
                                const typename R::Element& x) {
  return ring.sub(ring.mul(delta.left, x), ring.mul(x, delta.right));
}

/// n-fold application. This is the brute-force route the closed form below
/// is verified against.
template <UnitalRing R>
typename R::Element delta_apply_n(const R& ring, const DeltaOperator<R>& delta,
                                  const typename R::Element& x,
                                  std::uint64_t n) {
  auto acc = x;
  for (std::uint64_t i = 0; i < n; ++i) acc = delta_apply(ring, delta, acc);
  return acc;
}

// Ascending power table x^0 .. x^n.
template <UnitalRing R>
std::vector<typename R::Element> power_table(const R& ring,
                                             const typename R::Element& x,
                                             std::uint64_t n) {
  std::vector<typename R::Element> powers;
  powers.reserve(n + 1);
  powers.push_back(ring.one());
  for (std::uint64_t i = 1; i <= n; ++i)
    powers.push_back(ring.mul(powers.back(), x));
  return powers;
}

/// Closed form of the n-th delta power:
///   delta^n(x) = sum_{k=0}^{n} (-1)^k C(n,k) left^{n-k} · x · right^k.
/// Equals delta_apply_n for every n ≥ 0.
template <UnitalRing R>
typename R::Element delta_power_closed(const R& ring,
                                       const DeltaOperator<R>& delta,
                                       const typename R::Element& x,
                                       std::uint64_t n) {
  const auto left_pow = power_table(ring, delta.left, n);
  const auto right_pow = power_table(ring, delta.right, n);
  auto acc = ring.zero();
  for (std::uint64_t k = 0; k <= n; ++k) {
    Scalar c = binomial(n, k);
    if (k % 2 == 1) c = -c;
    const auto mid = ring.mul(ring.mul(left_pow[n - k], x), right_pow[k]);
    acc = ring.add(acc, ring.scale(c, mid));
  }
  return acc;
}

/// Power recovery: a^n = sum_{k=0}^{n} C(n,k) delta_{a,b}^{n-k}(1) · b^k,
/// for any b. The right-hand side is returned; it must equal a^n.
template <UnitalRing R>
typename R::Element power_via_delta(const R& ring,
                                    const typename R::Element& a,
                                    const typename R::Element& b,
                                    std::uint64_t n) {
  const DeltaOperator<R> delta{a, b};
  const auto b_pow = power_table(ring, b, n);
  auto acc = ring.zero();
  for (std::uint64_t k = 0; k <= n; ++k) {
    const auto head = delta_power_closed(ring, delta, ring.one(), n - k);
    acc = ring.add(acc, ring.scale(binomial(n, k), ring.mul(head, b_pow[k])));
  }
  return acc;
}

/// Binomial expansion valid without commuting a and b:
///   (a+b)^n = sum_{k} sum_{j=0}^{n-k} C(n,k) C(n-k,j) (-1)^j
///             (a+b)^{n-k-j} · c^{j+k}
/// for an arbitrary pivot c. The double sum is returned; it must equal
/// (a+b)^n for every c, with c^0 = 1 even when c = 0.
template <UnitalRing R>
typename R::Element noncomm_binomial(const R& ring,
                                     const typename R::Element& a,
                                     const typename R::Element& b,
                                     const typename R::Element& c,
                                     std::uint64_t n) {
  const auto sum_pow = power_table(ring, ring.add(a, b), n);
  const auto c_pow = power_table(ring, c, n);
  auto acc = ring.zero();
  for (std::uint64_t k = 0; k <= n; ++k) {
    for (std::uint64_t j = 0; j <= n - k; ++j) {
      Scalar coeff = binomial(n, k) * binomial(n - k, j);
      if (j % 2 == 1) coeff = -coeff;
      acc = ring.add(
          acc, ring.scale(coeff, ring.mul(sum_pow[n - k - j], c_pow[j + k])));
    }
  }
  return acc;
}

}  // namespace leibniz

#endif  // LEIBNIZ_DELTA_HPP
