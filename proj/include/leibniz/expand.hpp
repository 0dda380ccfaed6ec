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
// Closed-form n-th powers of two-summand derivations
//
//   f(ab) = g1(a)h1(b) + g2(a)h2(b)
//
// in the formal pair algebra, plus the naive iterated expansion that serves
// as the symbolic ground truth they are all checked against.

#ifndef LEIBNIZ_EXPAND_HPP
#define LEIBNIZ_EXPAND_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/op_algebra.hpp"

namespace leibniz {

/// A named map f with its two summands: f(ab) = g1(a)h1(b) + g2(a)h2(b),
/// together with whatever commutation hypotheses have been declared for the
/// participating symbols. Slots may repeat symbols and may be I.
struct DerivationSpec {
  std::string f_name;
  OpSymbol g1;
  OpSymbol h1;
  OpSymbol g2;
  OpSymbol h2;
  CommutationHypotheses hyp;

  /// The degree-1 expansion g1(a)h1(b) + g2(a)h2(b) as a pair polynomial.
  PairPoly defining_poly() const;
};

struct ExpandResult {
  PairPoly collected;
  std::uint64_t raw_term_count = 0;  // exactly 2^n before collection
};

/// Fully distributed expansion of f^n(ab): the n-fold product of the
/// defining polynomial with itself, no reordering. Collected canonical form
/// plus the raw (pre-collection) term count.
ExpandResult iterate_expand(const DerivationSpec& spec, std::uint64_t n);

/// The uncollected expansion: exactly 2^n unit-coefficient terms, in
/// distribution order (the symbol at position k of every word comes from the
/// k-th factor). Guarded against runaway n; intended for tests and counting.
std::vector<PairTerm> iterate_expand_raw(const DerivationSpec& spec,
                                         std::uint64_t n);

/// Binomial closed form under commutation hypotheses:
///   f^n(ab) = sum_k C(n,k) g1^{n-k}g2^k(a) · h1^{n-k}h2^k(b)
/// with words emitted in name-sorted canonical form. Requires (g1,g2) and
/// (h1,h2) declared commuting in spec.hyp; throws MissingHypothesis.
PairPoly leibniz_commutative(const DerivationSpec& spec, std::uint64_t n);

/// Two-parameter twisted Leibniz rule: d(ab) = d(a)σ(b) + τ(a)d(b) with
/// [τ,d] = [σ,d] = 0 declared, giving
///   d^n(ab) = sum_k C(n,k) d^{n-k}τ^k(a) · d^kσ^{n-k}(b).
PairPoly sigma_tau_leibniz(const OpSymbol& d, const OpSymbol& sigma,
                           const OpSymbol& tau, std::uint64_t n,
                           const CommutationHypotheses& declared);

/// Generalized twisted rule: D(ab) = D(a)σ(b) + τ(a)d(b) with [D,τ] and
/// [σ,d] declared commuting.
PairPoly generalized_sigma_tau_leibniz(const OpSymbol& Delta,
                                       const OpSymbol& d,
                                       const OpSymbol& sigma,
                                       const OpSymbol& tau, std::uint64_t n,
                                       const CommutationHypotheses& declared);

/// Ternary rule: d1(ab) = d2(a)b + a·d3(b). No hypotheses needed — every
/// required pair involves I.
PairPoly ternary_leibniz(const OpSymbol& d1, const OpSymbol& d2,
                         const OpSymbol& d3, std::uint64_t n);

/// The induced specs behind the wrappers above (exposed for tests and the
/// consistency suite).
DerivationSpec sigma_tau_spec(const OpSymbol& d, const OpSymbol& sigma,
                              const OpSymbol& tau,
                              const CommutationHypotheses& declared);
DerivationSpec generalized_sigma_tau_spec(const OpSymbol& Delta,
                                          const OpSymbol& d,
                                          const OpSymbol& sigma,
                                          const OpSymbol& tau,
                                          const CommutationHypotheses& declared);
DerivationSpec ternary_spec(const OpSymbol& d1, const OpSymbol& d2,
                            const OpSymbol& d3);

/// Closed form with no commutation hypotheses at all, computed entirely
/// inside the pair algebra:
///   f^n(ab) = sum_k C(n,k) delta^{n-k}(1) * X2^k,
/// where X1 = g1(a)h1(b), X2 = g2(a)h2(b) and delta = x ↦ (X1+X2)*x − x*X2.
/// Equals iterate_expand(spec, n).collected exactly.
PairPoly general_leibniz_noncommutative(const DerivationSpec& spec,
                                        std::uint64_t n);

}  // namespace leibniz

#endif  // LEIBNIZ_EXPAND_HPP
