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
// The formal pair-tensor algebra. Elements are exact-coefficient sums of
// terms  coeff * U(a) * V(b)  where U and V are composition words of named
// mappings. The product composes the two slots independently:
//
//   (c1, U1, V1) * (c2, U2, V2)  =  (c1*c2, U1∘U2, V1∘V2)
//
// extended bilinearly. The unit is I(a)*I(b), i.e. the plain product ab.
// Everything is an immutable value; all operations are pure.

#ifndef LEIBNIZ_OP_ALGEBRA_HPP
#define LEIBNIZ_OP_ALGEBRA_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// A named mapping symbol. Names are non-empty identifiers
/// ([A-Za-z_][A-Za-z0-9_]*). "I" is the reserved identity mapping.
class OpSymbol {
 public:
  explicit OpSymbol(std::string name);

  const std::string& name() const { return name_; }
  bool is_identity() const { return name_ == "I"; }

  static OpSymbol identity() { return OpSymbol("I"); }
  static bool valid_name(const std::string& name);

  friend std::strong_ordering operator<=>(const OpSymbol& a, const OpSymbol& b) {
    return a.name_ <=> b.name_;
  }
  friend bool operator==(const OpSymbol& a, const OpSymbol& b) = default;

 private:
  std::string name_;
};

/// A finite composition word. [s1, s2, ..., sm] denotes s1∘s2∘...∘sm, so the
/// last symbol acts first, matching the juxtaposition s1s2(a) = s1(s2(a)).
/// The empty word is the identity mapping; "I" is stripped on construction
/// and never appears inside a non-empty word.
class OpWord {
 public:
  OpWord() = default;
  explicit OpWord(std::vector<OpSymbol> symbols);
  explicit OpWord(std::initializer_list<const char*> names);

  bool empty() const { return symbols_.empty(); }
  std::size_t size() const { return symbols_.size(); }
  const std::vector<OpSymbol>& symbols() const { return symbols_; }

  /// Word text: "g1.g2" for g1∘g2, "I" for the empty word.
  std::string str() const;

  /// Symbols reordered lexicographically by name. Only meaningful when the
  /// symbols pairwise commute; callers must check that first.
  OpWord sorted() const;

  friend std::strong_ordering operator<=>(const OpWord& a, const OpWord& b);
  friend bool operator==(const OpWord& a, const OpWord& b) = default;

 private:
  std::vector<OpSymbol> symbols_;
};

/// Composition u∘v of two words: concatenation, no reordering.
OpWord word_compose(const OpWord& u, const OpWord& v);

/// One term coeff * a_word(a) * b_word(b). Terms with zero coefficient are
/// only ever kept in raw (uncollected) expansions.
struct PairTerm {
  Scalar coeff;
  OpWord a_word;
  OpWord b_word;

  friend bool operator==(const PairTerm& x, const PairTerm& y) = default;
};

/// The (a_word, b_word) key of a term, ordered lexicographically on a_word
/// then b_word — the canonical display order.
struct TermKey {
  OpWord a_word;
  OpWord b_word;

  friend std::strong_ordering operator<=>(const TermKey& x, const TermKey& y);
  friend bool operator==(const TermKey& x, const TermKey& y) = default;
};

/// Exact-coefficient formal sum of pair terms in collected canonical form:
/// no duplicate keys, no zero coefficients, keys ordered canonically.
class PairPoly {
 public:
  using TermMap = std::map<TermKey, Scalar>;

  PairPoly() = default;

  static PairPoly zero() { return PairPoly(); }
  static PairPoly term(Scalar coeff, OpWord a_word, OpWord b_word);

  /// Adds coeff to the (a, b) slot, erasing the slot if the sum vanishes.
  void add_term(const TermKey& key, const Scalar& coeff);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Coefficient of the (a, b) slot; 0 when absent.
  Scalar coeff(const OpWord& a_word, const OpWord& b_word) const;

  /// Sum of all coefficients (collection-invariant of raw expansions).
  Scalar coefficient_sum() const;

  friend bool operator==(const PairPoly& p, const PairPoly& q) = default;

 private:
  TermMap terms_;
};

/// The unit I(a)*I(b) of the pair algebra.
PairPoly otimes_identity();

/// Coefficient-wise sum.
PairPoly pair_add(const PairPoly& p, const PairPoly& q);

/// Coefficient-wise scaling; c = 0 annihilates.
PairPoly scalar_mul(const Scalar& c, const PairPoly& p);

PairPoly negate(const PairPoly& p);
PairPoly pair_sub(const PairPoly& p, const PairPoly& q);

/// Bilinear product: every term pair composes slot-wise, like terms collect,
/// zeros drop. Runs in parallel for large inputs; identical result either way.
PairPoly pair_otimes(const PairPoly& p, const PairPoly& q);

/// n-fold product; n = 0 gives the unit.
PairPoly otimes_pow(const PairPoly& p, std::uint64_t n);

/// Unordered pairs of symbols declared to commute under composition.
/// I commutes with everything and a symbol with itself; neither is stored.
class CommutationHypotheses {
 public:
  CommutationHypotheses() = default;

  void add(const OpSymbol& s, const OpSymbol& t);
  bool commutes(const OpSymbol& s, const OpSymbol& t) const;
  bool empty() const { return pairs_.empty(); }

  const std::set<std::pair<std::string, std::string>>& pairs() const {
    return pairs_;
  }

  friend bool operator==(const CommutationHypotheses& a,
                         const CommutationHypotheses& b) = default;

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

/// Rewrites every word into name-sorted form and collects like terms.
/// Requires all symbols co-occurring in a word to pairwise commute under
/// `hyp`; throws NonCommutingWord otherwise. Idempotent, preserves the
/// coefficient sum.
PairPoly normalize_commutative(const PairPoly& p,
                               const CommutationHypotheses& hyp);

/// Canonical text, one term per line in key order:
///   <coeff> * <a_word>(a) * <b_word>(b)
/// e.g. "3 * g1.g2(a) * h1.h2(b)". The zero sum prints as the single line
/// "0". Serialization is total: equal values print identically.
std::vector<std::string> to_canonical_lines(const PairPoly& p);
std::string to_canonical_string(const PairPoly& p);

/// Inverse of to_canonical_string. Throws ParseError (with a line number)
/// on malformed input.
PairPoly parse_pairpoly(const std::string& text);

}  // namespace leibniz

#endif  // LEIBNIZ_OP_ALGEBRA_HPP
