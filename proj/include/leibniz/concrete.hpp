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
// Concrete exact algebras (rational matrices, truncated polynomials) and
// assignments of formal symbols to linear maps on them. These are the
// numeric oracles every symbolic identity is evaluated against.

#ifndef LEIBNIZ_CONCRETE_HPP
#define LEIBNIZ_CONCRETE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "leibniz/op_algebra.hpp"
#include "leibniz/ratmat.hpp"
#include "leibniz/rng.hpp"
#include "leibniz/scalar.hpp"
#include "leibniz/truncpoly.hpp"

namespace leibniz {

/// Knobs for random element generation: integer entries in [lo, hi], an
/// entry kept nonzero with probability density_per_mille/1000, and for
/// truncated polynomials a degree cap (< 0 means the full degree range).
struct SampleConfig {
  std::int64_t lo = -3;
  std::int64_t hi = 3;
  std::uint64_t density_per_mille = 1000;
  int max_degree = -1;
};

/// A finite-dimensional exact algebra: either dim x dim rational matrices or
/// rationals[x] mod x^m. Satisfies the UnitalRing concept with a variant
/// element type; mixing elements of different rings is a logic error.
class ConcreteRing {
 public:
  enum class Kind { Matrix, TruncPoly };

  using Element = std::variant<RatMatrix, TruncPoly>;

  static ConcreteRing matrix(std::size_t dim);
  static ConcreteRing poly_trunc(std::size_t modulus_degree);

  Kind kind() const { return kind_; }
  /// Matrix dimension or polynomial modulus degree.
  std::size_t param() const { return param_; }
  bool commutative() const { return kind_ == Kind::TruncPoly; }

  Element zero() const;
  Element one() const;
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  Element scale(const Scalar& c, const Element& x) const;
  bool equal(const Element& x, const Element& y) const;

  /// A linear basis (matrix units / monomials). Two linear maps agree on the
  /// whole ring iff they agree here.
  std::vector<Element> basis() const;

  Element random_element(const SampleConfig& cfg, Rng& rng) const;

  std::string describe() const;  // "matrix 3", "polytrunc 6"

  friend bool operator==(const ConcreteRing& a, const ConcreteRing& b) = default;

 private:
  ConcreteRing(Kind kind, std::size_t param) : kind_(kind), param_(param) {}

  Kind kind_;
  std::size_t param_;
};

std::string element_str(const ConcreteRing::Element& x);

/// A rational-linear map on a concrete ring.
class ConcreteMap {
 public:
  enum class Kind {
    Identity,
    LeftMul,     // x ↦ c·x
    RightMul,    // x ↦ x·c
    InnerDer,    // x ↦ c·x − x·c
    InnerGenDer, // x ↦ b1·x − x·b2
    ConjEndo,    // x ↦ u·x·u⁻¹
    FormalDiff,  // d/dx, truncated polynomials only
    Compose,     // [m1, m2, ...] applied right to left, like words
  };

  static ConcreteMap identity();
  static ConcreteMap left_mul(ConcreteRing::Element c);
  static ConcreteMap right_mul(ConcreteRing::Element c);
  static ConcreteMap inner_der(ConcreteRing::Element c);
  static ConcreteMap inner_gen_der(ConcreteRing::Element b1,
                                   ConcreteRing::Element b2);
  /// Validates invertibility at construction; throws Error when u is
  /// singular or not a matrix.
  static ConcreteMap conj_endo(const ConcreteRing::Element& u);
  static ConcreteMap formal_diff();
  static ConcreteMap compose(std::vector<ConcreteMap> maps);

  Kind kind() const { return kind_; }

  ConcreteRing::Element apply(const ConcreteRing& ring,
                              const ConcreteRing::Element& x) const;

  std::string describe() const;

 private:
  ConcreteMap(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<ConcreteRing::Element> operands_;
  std::vector<ConcreteMap> children_;
};

/// Binding of formal symbols to concrete maps over one ring, plus the
/// concrete realization of f itself. "I" is implicitly the identity.
struct MapEnv {
  ConcreteRing ring;
  std::map<std::string, ConcreteMap> assignments;
  ConcreteMap f_realization = ConcreteMap::identity();
  SampleConfig sampling;

  const ConcreteMap& lookup(const OpSymbol& symbol) const;
};

/// Applies a composition word right-to-left (last symbol acts first).
/// Throws UnboundSymbol for symbols missing from env.
ConcreteRing::Element eval_word(const OpWord& word, const MapEnv& env,
                                const ConcreteRing::Element& x);

/// Interprets a formal sum: sum of coeff · U(a) · V(b) over all terms.
/// The empty sum evaluates to 0. Parallelized over terms for large sums.
ConcreteRing::Element eval_pairpoly(const PairPoly& p, const MapEnv& env,
                                    const ConcreteRing::Element& a,
                                    const ConcreteRing::Element& b);

/// f applied n times to the ring product a·b — the numeric brute-force
/// oracle for f^n(ab).
ConcreteRing::Element brute_force_power(const MapEnv& env, std::uint64_t n,
                                        const ConcreteRing::Element& a,
                                        const ConcreteRing::Element& b);

}  // namespace leibniz

#endif  // LEIBNIZ_CONCRETE_HPP
