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

#ifndef LEIBNIZ_TRUNCPOLY_HPP
#define LEIBNIZ_TRUNCPOLY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Rational polynomial truncated modulo x^m: coefficients of degrees
/// 0 .. m-1, products drop everything at degree m and above.
class TruncPoly {
 public:
  explicit TruncPoly(std::size_t modulus_degree)
      : c_(modulus_degree, Scalar(0)) {}

  static TruncPoly one(std::size_t modulus_degree);
  /// x^k, or zero when k >= m.
  static TruncPoly monomial(std::size_t modulus_degree, std::size_t k,
                            Scalar coeff = Scalar(1));

  std::size_t modulus_degree() const { return c_.size(); }
  Scalar& coeff(std::size_t k) { return c_[k]; }
  const Scalar& coeff(std::size_t k) const { return c_[k]; }

  TruncPoly add(const TruncPoly& other) const;
  TruncPoly sub(const TruncPoly& other) const;
  TruncPoly mul(const TruncPoly& other) const;
  TruncPoly scale(const Scalar& c) const;

  /// Formal derivative of the stored representative.
  TruncPoly derivative() const;

  bool is_zero() const;

  /// Coefficient list from degree 0, full length: [0,0,0,20,0,0].
  std::string str() const;

  friend bool operator==(const TruncPoly& a, const TruncPoly& b) = default;

 private:
  std::vector<Scalar> c_;
};

}  // namespace leibniz

#endif  // LEIBNIZ_TRUNCPOLY_HPP
