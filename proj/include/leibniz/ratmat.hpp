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

#ifndef LEIBNIZ_RATMAT_HPP
#define LEIBNIZ_RATMAT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

/// Dense square matrix over the rationals, exact arithmetic throughout.
class RatMatrix {
 public:
  explicit RatMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, Scalar(0)) {}

  static RatMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Scalar& at(std::size_t row, std::size_t col) { return e_[row * dim_ + col]; }
  const Scalar& at(std::size_t row, std::size_t col) const {
    return e_[row * dim_ + col];
  }

  RatMatrix add(const RatMatrix& other) const;
  RatMatrix sub(const RatMatrix& other) const;
  RatMatrix mul(const RatMatrix& other) const;
  RatMatrix scale(const Scalar& c) const;

  bool is_zero() const;

  /// Gauss-Jordan inverse; nullopt when singular.
  std::optional<RatMatrix> inverse() const;

  /// Row-major literal: [[1,2],[3,1/2]].
  std::string str() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> e_;
};

}  // namespace leibniz

#endif  // LEIBNIZ_RATMAT_HPP
