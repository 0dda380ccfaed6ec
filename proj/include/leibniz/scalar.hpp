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

#ifndef LEIBNIZ_SCALAR_HPP
#define LEIBNIZ_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace leibniz {

/// Exact arbitrary-precision rational coefficient. GMP keeps values in
/// canonical reduced form as long as every raw numerator/denominator
/// construction goes through scalar_from_string / make_scalar below.
using Scalar = mpq_class;

/// num/den constructor that canonicalizes (mpq_class(n, d) alone does not).
Scalar make_scalar(long num, long den = 1);

/// Parses "3", "-2", "5/4". Throws ParseError on anything else
/// (including a zero denominator).
Scalar scalar_from_string(const std::string& text);

/// Canonical decimal text, e.g. "-5", "1/2". Inverse of scalar_from_string.
std::string scalar_to_string(const Scalar& value);

/// Binomial coefficient C(n, k), exact; 0 when k > n.
Scalar binomial(std::uint64_t n, std::uint64_t k);

}  // namespace leibniz

#endif  // LEIBNIZ_SCALAR_HPP
