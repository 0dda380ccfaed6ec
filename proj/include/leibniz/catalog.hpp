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

#ifndef LEIBNIZ_CATALOG_HPP
#define LEIBNIZ_CATALOG_HPP

#include <string>
#include <vector>

#include "leibniz/concrete.hpp"
#include "leibniz/expand.hpp"

namespace leibniz {

/// A ready-made validated (spec, environment) pair.
struct CatalogEntry {
  std::string name;
  DerivationSpec spec;
  MapEnv env;
};

/// Built-in models, one per derivation flavour:
///   inner-derivation-3x3      d_c on 3x3 matrices, ordinary derivation
///   conj-twisted-2x2          d = [c, u·x·u⁻¹] with uc = cu, so the twist
///                             and d commute
///   inner-generalized-2x2     x ↦ b1x − xb2 split as delta(a)b + a·d_{b2}(b)
///   ternary-3x3               the other split: d_{b1}(a)b + a·delta(b)
///   formal-diff-trunc6        d/dx on rationals[x] mod x^6 (samples stay
///                             below the truncation boundary)
/// Every entry passes validate_spec and validate_commutation.
std::vector<CatalogEntry> builtin_model_catalog();

}  // namespace leibniz

#endif  // LEIBNIZ_CATALOG_HPP
