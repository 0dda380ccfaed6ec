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
// Randomized (seeded, reproducible) validators for concrete models: does the
// bound f really satisfy its two-summand identity, and do the declared
// commutation hypotheses actually hold for the assigned maps?

#ifndef LEIBNIZ_VALIDATE_HPP
#define LEIBNIZ_VALIDATE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/concrete.hpp"
#include "leibniz/expand.hpp"
#include "leibniz/report.hpp"

namespace leibniz {

struct ValidateOptions {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  /// Check map identities on the ring's linear basis instead of random
  /// samples — exact, since all maps are linear.
  bool exhaustive_basis = false;
};

/// Checks f(a·b) = g1(a)h1(b) + g2(a)h2(b) on random pairs. Failure is a
/// report outcome (first counterexample included), never an exception.
SuiteResult validate_spec(const DerivationSpec& spec, const MapEnv& env,
                          const ValidateOptions& opts);

/// Checks S∘T = T∘S pointwise for every declared pair of symbols.
SuiteResult validate_commutation(const CommutationHypotheses& hyp,
                                 const MapEnv& env,
                                 const ValidateOptions& opts);

/// Same check for explicitly named maps (model files declare commutation on
/// map names, independent of any formal spec).
SuiteResult validate_map_commutation(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const ConcreteRing& ring, const std::map<std::string, ConcreteMap>& maps,
    const SampleConfig& sampling, const ValidateOptions& opts);

}  // namespace leibniz

#endif  // LEIBNIZ_VALIDATE_HPP
