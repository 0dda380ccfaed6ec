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

#ifndef LEIBNIZ_SELFTEST_HPP
#define LEIBNIZ_SELFTEST_HPP

#include <cstdint>
#include <vector>

#include "leibniz/expand.hpp"
#include "leibniz/report.hpp"
#include "leibniz/rng.hpp"

namespace leibniz {

struct SelftestConfig {
  std::uint64_t seed = 1;
  /// Cap for symbolic suites (expansion sizes grow as 2^n).
  int n_max_symbolic = 10;
  /// Cap for concrete suites; effective cap is min of this and n_max_symbolic.
  int n_max_concrete = 6;
  int random_specs = 20;
  std::uint64_t trials = 25;
};

/// A random two-summand derivation over a 2–4 symbol alphabet; slots may be
/// I. When `declare_commuting`, (g1,g2) and (h1,h2) are added to hyp.
DerivationSpec random_spec(Rng& rng, bool declare_commuting);

/// Runs every identity suite: algebra ring laws, closed forms against the
/// iterated oracle, delta powers symbolic and concrete, catalog validation
/// and the symbolic-vs-numeric soundness bridge. Deterministic per seed.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config);

}  // namespace leibniz

#endif  // LEIBNIZ_SELFTEST_HPP
