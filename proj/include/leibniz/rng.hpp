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

#ifndef LEIBNIZ_RNG_HPP
#define LEIBNIZ_RNG_HPP

#include <cstdint>

namespace leibniz {

// SplitMix64. The standard <random> engines are deterministic but the
// distributions are not specified, and every report in this project must be
// byte-identical for a given seed, so the whole sampling path is pinned here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive. Modulo bias is irrelevant for the
  /// tiny ranges used here; determinism is what matters.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  /// True with probability per_mille/1000.
  bool chance(std::uint64_t per_mille) { return next() % 1000 < per_mille; }

  /// Independent stream for trial `index` under `seed`. Trials sampled from
  /// forked streams are identical no matter how the trial loop is scheduled
  /// across threads.
  static Rng fork(std::uint64_t seed, std::uint64_t index) {
    Rng mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return Rng(mixer.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace leibniz

#endif  // LEIBNIZ_RNG_HPP
