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

#ifndef LEIBNIZ_PARALLEL_HPP
#define LEIBNIZ_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leibniz {

// All arithmetic is exact and addition commutes, so every parallel kernel in
// this project produces bit-identical results for any thread count. The
// thresholds keep small inputs on the serial path where threading only costs.
inline constexpr std::size_t kParallelTermProducts = 1u << 14;
inline constexpr std::size_t kParallelRawTerms = 1u << 12;
inline constexpr std::size_t kParallelEvalTerms = 512;

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

}  // namespace leibniz

#endif  // LEIBNIZ_PARALLEL_HPP
