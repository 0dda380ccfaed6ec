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
// Straight-line serial implementations of the parallelized kernels. These
// are the ground truth the OpenMP paths are tested against, and the baseline
// for bench_kernels. Keep them obvious; never optimize them.

#ifndef LEIBNIZ_REFERENCE_HPP
#define LEIBNIZ_REFERENCE_HPP

#include <cstdint>
#include <vector>

#include "leibniz/concrete.hpp"
#include "leibniz/expand.hpp"
#include "leibniz/op_algebra.hpp"

namespace leibniz::reference {

/// Term-by-term double loop, no threading.
PairPoly pair_otimes(const PairPoly& p, const PairPoly& q);

/// Distribution by repeated appending: result order is the enumeration order
/// of choice sequences, first factor most significant.
std::vector<PairTerm> iterate_expand_raw(const DerivationSpec& spec,
                                         std::uint64_t n);

/// Serial term sum.
ConcreteRing::Element eval_pairpoly(const PairPoly& p, const MapEnv& env,
                                    const ConcreteRing::Element& a,
                                    const ConcreteRing::Element& b);

}  // namespace leibniz::reference

#endif  // LEIBNIZ_REFERENCE_HPP
