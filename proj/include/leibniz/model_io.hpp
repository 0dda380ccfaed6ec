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
// Text formats.
//
// Spec files (formal derivations):
//   derivation f
//   summand g1 h1
//   summand g2 h2
//   commute g1 g2        # zero or more
// Comments start with '#'. Exactly two summand lines are required.
//
// Model files (concrete realizations):
//   ring matrix 3   |   ring polytrunc 6
//   elem c = [[0,1,0],[0,0,1],[0,0,0]]        # matrices, row-major
//   elem p = [1,0,2/3]                        # polynomials, from degree 0
//   map d = inner c
//   map s = conj u
//   map f = innergen b1 b2
//   map g = left c   |   right c   |   identity   |   diff
//   map h = compose d s                       # d∘s, s applied first
//   assign f g1 h1 g2 h2                      # maps for the five spec slots
//   commute d s                               # zero or more, map names
//   sample range -3 3 | sample maxdeg 2 | sample density 800
// All parse errors carry 1-based line numbers.

#ifndef LEIBNIZ_MODEL_IO_HPP
#define LEIBNIZ_MODEL_IO_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/concrete.hpp"
#include "leibniz/expand.hpp"

namespace leibniz {

DerivationSpec parse_spec(std::istream& in);
DerivationSpec parse_spec_file(const std::string& path);

struct ModelFile {
  ConcreteRing ring = ConcreteRing::matrix(2);
  std::map<std::string, ConcreteRing::Element> elems;
  std::map<std::string, ConcreteMap> maps;
  /// Map names for the (f, g1, h1, g2, h2) slots; "I" allowed.
  std::optional<std::array<std::string, 5>> assign;
  std::vector<std::pair<std::string, std::string>> commute;
  SampleConfig sampling;
};

ModelFile parse_model(std::istream& in);
ModelFile parse_model_file(const std::string& path);

/// Element literal in the model-file syntax, shaped for `ring`.
ConcreteRing::Element parse_element_literal(const ConcreteRing& ring,
                                            const std::string& text);

/// Resolves the model's assign line against the spec's symbols, producing
/// the environment used for evaluation. Throws ParseError when the model
/// has no assign line or references undeclared maps, and Error when the
/// same symbol would be bound to two different slots.
MapEnv bind_model(const DerivationSpec& spec, const ModelFile& model);

}  // namespace leibniz

#endif  // LEIBNIZ_MODEL_IO_HPP
